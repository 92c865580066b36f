#include "msc/report.hpp"

#include <ostream>

namespace msc {

namespace {

std::string cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "records") return OutputFormat::Records;
  throw InvalidArgument("unknown output format '" + std::string(name) + "'");
}

void ReportWriter::emit(const Json& record) {
  if (format_ == OutputFormat::Records) {
    out_ << record.dump() << '\n';
    return;
  }
  std::vector<std::string> keys;
  for (const auto& [key, value] : record.items())
    if (key != "record") keys.push_back(key);
  const std::string kind = record.value("record", "");
  if (kind != kind_ || keys != header_) {
    out_ << "# " << kind << '\n';
    for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "\t" : "") << keys[i];
    out_ << '\n';
    kind_ = kind;
    header_ = keys;
  }
  for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "\t" : "") << cell(record.at(keys[i]));
  out_ << '\n';
}

Json set_json(const VertexSet& s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v);
  return out;
}

Json distance_json(const Distance& d) {
  return d.is_finite() ? Json(d.value()) : Json("inf");
}

Json to_record(const PairVerdict& v) {
  return Json{{"record", "pair"},
              {"graph", v.graph_id},
              {"u", v.u},
              {"v", v.v},
              {"distance", distance_json(v.distance)},
              {"delta", v.delta.to_string()},
              {"sign", v.delta.sign()},
              {"predicted_sign", v.predicted_sign},
              {"conforms", v.conforms}};
}

Json to_record(const SetVerdict& v) {
  return Json{{"record", "set"},
              {"graph", v.graph_id},
              {"a", set_json(v.a)},
              {"b", set_json(v.b)},
              {"parity", std::string(to_string(v.parity))},
              {"delta", v.delta.to_string()},
              {"sign", v.delta.sign()},
              {"conforms", v.conforms ? Json(*v.conforms) : Json(nullptr)}};
}

Json to_record(const CounterexampleRecord& r) {
  return Json{{"record", "counterexample"},
              {"graph", r.graph_id},
              {"graph6", emit_graph6(r.graph)},
              {"n", r.graph.order()},
              {"m", r.graph.edge_count()},
              {"u", r.u},
              {"v", r.v},
              {"sigma", r.sigma_whole.str()},
              {"sigma_without_u", r.sigma_without_u.str()},
              {"sigma_without_v", r.sigma_without_v.str()},
              {"sigma_without_uv", r.sigma_without_both.str()},
              {"delta", r.delta.to_string()},
              {"distance", distance_json(r.distance)},
              {"parity_graph", r.is_parity ? Json(*r.is_parity) : Json(nullptr)},
              {"bipartite", r.is_bipartite}};
}

Json to_record(const IdentityFailure& f, std::string_view graph_id) {
  return Json{{"record", "identity_failure"},
              {"graph", std::string(graph_id)},
              {"identity", std::string(to_string(f.identity))},
              {"trial_seed", f.trial_seed},
              {"detail", f.detail}};
}

}  // namespace msc
