#pragma once

/**
 * Report emission. Every report is a sequence of flat records, each carrying
 * a "record" kind field. In `records` format each record is one compact JSON
 * object per line; in `table` format consecutive records of the same kind
 * share a header row and values are printed in the same textual form.
 *
 * Arbitrary-precision values (sigma, Delta) are emitted as decimal strings.
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "msc/io.hpp"
#include "msc/verify.hpp"

namespace msc {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Table, Records };
OutputFormat parse_output_format(std::string_view name);

class ReportWriter {
 public:
  ReportWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void emit(const Json& record);

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> header_;
  std::string kind_;
};

Json set_json(const VertexSet& s);
Json distance_json(const Distance& d);

Json to_record(const PairVerdict& v);
Json to_record(const SetVerdict& v);
Json to_record(const CounterexampleRecord& r);
Json to_record(const IdentityFailure& f, std::string_view graph_id);

}  // namespace msc
