#pragma once

/**
 * Delta(G, A, B) = sigma(G - A) * sigma(G - B) - sigma(G) * sigma(G - A - B)
 * and executable forms of its identities:
 *
 *  - neighborhood expansion for disjoint A, B:
 *        Delta(G, A, B) = - sum_{independent W in A} Delta(G - A, N(W), B)
 *  - overlap bound for C = A n B != {}:
 *        Delta(G, A, B) < Delta(G - C, A \ C, B \ C)
 *
 * Delta(G, u, v) is the singleton case.
 */

#include <string>
#include <utility>

#include "msc/sigma.hpp"

namespace msc {

using Integer = boost::multiprecision::cpp_int;

class DeltaValue {
 public:
  DeltaValue() = default;
  explicit DeltaValue(Integer value) : value_(std::move(value)) {}

  const Integer& value() const { return value_; }
  /// -1, 0 or +1.
  int sign() const { return value_.sign(); }
  std::string to_string() const { return value_.str(); }

  friend bool operator==(const DeltaValue& a, const DeltaValue& b) { return a.value_ == b.value_; }
  friend bool operator<(const DeltaValue& a, const DeltaValue& b) { return a.value_ < b.value_; }

 private:
  Integer value_ = 0;
};

/// The four sigma values behind one Delta evaluation.
struct DeltaTerms {
  Count whole;         ///< sigma(G)
  Count without_a;     ///< sigma(G - A)
  Count without_b;     ///< sigma(G - B)
  Count without_both;  ///< sigma(G - A - B)
  DeltaValue delta;
};

DeltaTerms delta_terms(SigmaEngine& engine, const VertexSet& a, const VertexSet& b);
DeltaTerms delta_terms(const SigmaTable& table, const VertexSet& a, const VertexSet& b);
DeltaValue delta_sets(SigmaEngine& engine, const VertexSet& a, const VertexSet& b);
DeltaValue delta_sets(const Graph& g, const VertexSet& a, const VertexSet& b);

/// u == v is allowed and evaluates Delta(G, {u}, {u}).
DeltaValue delta_vertices(const Graph& g, int u, int v);

/// Requires A n B = {} and |A| <= kSubsetEnumerationCap.
DeltaValue delta_neighborhood_expansion(const Graph& g, const VertexSet& a, const VertexSet& b);

struct OverlapBound {
  DeltaValue whole;    ///< Delta(G, A, B)
  DeltaValue reduced;  ///< Delta(G - C, A \ C, B \ C), C = A n B
};

/// Requires A n B != {}.
OverlapBound delta_nondisjoint_bound(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace msc
