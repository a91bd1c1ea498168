#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "dualgraph/graph.hpp"

namespace dualgraph {

// Minors grow exponentially with the order, so verdicts are computed over
// arbitrary-precision integers; no floating point is involved anywhere.
using Bigint = boost::multiprecision::cpp_int;

// Dense symmetric integer matrix. set() writes both mirror entries.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order);

  int order() const { return order_; }
  long long at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, long long value);

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int order_ = 0;
  std::vector<long long> entries_;  // row-major
};

// Intersection matrix of a weighted graph: -weight(v) on the diagonal and 1
// for each edge, rows and columns ordered by ascending vertex id.
struct IntersectionMatrix {
  std::vector<VertexId> vertex_order;
  SymMatrix entries;
};

IntersectionMatrix intersection_matrix(const WeightedGraph& g);

// Exact determinant by fraction-free elimination with row pivoting.
Bigint determinant(const SymMatrix& m);
Bigint determinant(const IntersectionMatrix& m);
Bigint determinant(const WeightedGraph& g);

// Sylvester test: the leading principal minors must strictly alternate in
// sign starting negative. A single fraction-free elimination pass produces
// exactly those minors as its pivots, with early exit on first failure.
bool is_negative_definite(const SymMatrix& m);
bool is_negative_definite(const IntersectionMatrix& m);
bool is_negative_definite(const WeightedGraph& g);

// det of the top-left k-by-k submatrix for k = 1..order, each computed
// independently so zero minors are handled; mainly used for cross-checks.
std::vector<Bigint> leading_principal_minors(const SymMatrix& m);

}  // namespace dualgraph
