#include "dualgraph/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dualgraph {

SymMatrix::SymMatrix(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative matrix order");
  entries_.assign(static_cast<std::size_t>(order) * order, 0);
}

std::size_t SymMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= order_ || j >= order_)
    throw std::invalid_argument("matrix index out of range");
  return static_cast<std::size_t>(i) * order_ + j;
}

void SymMatrix::set(int i, int j, long long value) {
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

IntersectionMatrix intersection_matrix(const WeightedGraph& g) {
  IntersectionMatrix m;
  for (const Vertex& v : g.vertices()) m.vertex_order.push_back(v.id);
  int n = static_cast<int>(m.vertex_order.size());
  m.entries = SymMatrix(n);
  for (int i = 0; i < n; ++i)
    m.entries.set(i, i, -g.weight(m.vertex_order[i]));
  auto position = [&m](VertexId id) {
    return static_cast<int>(std::lower_bound(m.vertex_order.begin(),
                                             m.vertex_order.end(), id) -
                            m.vertex_order.begin());
  };
  for (const Edge& e : g.edges())
    m.entries.set(position(e.first), position(e.second), 1);
  return m;
}

namespace {

std::vector<std::vector<Bigint>> working_copy(const SymMatrix& m, int order) {
  std::vector<std::vector<Bigint>> a(order, std::vector<Bigint>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) a[i][j] = m.at(i, j);
  return a;
}

// Bareiss elimination. Each division is exact; after step k the entry
// a[k][k] equals the (k+1)-st leading principal minor of the row-permuted
// matrix, and the final corner entry is the determinant up to the sign of
// the permutation.
Bigint bareiss_determinant(std::vector<std::vector<Bigint>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Bigint prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

Bigint determinant(const SymMatrix& m) {
  return bareiss_determinant(working_copy(m, m.order()));
}

Bigint determinant(const IntersectionMatrix& m) { return determinant(m.entries); }

Bigint determinant(const WeightedGraph& g) {
  return determinant(intersection_matrix(g));
}

bool is_negative_definite(const SymMatrix& m) {
  int n = m.order();
  auto a = working_copy(m, n);
  Bigint prev = 1;
  for (int k = 0; k < n; ++k) {
    // a[k][k] is the (k+1)-st leading principal minor; definiteness needs
    // it nonzero with sign (-1)^(k+1), which also keeps the pivot usable.
    bool want_negative = (k % 2 == 0);
    if (a[k][k] == 0 || (a[k][k] < 0) != want_negative) return false;
    if (k + 1 == n) break;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

bool is_negative_definite(const IntersectionMatrix& m) {
  return is_negative_definite(m.entries);
}

bool is_negative_definite(const WeightedGraph& g) {
  return is_negative_definite(intersection_matrix(g));
}

std::vector<Bigint> leading_principal_minors(const SymMatrix& m) {
  std::vector<Bigint> out;
  for (int k = 1; k <= m.order(); ++k)
    out.push_back(bareiss_determinant(working_copy(m, k)));
  return out;
}

}  // namespace dualgraph
