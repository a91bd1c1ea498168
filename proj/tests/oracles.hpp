#pragma once

// Reference implementations the library is checked against. Everything here
// favours obviousness over speed: plain exhaustive enumeration, textbook
// cofactor expansion, and a floating point eigenvalue solver. None of the
// code under test is reused.

#include <Eigen/Dense>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dualgraph/embedding.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/matrix.hpp"
#include "dualgraph/modification.hpp"

namespace oracles {

inline constexpr double kEigenThreshold = -1e-9;

inline bool eigen_negative_definite(const dualgraph::SymMatrix& m) {
  if (m.order() == 0) return true;
  Eigen::MatrixXd a(m.order(), m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      a(i, j) = static_cast<double>(m.at(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  for (int i = 0; i < m.order(); ++i)
    if (!(solver.eigenvalues()(i) < kEigenThreshold)) return false;
  return true;
}

inline dualgraph::Bigint cofactor_determinant(
    const std::vector<std::vector<dualgraph::Bigint>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  dualgraph::Bigint det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<dualgraph::Bigint>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<dualgraph::Bigint> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    dualgraph::Bigint term = a[0][col] * cofactor_determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

inline std::vector<std::vector<dualgraph::Bigint>> to_rows(
    const dualgraph::SymMatrix& m) {
  std::vector<std::vector<dualgraph::Bigint>> rows(
      m.order(), std::vector<dualgraph::Bigint>(m.order()));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

inline dualgraph::Bigint cofactor_determinant(const dualgraph::SymMatrix& m) {
  return cofactor_determinant(to_rows(m));
}

// Every injective vertex map small -> big that preserves genus, weight and
// edges, in lexicographic order of the target tuples (sources ascending).
// In bijective mode the map must also reflect non-edges, making it an
// isomorphism.
inline std::vector<dualgraph::VertexMap> brute_embeddings(
    const dualgraph::WeightedGraph& small, const dualgraph::WeightedGraph& big,
    bool bijective) {
  using dualgraph::VertexId;
  std::vector<dualgraph::VertexMap> found;
  if (bijective && (small.vertex_count() != big.vertex_count() ||
                    small.edge_count() != big.edge_count()))
    return found;

  std::vector<VertexId> sources;
  for (const auto& v : small.vertices()) sources.push_back(v.id);
  std::vector<std::pair<VertexId, VertexId>> partial;

  auto complete = [&]() {
    dualgraph::VertexMap m(partial);
    for (const auto& [a, b] : small.edges())
      if (!big.has_edge(m.at(a), m.at(b))) return;
    if (bijective) {
      for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j) {
          bool in_small = small.has_edge(sources[i], sources[j]);
          bool in_big = big.has_edge(m.at(sources[i]), m.at(sources[j]));
          if (in_small != in_big) return;
        }
    }
    found.push_back(std::move(m));
  };

  auto extend = [&](auto&& self, std::size_t index) -> void {
    if (index == sources.size()) {
      complete();
      return;
    }
    const auto& sv = small.vertex(sources[index]);
    for (const auto& tv : big.vertices()) {
      bool used = false;
      for (const auto& [s, t] : partial)
        if (t == tv.id) used = true;
      if (used || tv.genus != sv.genus || tv.weight != sv.weight) continue;
      partial.push_back({sv.id, tv.id});
      self(self, index + 1);
      partial.pop_back();
    }
  };
  extend(extend, 0);
  return found;
}

inline std::optional<dualgraph::VertexMap> brute_isomorphism(
    const dualgraph::WeightedGraph& a, const dualgraph::WeightedGraph& b) {
  auto all = brute_embeddings(a, b, true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// Every graph reachable from the single (0,1) vertex by at most depth steps,
// with the deterministic fresh-id labeling. Deduplicated on the labeled
// graph, not up to isomorphism, so membership tests must search with an
// isomorphism oracle.
inline std::vector<dualgraph::WeightedGraph> all_regular_graphs(int depth) {
  using dualgraph::WeightedGraph;
  std::vector<WeightedGraph> all{dualgraph::point_graph()};
  std::vector<WeightedGraph> frontier = all;
  std::set<std::string> seen{dualgraph::graph_key(all[0])};
  for (int d = 0; d < depth; ++d) {
    std::vector<WeightedGraph> next;
    for (const WeightedGraph& g : frontier) {
      std::vector<dualgraph::ModStep> steps;
      for (const auto& v : g.vertices())
        steps.push_back(dualgraph::ModStep::at_vertex(v.id, g.fresh_id()));
      for (const auto& [a, b] : g.edges())
        steps.push_back(dualgraph::ModStep::at_edge(a, b, g.fresh_id()));
      for (const auto& step : steps) {
        WeightedGraph child = dualgraph::apply_step(g, step);
        if (seen.insert(dualgraph::graph_key(child)).second) {
          next.push_back(child);
          all.push_back(child);
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Is g isomorphic to some graph the enumeration reaches? Sound for any g
// with at most depth+1 vertices.
inline bool enumerated_regular(const dualgraph::WeightedGraph& g, int depth) {
  for (const auto& r : all_regular_graphs(depth))
    if (brute_isomorphism(g, r)) return true;
  return false;
}

}  // namespace oracles
