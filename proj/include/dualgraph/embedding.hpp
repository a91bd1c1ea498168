#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dualgraph/graph.hpp"

namespace dualgraph {

// Partial injective map between vertex id spaces, kept sorted by source id.
// The same representation serves embeddings, strict transforms and witness
// isomorphisms; what distinguishes them is which checks they pass.
class VertexMap {
 public:
  VertexMap() = default;
  explicit VertexMap(std::vector<std::pair<VertexId, VertexId>> pairs);

  static VertexMap identity(const WeightedGraph& g);
  static VertexMap identity(const std::vector<VertexId>& ids);

  const std::vector<std::pair<VertexId, VertexId>>& pairs() const {
    return pairs_;
  }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::optional<VertexId> find(VertexId source) const;
  // Throw std::invalid_argument when the source id is not mapped.
  VertexId at(VertexId source) const;
  bool contains(VertexId source) const { return find(source).has_value(); }
  bool maps_to(VertexId target) const;

  // Throw std::invalid_argument when the source id is already mapped.
  void insert(VertexId source, VertexId target);

  bool is_injective() const;
  // Requires injectivity.
  VertexMap inverse() const;

  std::vector<VertexId> domain() const;
  std::vector<VertexId> image() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<std::pair<VertexId, VertexId>> pairs_;  // sorted by source
};

// outer(inner(v)); defined on the domain of inner, whose image must lie in
// the domain of outer.
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

// Checks that m is an embedding of source into target: total on the source
// vertices, injective, edge-preserving, and exact on genus and weight.
std::optional<Violation> check_embedding(const WeightedGraph& source,
                                         const WeightedGraph& target,
                                         const VertexMap& m);

// Isomorphism a -> b when one exists, minimal in lexicographic order of the
// (source id, target id) pair list; std::nullopt otherwise.
std::optional<VertexMap> find_isomorphism(const WeightedGraph& a,
                                          const WeightedGraph& b);

// Embeddings of small into big, in lexicographic order of their pair lists,
// at most limit of them. Backtracking with pruning on genus, weight and
// valency; intended for the small graphs of this calculus.
std::vector<VertexMap> find_embeddings(const WeightedGraph& small,
                                       const WeightedGraph& big,
                                       std::size_t limit);

}  // namespace dualgraph
