#pragma once

#include <optional>
#include <vector>

#include "dualgraph/embedding.hpp"
#include "dualgraph/graph.hpp"

namespace dualgraph {

// One rewriting step. A vertex step adds a fresh (0,1) vertex joined to the
// center and raises the center's weight by one. An edge step removes the
// center edge, adds a fresh (0,1) vertex joined to both of its endpoints and
// raises both endpoint weights by one.
struct ModStep {
  enum class Kind { Vertex, Edge };

  Kind kind{Kind::Vertex};
  VertexId center_a{-1};
  VertexId center_b{-1};  // second endpoint, edge steps only
  VertexId new_id{-1};

  static ModStep at_vertex(VertexId v, VertexId new_id);
  static ModStep at_edge(VertexId a, VertexId b, VertexId new_id);

  friend bool operator==(const ModStep&, const ModStep&) = default;
};

// A modification: the start graph together with the steps building it up.
struct ModSequence {
  WeightedGraph base;
  std::vector<ModStep> steps;

  friend bool operator==(const ModSequence&, const ModSequence&) = default;
};

// The strict transform sends every base vertex to its copy in the result.
// Ids are stable under rewriting, so the map is the identity on the base
// vertex set; it is recorded explicitly so that id bookkeeping stays
// auditable when maps are composed across stages.
struct TransformMaps {
  VertexMap strict;
};

struct ApplyResult {
  WeightedGraph result;
  TransformMaps maps;
};

WeightedGraph blowup_vertex(const WeightedGraph& g, VertexId v,
                            VertexId new_id);
WeightedGraph blowup_edge(const WeightedGraph& g, VertexId a, VertexId b,
                          VertexId new_id);
// Throws std::invalid_argument when the step does not apply.
WeightedGraph apply_step(const WeightedGraph& g, const ModStep& step);
// Inapplicable steps are reported with their index.
ApplyResult apply_sequence(const ModSequence& seq);

// Vertex subset plus a subset of the edges among them. Subgraphs are not
// required to be induced; the edge list matters to the transform rules.
struct Subgraph {
  std::vector<VertexId> vertices;  // ascending
  std::vector<Edge> edges;         // normalized, sorted

  Subgraph() = default;
  Subgraph(std::vector<VertexId> vertex_ids, std::vector<Edge> edge_list);
  static Subgraph full(const WeightedGraph& g);

  bool contains_vertex(VertexId id) const;
  bool contains_edge(VertexId a, VertexId b) const;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

std::optional<Violation> check_subgraph(const WeightedGraph& g,
                                        const Subgraph& sub);
bool subgraph_connected(const Subgraph& sub);
// Image of a subgraph under a vertex map covering its vertices.
Subgraph map_subgraph(const Subgraph& sub, const VertexMap& m);

// Tracks a connected subgraph of the base through every step of the
// sequence. Per step: a center vertex inside the subgraph contributes the
// new vertex and the new edge at it; a center edge keeps the new vertex and
// whichever new edges touch the subgraph, dropping the removed edge; centers
// fully outside leave the subgraph untouched. The result is connected.
Subgraph total_transform(const ModSequence& seq, Subgraph sub);

// Vertices at which blowdown preconditions hold, ascending.
std::vector<VertexId> blowdown_candidates(const WeightedGraph& g);

struct BlowdownResult {
  WeightedGraph result;
  ModStep undone;  // applying this step to result restores the input exactly
};

// Inverse rewriting at v, which must be a (0,1) vertex of valency 1 or 2.
// Valency 1: remove v, lower the neighbour's weight (it must be >= 2).
// Valency 2: the neighbours must be distinct, non-adjacent and of weight
// >= 2; remove v, join them, lower both weights. Violations are thrown as
// std::invalid_argument with a named reason.
BlowdownResult blowdown(const WeightedGraph& g, VertexId v);

struct InducedModification {
  ModSequence gamma_seq;       // lifted steps, based at gamma
  VertexMap lifted_embedding;  // result of delta_seq -> result of gamma_seq
};

// Lifts a modification of delta along an embedding emb of delta into gamma:
// a step at v maps to a step at emb(v), a step at <v,w> to a step at
// <emb(v),emb(w)>, and the running map is extended by new vertex -> new
// vertex. This is the minimal compatible choice: the lift adds no step
// beyond the images of the given ones.
InducedModification induced_modification(const ModSequence& delta_seq,
                                         const VertexMap& emb,
                                         const WeightedGraph& gamma);

}  // namespace dualgraph
