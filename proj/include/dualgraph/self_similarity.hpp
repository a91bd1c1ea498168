#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualgraph/classification.hpp"
#include "dualgraph/embedding.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/modification.hpp"

namespace dualgraph {

// Certificate of self-similarity: a nontrivial modification of base whose
// result contains an isomorphic copy of base, the copy being cut out by the
// embedding.
struct SelfSimWitness {
  WeightedGraph base;
  ModSequence seq;  // seq.base == base, at least one step
  VertexMap embedding;
};

// Full re-check: base valid and connected, seq based at base and nonempty,
// and embedding a genuine embedding of base into the replayed result.
std::optional<Violation> verify_witness(const SelfSimWitness& w);

// Turns a sandwich certificate into a self-similarity certificate: blow up
// at the chosen vertex (smallest id by default), producing a fresh (0,1)
// root, then replay the witness's regular construction rooted there. The
// replay starts from a (0,1) vertex exactly as the construction does and
// steps never change weights elsewhere, so it grows a disjoint copy of the
// augmented graph; the embedding routes base through that copy.
SelfSimWitness plant_witness(const WeightedGraph& g, const SandwichWitness& sand,
                             std::optional<VertexId> at = std::nullopt);

// Stage k of a tower. Maps: phi_prev embeds stage k-1 into stage k,
// composite is the composition of all phi maps (base into stage k), and
// strict tracks base vertex ids through the rewriting (the identity, ids
// being stable). Stage 0 is the base with identity maps and no steps.
struct TowerStage {
  WeightedGraph graph;
  ModSequence seq_from_prev;
  VertexMap phi_prev;
  VertexMap composite;
  VertexMap strict;
};

struct Tower {
  std::vector<TowerStage> stages;  // stages[k] is stage k
};

// Iterates the witness: stage k+1 applies to stage k the modification
// induced by lifting the previous stage's steps along phi. Consecutive
// stages are compatible by construction and every phi extends the previous
// one on old ids.
Tower build_tower(const SelfSimWitness& w, int k_max);

struct Extraction {
  WeightedGraph regular;
  VertexMap embedding;  // base into the regular graph
  int depth;            // least admissible tower stage
};

// Walks the tower of w until no base vertex id lies in the image of the
// composite embedding, then deletes the strict transforms of all base
// vertices and keeps the component housing the embedded copy. That
// component is certified regular before returning; a failure there would
// contradict the witness and is thrown as std::logic_error. Returns
// std::nullopt when no stage up to k_max is admissible.
std::optional<Extraction> extract_sandwich(const SelfSimWitness& w, int k_max);

// Stage cap used by the command line tool when none is given.
inline constexpr int kDefaultTowerCap = 64;

struct SelfSimResult {
  Verdict verdict{Verdict::NoWithinBudget};
  std::optional<SelfSimWitness> witness;    // engaged iff verdict is Yes
  std::optional<SandwichWitness> sandwich;  // provenance of the verdict
  int budget{0};
  std::string reason;
};

// A graph is self-similar exactly when it is sandwiched: one direction
// plants a witness, the other extracts one. The decision therefore
// delegates to is_sandwiched and converts its certificate.
SelfSimResult is_self_similar(const WeightedGraph& g, int max_budget);

// Components spanned by the vertices a modification creates, after the
// strict transforms of all base vertices are deleted. Every component is a
// regular graph; the lemma suite checks exactly this.
std::vector<WeightedGraph> residual_components(const ModSequence& seq);

}  // namespace dualgraph
