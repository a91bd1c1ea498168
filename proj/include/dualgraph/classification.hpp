#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualgraph/embedding.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/modification.hpp"

namespace dualgraph {

// Certificate that a graph can be built from a single (0,1) vertex.
// blowdown_order contracts the graph to that vertex; construction replays
// the inverse steps from the surviving point graph and reproduces the input
// once iso is applied (here always the identity, recorded for the document
// format to stay self-describing).
struct RegularityWitness {
  std::vector<VertexId> blowdown_order;
  ModSequence construction;
  VertexMap iso;
};

// Decides whether g arises from a single (0,1) vertex by rewriting.
// Fast rejections: connectivity, all genera zero, negative definiteness and
// |det| = 1; then an exhaustive backtracking search over blowdown choices,
// smallest candidate first, memoizing dead states. Determinism: the witness
// found is the one along the leftmost successful branch.
std::optional<RegularityWitness> is_regular(const WeightedGraph& g);

// Replays both halves of the witness from scratch; no search is involved.
std::optional<Violation> verify_regularity_witness(const WeightedGraph& g,
                                                   const RegularityWitness& w);

// Adds count fresh (0,1) leaves to each listed vertex. Leaf ids are
// allocated consecutively from fresh_id() in ascending host id order.
WeightedGraph attach_leaves(
    const WeightedGraph& g,
    const std::vector<std::pair<VertexId, int>>& leaves);

// Certificate that g embeds into a regular graph: the augmented graph is g
// with the listed leaves attached (input vertices keep their weights), the
// embedding is the inclusion, and regularity certifies the augmentation.
struct SandwichWitness {
  std::vector<std::pair<VertexId, int>> leaves;  // nonzero counts, ascending
  WeightedGraph augmented;
  RegularityWitness regularity;
  VertexMap embedding;
};

enum class Verdict { Yes, NoWithinBudget, DefinitelyNot };

struct SandwichResult {
  Verdict verdict{Verdict::NoWithinBudget};
  std::optional<SandwichWitness> witness;  // engaged iff verdict is Yes
  int budget{0};   // leaves used on success, budget exhausted otherwise
  std::string reason;  // definitely-not obstruction
};

// Budget used by the command line tool when none is given.
int default_leaf_budget(const WeightedGraph& g);

// Searches for a regular graph containing g. Candidate supergraphs are leaf
// augmentations of g; any regular supergraph can be contracted to one, so
// nothing else needs to be tried. Budgets are scanned in increasing order
// and assignments of each budget in lexicographic order over ascending
// vertex ids, so the first witness is deterministic and minimal.
//
// definitely-not is returned only on proven obstructions: a positive genus,
// or an intersection matrix that is not negative definite (both survive
// passage to subgraphs of regular graphs). Everything else that fails the
// scan is no-within-budget. Throws std::invalid_argument on invalid or
// disconnected input.
SandwichResult is_sandwiched(const WeightedGraph& g, int max_budget);

std::optional<Violation> verify_sandwich_witness(const WeightedGraph& g,
                                                 const SandwichWitness& w);

}  // namespace dualgraph
