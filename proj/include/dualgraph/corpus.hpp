#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dualgraph/classification.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/matrix.hpp"
#include "dualgraph/modification.hpp"

namespace dualgraph {

// Deterministic generator (splitmix64). The standard engines are not pinned
// down to identical streams across library versions, and corpus tests need
// byte-for-byte reproducibility, so the mixing function is spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform enough for test-case shaping; modulo bias is irrelevant at the
  // ranges used here (n well below 2^32).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

WeightedGraph random_regular_graph(Rng& rng, int max_depth);
WeightedGraph random_connected_graph(Rng& rng, int max_vertices);
Subgraph random_connected_subgraph(Rng& rng, const WeightedGraph& g,
                                   int max_vertices);
ModSequence random_sequence(Rng& rng, const WeightedGraph& base, int max_depth);
SymMatrix random_symmetric_matrix(Rng& rng, int max_order, int bound);

struct RoundTripOptions {
  std::uint64_t seed = 1;
  int count = 200;
  int budget = 16;
  int max_depth = 8;
};

struct RoundTripReport {
  int total = 0;
  int passed = 0;
  std::vector<std::string> failures;
};

// Generates regular graphs, cuts connected pieces out of them, and pushes
// each piece through the decide / plant / verify / extract cycle, checking
// that every stage agrees with the one before it.
RoundTripReport run_roundtrip_suite(const RoundTripOptions& options);

}  // namespace dualgraph
