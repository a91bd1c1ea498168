#include "dualgraph/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "dualgraph/self_similarity.hpp"

namespace dualgraph {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

ModStep random_step(Rng& rng, const WeightedGraph& g) {
  bool at_edge = !g.edges().empty() && rng.below(2) == 0;
  if (at_edge) {
    const Edge& e = g.edges()[rng.below(g.edge_count())];
    return ModStep::at_edge(e.first, e.second, g.fresh_id());
  }
  const Vertex& v = g.vertices()[rng.below(g.vertex_count())];
  return ModStep::at_vertex(v.id, g.fresh_id());
}

}  // namespace

WeightedGraph random_regular_graph(Rng& rng, int max_depth) {
  WeightedGraph g = point_graph();
  int depth = static_cast<int>(rng.below(max_depth + 1));
  for (int i = 0; i < depth; ++i) g = apply_step(g, random_step(rng, g));
  return g;
}

WeightedGraph random_connected_graph(Rng& rng, int max_vertices) {
  int n = 1 + static_cast<int>(rng.below(max_vertices));
  WeightedGraph g;
  for (int i = 0; i < n; ++i) {
    int genus = rng.below(8) == 0 ? 1 : 0;
    g.add_vertex(i, genus, 1 + static_cast<int>(rng.below(4)));
  }
  for (int i = 1; i < n; ++i)
    g.add_edge(static_cast<VertexId>(rng.below(i)), i);
  int extra = static_cast<int>(rng.below(n));
  for (int t = 0; t < extra; ++t) {
    VertexId a = static_cast<VertexId>(rng.below(n));
    VertexId b = static_cast<VertexId>(rng.below(n));
    if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

Subgraph random_connected_subgraph(Rng& rng, const WeightedGraph& g,
                                   int max_vertices) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("cannot sample from an empty graph");
  int want = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(
                 max_vertices, g.vertex_count())));
  std::vector<VertexId> chosen{
      g.vertices()[rng.below(g.vertex_count())].id};
  while (static_cast<int>(chosen.size()) < want) {
    // Frontier: neighbours of the chosen set not yet chosen.
    std::vector<VertexId> frontier;
    for (VertexId v : chosen)
      for (VertexId w : g.link(v))
        if (std::find(chosen.begin(), chosen.end(), w) == chosen.end() &&
            std::find(frontier.begin(), frontier.end(), w) == frontier.end())
          frontier.push_back(w);
    if (frontier.empty()) break;
    std::sort(frontier.begin(), frontier.end());
    chosen.push_back(frontier[rng.below(frontier.size())]);
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (std::binary_search(chosen.begin(), chosen.end(), e.first) &&
        std::binary_search(chosen.begin(), chosen.end(), e.second))
      edges.push_back(e);
  return Subgraph(std::move(chosen), std::move(edges));
}

ModSequence random_sequence(Rng& rng, const WeightedGraph& base,
                            int max_depth) {
  ModSequence seq;
  seq.base = base;
  WeightedGraph g = base;
  int depth = 1 + static_cast<int>(rng.below(max_depth));
  for (int i = 0; i < depth; ++i) {
    ModStep step = random_step(rng, g);
    g = apply_step(g, step);
    seq.steps.push_back(step);
  }
  return seq;
}

SymMatrix random_symmetric_matrix(Rng& rng, int max_order, int bound) {
  int n = 1 + static_cast<int>(rng.below(max_order));
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m.set(i, j, static_cast<long long>(rng.below(2 * bound + 1)) - bound);
  return m;
}

RoundTripReport run_roundtrip_suite(const RoundTripOptions& options) {
  Rng rng(options.seed);
  RoundTripReport report;
  auto record = [&](int index, const std::string& what) {
    report.failures.push_back("case " + std::to_string(index) + ": " + what);
  };
  for (int i = 0; i < options.count; ++i) {
    ++report.total;
    WeightedGraph regular = random_regular_graph(rng, options.max_depth);
    Subgraph sub = random_connected_subgraph(
        rng, regular, static_cast<int>(regular.vertex_count()));
    WeightedGraph g = induced_subgraph(regular, sub.vertices);

    SandwichResult sandwich = is_sandwiched(g, options.budget);
    if (sandwich.verdict != Verdict::Yes || !sandwich.witness) {
      record(i, "piece of a regular graph was not recognized as sandwiched");
      continue;
    }
    if (auto violation = verify_sandwich_witness(g, *sandwich.witness)) {
      record(i, "sandwich witness failed verification: " + violation->message);
      continue;
    }

    SelfSimWitness planted = plant_witness(g, *sandwich.witness);
    if (auto violation = verify_witness(planted)) {
      record(i, "planted witness failed verification: " + violation->message);
      continue;
    }

    std::optional<Extraction> extracted =
        extract_sandwich(planted, kDefaultTowerCap);
    if (!extracted) {
      record(i, "no sandwich could be extracted from the planted witness");
      continue;
    }
    if (auto violation =
            check_embedding(g, extracted->regular, extracted->embedding)) {
      record(i, "extracted embedding is invalid: " + violation->message);
      continue;
    }
    if (!is_regular(extracted->regular)) {
      record(i, "extracted graph is not regular");
      continue;
    }
    ++report.passed;
  }
  return report;
}

}  // namespace dualgraph
