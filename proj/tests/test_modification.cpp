#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "dualgraph/corpus.hpp"
#include "dualgraph/matrix.hpp"
#include "dualgraph/modification.hpp"
#include "oracles.hpp"

using namespace dualgraph;

namespace {

WeightedGraph two_chain() {
  WeightedGraph g;
  g.add_vertex(0, 0, 2);
  g.add_vertex(1, 0, 2);
  g.add_edge(0, 1);
  return g;
}

int total_weight(const WeightedGraph& g) {
  int sum = 0;
  for (const Vertex& v : g.vertices()) sum += v.weight;
  return sum;
}

// A copy of g with ids sent through 2*id+1, plus the map back into g.
std::pair<WeightedGraph, VertexMap> shifted_copy(const WeightedGraph& g) {
  WeightedGraph copy;
  std::vector<std::pair<VertexId, VertexId>> back;
  for (const Vertex& v : g.vertices()) {
    copy.add_vertex(2 * v.id + 1, v.genus, v.weight);
    back.push_back({2 * v.id + 1, v.id});
  }
  for (const Edge& e : g.edges())
    copy.add_edge(2 * e.first + 1, 2 * e.second + 1);
  return {copy, VertexMap(back)};
}

}  // namespace

TEST_CASE("vertex step: pendant vertex, center weight up") {
  WeightedGraph g;
  g.add_vertex(0, 0, 2);
  WeightedGraph r = blowup_vertex(g, 0, 1);
  CHECK(r.vertex_count() == 2);
  CHECK(r.weight(0) == 3);
  CHECK(r.vertex(1) == Vertex{1, 0, 1});
  CHECK(r.edges() == std::vector<Edge>{{0, 1}});
  CHECK(total_weight(r) == total_weight(g) + 2);
}

TEST_CASE("edge step: subdivision, both endpoint weights up") {
  WeightedGraph r = blowup_edge(two_chain(), 0, 1, 2);
  CHECK(r.vertex_count() == 3);
  CHECK(r.weight(0) == 3);
  CHECK(r.weight(1) == 3);
  CHECK(r.vertex(2) == Vertex{2, 0, 1});
  CHECK(r.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(total_weight(r) == total_weight(two_chain()) + 3);
}

TEST_CASE("steps reject bad centers and ids") {
  WeightedGraph g = two_chain();
  CHECK_THROWS_WITH_AS(blowup_vertex(g, 5, 2), "unknown vertex id 5",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(blowup_vertex(g, 0, 1),
                       "id collision: vertex 1 already present",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(blowup_edge(g, 0, 2, 3), "no edge [0,2]",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(blowup_vertex(g, 0, -3),
                       "new vertex id -3 is negative", std::invalid_argument);
  CHECK(ModStep::at_edge(1, 0, 2).center_a == 0);
}

TEST_CASE("apply_sequence reports the failing step and tracks the base") {
  ModSequence seq;
  seq.base = two_chain();
  // Subdividing [0,1] removes that edge, so the second step cannot apply.
  seq.steps = {ModStep::at_edge(0, 1, 2), ModStep::at_edge(0, 1, 9)};
  CHECK_THROWS_WITH_AS(apply_sequence(seq), "step 1: no edge [0,1]",
                       std::invalid_argument);

  seq.steps = {ModStep::at_vertex(0, 2), ModStep::at_edge(0, 2, 3)};
  ApplyResult r = apply_sequence(seq);
  CHECK(r.result.vertex_count() == 4);
  CHECK(r.maps.strict == VertexMap::identity(seq.base));
  for (const Vertex& v : seq.base.vertices())
    CHECK(r.result.has_vertex(v.id));
}

TEST_CASE("weight sum rises by two per vertex step, three per edge step") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    WeightedGraph base = random_connected_graph(rng, 6);
    ModSequence seq = random_sequence(rng, base, 5);
    WeightedGraph cur = base;
    for (const ModStep& step : seq.steps) {
      WeightedGraph next = apply_step(cur, step);
      int delta = step.kind == ModStep::Kind::Vertex ? 2 : 3;
      CHECK(total_weight(next) == total_weight(cur) + delta);
      CHECK(next.vertex_count() == cur.vertex_count() + 1);
      cur = next;
    }
  }
}

TEST_CASE("steps preserve |det| and negative definiteness") {
  Rng rng(22);
  int checked = 0;
  while (checked < 200) {
    WeightedGraph base = rng.below(2) == 0 ? random_regular_graph(rng, 6)
                                           : random_connected_graph(rng, 6);
    if (!is_negative_definite(base)) continue;
    ++checked;
    ModSequence seq = random_sequence(rng, base, 4);
    WeightedGraph result = apply_sequence(seq).result;
    CHECK(abs(determinant(result)) == abs(determinant(base)));
    CHECK(is_negative_definite(result));
  }
}

TEST_CASE("total transform case rules") {
  // Base: chain 0 - 1 - 2 with an extra pendant 3 at vertex 1.
  WeightedGraph base;
  for (int i = 0; i < 4; ++i) base.add_vertex(i, 0, 2);
  base.add_edge(0, 1);
  base.add_edge(1, 2);
  base.add_edge(1, 3);
  Subgraph sub({0, 1}, {{0, 1}});

  SUBCASE("vertex center inside pulls the new vertex in") {
    ModSequence seq{base, {ModStep::at_vertex(1, 4)}};
    Subgraph t = total_transform(seq, sub);
    CHECK(t == Subgraph({0, 1, 4}, {{0, 1}, {1, 4}}));
  }
  SUBCASE("vertex center outside changes nothing") {
    ModSequence seq{base, {ModStep::at_vertex(2, 4)}};
    CHECK(total_transform(seq, sub) == sub);
  }
  SUBCASE("edge center inside is swapped for the two new edges") {
    ModSequence seq{base, {ModStep::at_edge(0, 1, 4)}};
    Subgraph t = total_transform(seq, sub);
    CHECK(t == Subgraph({0, 1, 4}, {{0, 4}, {1, 4}}));
  }
  SUBCASE("edge center with one endpoint inside adds one new edge") {
    ModSequence seq{base, {ModStep::at_edge(1, 2, 4)}};
    Subgraph t = total_transform(seq, sub);
    CHECK(t == Subgraph({0, 1, 4}, {{0, 1}, {1, 4}}));
  }
  SUBCASE("edge center fully outside changes nothing") {
    Subgraph small({0}, {});
    ModSequence seq{base, {ModStep::at_edge(1, 2, 4)}};
    CHECK(total_transform(seq, small) == small);
  }
  SUBCASE("edge between subgraph vertices that the subgraph does not use") {
    Subgraph no_edge({0, 1, 2}, {{0, 1}, {1, 2}});
    ModSequence seq{base, {ModStep::at_edge(1, 3, 4)}};
    // The center edge <1,3> is not part of the subgraph, so nothing is
    // removed, but its new vertex still touches the subgraph at 1.
    Subgraph t = total_transform(seq, no_edge);
    CHECK(t == Subgraph({0, 1, 2, 4}, {{0, 1}, {1, 2}, {1, 4}}));
  }
  SUBCASE("input checking") {
    CHECK_THROWS_AS(total_transform(ModSequence{base, {}}, Subgraph({9}, {})),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        total_transform(ModSequence{base, {}}, Subgraph({0, 2}, {})),
        "subgraph is not connected", std::invalid_argument);
  }
}

TEST_CASE("total transform output is a connected subgraph of the result") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    WeightedGraph base = random_connected_graph(rng, 6);
    ModSequence seq = random_sequence(rng, base, 5);
    Subgraph sub = random_connected_subgraph(
        rng, base, static_cast<int>(base.vertex_count()));
    Subgraph t = total_transform(seq, sub);
    WeightedGraph result = apply_sequence(seq).result;
    CHECK_FALSE(check_subgraph(result, t));
    CHECK(subgraph_connected(t));
  }
}

TEST_CASE("blowdown preconditions are reported precisely") {
  WeightedGraph g;
  g.add_vertex(0, 0, 2);
  g.add_vertex(1, 0, 1);
  g.add_vertex(2, 1, 1);
  g.add_vertex(3, 0, 1);
  g.add_vertex(4, 0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 4);

  CHECK_THROWS_WITH_AS(blowdown(g, 0), "vertex 0 is not a (0,1) vertex",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(blowdown(g, 2), "vertex 2 is not a (0,1) vertex",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(blowdown(g, 4), "neighbour 3 has weight 1",
                       std::invalid_argument);

  WeightedGraph tri;
  tri.add_vertex(0, 0, 2);
  tri.add_vertex(1, 0, 2);
  tri.add_vertex(2, 0, 1);
  tri.add_edge(0, 1);
  tri.add_edge(0, 2);
  tri.add_edge(1, 2);
  CHECK_THROWS_WITH_AS(blowdown(tri, 2), "neighbours 0 and 1 are adjacent",
                       std::invalid_argument);

  WeightedGraph lonely = point_graph();
  CHECK_THROWS_WITH_AS(blowdown(lonely, 0), "vertex 0 has valency 0",
                       std::invalid_argument);
}

TEST_CASE("blowdown undoes a vertex step") {
  WeightedGraph g;
  g.add_vertex(0, 0, 3);
  g.add_vertex(1, 0, 1);
  g.add_edge(0, 1);
  BlowdownResult r = blowdown(g, 1);
  CHECK(r.result.vertex_count() == 1);
  CHECK(r.result.weight(0) == 2);
  CHECK(r.undone == ModStep::at_vertex(0, 1));
  CHECK(apply_step(r.result, r.undone) == g);
}

TEST_CASE("blowdown undoes an edge step") {
  WeightedGraph g;
  g.add_vertex(0, 0, 3);
  g.add_vertex(1, 0, 3);
  g.add_vertex(2, 0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  BlowdownResult r = blowdown(g, 2);
  CHECK(r.result == two_chain());
  CHECK(r.undone == ModStep::at_edge(0, 1, 2));
  CHECK(apply_step(r.result, r.undone) == g);
}

TEST_CASE("blowdown candidates are exactly the reversible spots") {
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    WeightedGraph g = rng.below(2) == 0 ? random_regular_graph(rng, 6)
                                        : random_connected_graph(rng, 6);
    std::vector<VertexId> expect;
    for (const Vertex& v : g.vertices()) {
      try {
        BlowdownResult r = blowdown(g, v.id);
        CHECK(apply_step(r.result, r.undone) == g);
        expect.push_back(v.id);
      } catch (const std::invalid_argument&) {
      }
    }
    CHECK(blowdown_candidates(g) == expect);
  }
}

TEST_CASE("induced modification lifts steps along the embedding") {
  // Delta: single vertex 1 of weight 2; Gamma: the two chain; 1 -> 0.
  WeightedGraph delta;
  delta.add_vertex(1, 0, 2);
  VertexMap emb({{1, 0}});
  ModSequence seq{delta, {ModStep::at_vertex(1, 2)}};
  InducedModification ind = induced_modification(seq, emb, two_chain());

  REQUIRE(ind.gamma_seq.steps.size() == 1);
  CHECK(ind.gamma_seq.steps[0] == ModStep::at_vertex(0, 2));
  CHECK(ind.lifted_embedding == VertexMap({{1, 0}, {2, 2}}));

  WeightedGraph delta_res = apply_sequence(seq).result;
  WeightedGraph gamma_res = apply_sequence(ind.gamma_seq).result;
  CHECK_FALSE(check_embedding(delta_res, gamma_res, ind.lifted_embedding));
}

TEST_CASE("induced modification rejects a bad embedding") {
  WeightedGraph delta;
  delta.add_vertex(0, 0, 1);
  ModSequence seq{delta, {ModStep::at_vertex(0, 1)}};
  VertexMap wrong({{0, 0}});  // weight mismatch against the two chain
  CHECK_THROWS_AS(induced_modification(seq, wrong, two_chain()),
                  std::invalid_argument);
}

TEST_CASE("lifting identities hold on random compatible pairs") {
  Rng rng(25);
  for (int i = 0; i < 60; ++i) {
    WeightedGraph gamma = random_connected_graph(rng, 6);
    Subgraph piece = random_connected_subgraph(
        rng, gamma, static_cast<int>(gamma.vertex_count()));
    auto [delta, emb] = shifted_copy(induced_subgraph(gamma, piece.vertices));
    ModSequence seq = random_sequence(rng, delta, 4);

    InducedModification ind = induced_modification(seq, emb, gamma);
    ApplyResult delta_res = apply_sequence(seq);
    ApplyResult gamma_res = apply_sequence(ind.gamma_seq);

    CHECK_FALSE(check_embedding(delta_res.result, gamma_res.result,
                                ind.lifted_embedding));

    // Composition identity: lifting then tracking ids equals tracking ids
    // then embedding.
    CHECK(compose(ind.lifted_embedding, delta_res.maps.strict) ==
          compose(gamma_res.maps.strict, emb));

    // Commutation with the total transform of any connected subgraph.
    Subgraph sub = random_connected_subgraph(
        rng, delta, static_cast<int>(delta.vertex_count()));
    CHECK(map_subgraph(total_transform(seq, sub), ind.lifted_embedding) ==
          total_transform(ind.gamma_seq, map_subgraph(sub, emb)));
  }
}
