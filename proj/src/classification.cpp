#include "dualgraph/classification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dualgraph/matrix.hpp"

namespace dualgraph {

namespace {

bool blowdown_search(const WeightedGraph& cur, std::vector<VertexId>& order,
                     std::vector<ModStep>& undone,
                     std::set<std::string>& dead) {
  if (cur.vertex_count() == 1) return true;
  std::string key = graph_key(cur);
  if (dead.count(key)) return false;
  for (VertexId v : blowdown_candidates(cur)) {
    BlowdownResult step = blowdown(cur, v);
    order.push_back(v);
    undone.push_back(step.undone);
    if (blowdown_search(step.result, order, undone, dead)) return true;
    order.pop_back();
    undone.pop_back();
  }
  dead.insert(std::move(key));
  return false;
}

}  // namespace

std::optional<RegularityWitness> is_regular(const WeightedGraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  if (!g.is_connected()) return std::nullopt;
  for (const Vertex& v : g.vertices())
    if (v.genus != 0) return std::nullopt;
  IntersectionMatrix m = intersection_matrix(g);
  if (!is_negative_definite(m)) return std::nullopt;
  if (abs(determinant(m)) != 1) return std::nullopt;

  std::vector<VertexId> order;
  std::vector<ModStep> undone;
  std::set<std::string> dead;
  if (!blowdown_search(g, order, undone, dead)) return std::nullopt;

  // The surviving vertex is forced to be (0,1): |det| is invariant along
  // blowdowns and genera were all zero.
  WeightedGraph cur = g;
  for (VertexId v : order) cur = blowdown(cur, v).result;
  RegularityWitness w;
  w.blowdown_order = order;
  w.construction.base = cur;
  w.construction.steps.assign(undone.rbegin(), undone.rend());
  w.iso = VertexMap::identity(g);
  return w;
}

std::optional<Violation> verify_regularity_witness(
    const WeightedGraph& g, const RegularityWitness& w) {
  // First half: the blowdown order must contract g to a point graph.
  WeightedGraph cur = g;
  for (VertexId v : w.blowdown_order) {
    try {
      cur = blowdown(cur, v).result;
    } catch (const std::invalid_argument& err) {
      return Violation{"blowdown at " + std::to_string(v) +
                       " rejected: " + err.what()};
    }
  }
  if (cur.vertex_count() != 1)
    return Violation{"blowdown order does not reach a single vertex"};
  const Vertex& survivor = cur.vertices().front();
  if (survivor.genus != 0 || survivor.weight != 1)
    return Violation{"surviving vertex is not (0,1)"};

  // Second half: replaying the construction and relabeling through iso must
  // reproduce g exactly.
  if (w.construction.base.vertex_count() != 1)
    return Violation{"construction base is not a single vertex"};
  const Vertex& seed = w.construction.base.vertices().front();
  if (seed.genus != 0 || seed.weight != 1)
    return Violation{"construction base is not a (0,1) vertex"};
  WeightedGraph rebuilt;
  try {
    rebuilt = apply_sequence(w.construction).result;
  } catch (const std::invalid_argument& err) {
    return Violation{std::string("construction does not replay: ") +
                     err.what()};
  }
  if (!w.iso.is_injective()) return Violation{"iso is not injective"};
  std::vector<Vertex> mapped_vertices;
  std::vector<Edge> mapped_edges;
  try {
    for (const Vertex& v : rebuilt.vertices())
      mapped_vertices.push_back(Vertex{w.iso.at(v.id), v.genus, v.weight});
    for (const Edge& e : rebuilt.edges())
      mapped_edges.push_back(make_edge(w.iso.at(e.first), w.iso.at(e.second)));
  } catch (const std::invalid_argument&) {
    return Violation{"iso does not cover the rebuilt graph"};
  }
  if (WeightedGraph(std::move(mapped_vertices), std::move(mapped_edges)) != g)
    return Violation{"construction does not reproduce the graph"};
  return std::nullopt;
}

WeightedGraph attach_leaves(
    const WeightedGraph& g,
    const std::vector<std::pair<VertexId, int>>& leaves) {
  auto sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first)
      throw std::invalid_argument("vertex " + std::to_string(sorted[i].first) +
                                  " listed twice");
  }
  WeightedGraph out = g;
  VertexId next = g.fresh_id();
  for (const auto& [host, count] : sorted) {
    g.vertex(host);
    if (count < 0)
      throw std::invalid_argument("negative leaf count at vertex " +
                                  std::to_string(host));
    for (int i = 0; i < count; ++i) {
      out.add_vertex(next, 0, 1);
      out.add_edge(host, next);
      ++next;
    }
  }
  return out;
}

int default_leaf_budget(const WeightedGraph& g) {
  int total = 0;
  for (const Vertex& v : g.vertices()) total += v.weight;
  return 2 * total;
}

namespace {

// Enumerates weight compositions lexicographically: all ways to split
// budget over parts slots, (0,...,0,B) first. The callback returns false to
// stop the scan.
template <typename Callback>
bool for_each_composition(int budget, int parts, std::vector<int>& prefix,
                          const Callback& cb) {
  if (parts == 1) {
    prefix.push_back(budget);
    bool keep_going = cb(prefix);
    prefix.pop_back();
    return keep_going;
  }
  for (int first = 0; first <= budget; ++first) {
    prefix.push_back(first);
    bool keep_going = for_each_composition(budget - first, parts - 1, prefix, cb);
    prefix.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

SandwichResult is_sandwiched(const WeightedGraph& g, int max_budget) {
  if (auto violation = g.validate())
    throw std::invalid_argument("invalid graph: " + violation->message);
  if (g.vertex_count() == 0 || !g.is_connected())
    throw std::invalid_argument("input graph is not connected");

  for (const Vertex& v : g.vertices()) {
    if (v.genus > 0) {
      SandwichResult out;
      out.verdict = Verdict::DefinitelyNot;
      out.reason = "vertex " + std::to_string(v.id) + " has positive genus";
      return out;
    }
  }
  if (!is_negative_definite(g)) {
    SandwichResult out;
    out.verdict = Verdict::DefinitelyNot;
    out.reason = "intersection matrix is not negative definite";
    return out;
  }

  int n = static_cast<int>(g.vertex_count());
  for (int budget = 0; budget <= max_budget; ++budget) {
    SandwichResult found;
    std::vector<int> prefix;
    for_each_composition(budget, n, prefix, [&](const std::vector<int>& counts) {
      std::vector<std::pair<VertexId, int>> assignment;
      for (int i = 0; i < n; ++i)
        if (counts[i] > 0)
          assignment.push_back({g.vertices()[i].id, counts[i]});
      WeightedGraph augmented = attach_leaves(g, assignment);
      IntersectionMatrix m = intersection_matrix(augmented);
      if (!is_negative_definite(m) || abs(determinant(m)) != 1) return true;
      auto regularity = is_regular(augmented);
      if (!regularity) return true;
      found.verdict = Verdict::Yes;
      found.witness = SandwichWitness{assignment, std::move(augmented),
                                      std::move(*regularity),
                                      VertexMap::identity(g)};
      found.budget = budget;
      return false;
    });
    if (found.verdict == Verdict::Yes) return found;
  }

  SandwichResult out;
  out.verdict = Verdict::NoWithinBudget;
  out.budget = max_budget;
  return out;
}

std::optional<Violation> verify_sandwich_witness(const WeightedGraph& g,
                                                 const SandwichWitness& w) {
  if (auto violation = g.validate())
    return Violation{"graph invalid: " + violation->message};
  if (g.vertex_count() == 0 || !g.is_connected())
    return Violation{"graph is not connected"};
  WeightedGraph augmented;
  try {
    augmented = attach_leaves(g, w.leaves);
  } catch (const std::invalid_argument& err) {
    return Violation{std::string("leaves do not attach: ") + err.what()};
  }
  if (augmented != w.augmented)
    return Violation{"augmented graph does not match the leaf assignment"};
  if (w.embedding != VertexMap::identity(g))
    return Violation{"embedding is not the inclusion"};
  if (auto violation = check_embedding(g, w.augmented, w.embedding))
    return Violation{"embedding invalid: " + violation->message};
  if (auto violation = verify_regularity_witness(w.augmented, w.regularity))
    return Violation{"regularity witness invalid: " + violation->message};
  return std::nullopt;
}

}  // namespace dualgraph
