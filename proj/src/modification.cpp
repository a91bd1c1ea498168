#include "dualgraph/modification.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace dualgraph {

namespace {

std::string edge_text(VertexId a, VertexId b) {
  Edge e = make_edge(a, b);
  return "[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
}

void require_fresh(const WeightedGraph& g, VertexId new_id) {
  if (new_id < 0)
    throw std::invalid_argument("new vertex id " + std::to_string(new_id) +
                                " is negative");
  if (g.has_vertex(new_id))
    throw std::invalid_argument("id collision: vertex " +
                                std::to_string(new_id) + " already present");
}

}  // namespace

ModStep ModStep::at_vertex(VertexId v, VertexId new_id) {
  return ModStep{Kind::Vertex, v, -1, new_id};
}

ModStep ModStep::at_edge(VertexId a, VertexId b, VertexId new_id) {
  Edge e = make_edge(a, b);
  return ModStep{Kind::Edge, e.first, e.second, new_id};
}

WeightedGraph blowup_vertex(const WeightedGraph& g, VertexId v,
                            VertexId new_id) {
  g.vertex(v);
  require_fresh(g, new_id);
  WeightedGraph out = g;
  out.bump_weight(v, 1);
  out.add_vertex(new_id, 0, 1);
  out.add_edge(v, new_id);
  return out;
}

WeightedGraph blowup_edge(const WeightedGraph& g, VertexId a, VertexId b,
                          VertexId new_id) {
  if (!g.has_edge(a, b))
    throw std::invalid_argument("no edge " + edge_text(a, b));
  require_fresh(g, new_id);
  WeightedGraph out = g;
  out.remove_edge(a, b);
  out.bump_weight(a, 1);
  out.bump_weight(b, 1);
  out.add_vertex(new_id, 0, 1);
  out.add_edge(a, new_id);
  out.add_edge(b, new_id);
  return out;
}

WeightedGraph apply_step(const WeightedGraph& g, const ModStep& step) {
  if (step.kind == ModStep::Kind::Vertex)
    return blowup_vertex(g, step.center_a, step.new_id);
  return blowup_edge(g, step.center_a, step.center_b, step.new_id);
}

ApplyResult apply_sequence(const ModSequence& seq) {
  WeightedGraph cur = seq.base;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    try {
      cur = apply_step(cur, seq.steps[i]);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("step " + std::to_string(i) + ": " +
                                  err.what());
    }
  }
  return ApplyResult{std::move(cur), TransformMaps{VertexMap::identity(seq.base)}};
}

Subgraph::Subgraph(std::vector<VertexId> vertex_ids,
                   std::vector<Edge> edge_list)
    : vertices(std::move(vertex_ids)), edges(std::move(edge_list)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  for (Edge& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Subgraph Subgraph::full(const WeightedGraph& g) {
  Subgraph sub;
  for (const Vertex& v : g.vertices()) sub.vertices.push_back(v.id);
  sub.edges = g.edges();
  return sub;
}

bool Subgraph::contains_vertex(VertexId id) const {
  return std::binary_search(vertices.begin(), vertices.end(), id);
}

bool Subgraph::contains_edge(VertexId a, VertexId b) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
}

std::optional<Violation> check_subgraph(const WeightedGraph& g,
                                        const Subgraph& sub) {
  for (VertexId id : sub.vertices) {
    if (!g.has_vertex(id))
      return Violation{"subgraph vertex " + std::to_string(id) +
                       " not in graph"};
  }
  for (const Edge& e : sub.edges) {
    if (!sub.contains_vertex(e.first) || !sub.contains_vertex(e.second))
      return Violation{"subgraph edge " + edge_text(e.first, e.second) +
                       " has an endpoint outside the vertex set"};
    if (!g.has_edge(e.first, e.second))
      return Violation{"subgraph edge " + edge_text(e.first, e.second) +
                       " not in graph"};
  }
  return std::nullopt;
}

bool subgraph_connected(const Subgraph& sub) {
  if (sub.vertices.empty()) return true;
  std::set<VertexId> seen{sub.vertices.front()};
  std::queue<VertexId> queue;
  queue.push(sub.vertices.front());
  while (!queue.empty()) {
    VertexId cur = queue.front();
    queue.pop();
    for (const Edge& e : sub.edges) {
      VertexId other = -1;
      if (e.first == cur) other = e.second;
      else if (e.second == cur) other = e.first;
      else continue;
      if (seen.insert(other).second) queue.push(other);
    }
  }
  return seen.size() == sub.vertices.size();
}

Subgraph map_subgraph(const Subgraph& sub, const VertexMap& m) {
  std::vector<VertexId> vs;
  for (VertexId id : sub.vertices) vs.push_back(m.at(id));
  std::vector<Edge> es;
  for (const Edge& e : sub.edges)
    es.push_back(make_edge(m.at(e.first), m.at(e.second)));
  return Subgraph(std::move(vs), std::move(es));
}

namespace {

void sorted_insert(std::vector<VertexId>& v, VertexId id) {
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) v.insert(it, id);
}

void sorted_insert(std::vector<Edge>& v, Edge e) {
  auto it = std::lower_bound(v.begin(), v.end(), e);
  if (it == v.end() || *it != e) v.insert(it, e);
}

void sorted_erase(std::vector<Edge>& v, Edge e) {
  auto it = std::lower_bound(v.begin(), v.end(), e);
  if (it != v.end() && *it == e) v.erase(it);
}

}  // namespace

Subgraph total_transform(const ModSequence& seq, Subgraph sub) {
  if (auto violation = check_subgraph(seq.base, sub))
    throw std::invalid_argument(violation->message);
  if (!subgraph_connected(sub))
    throw std::invalid_argument("subgraph is not connected");
  WeightedGraph cur = seq.base;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const ModStep& step = seq.steps[i];
    WeightedGraph next;
    try {
      next = apply_step(cur, step);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("step " + std::to_string(i) + ": " +
                                  err.what());
    }
    if (step.kind == ModStep::Kind::Vertex) {
      if (sub.contains_vertex(step.center_a)) {
        sorted_insert(sub.vertices, step.new_id);
        sorted_insert(sub.edges, make_edge(step.center_a, step.new_id));
      }
    } else {
      bool a_in = sub.contains_vertex(step.center_a);
      bool b_in = sub.contains_vertex(step.center_b);
      if (a_in || b_in) {
        sorted_insert(sub.vertices, step.new_id);
        sorted_erase(sub.edges, make_edge(step.center_a, step.center_b));
        if (a_in) sorted_insert(sub.edges, make_edge(step.center_a, step.new_id));
        if (b_in) sorted_insert(sub.edges, make_edge(step.center_b, step.new_id));
      }
    }
    cur = std::move(next);
  }
  return sub;
}

namespace {

std::optional<std::string> blowdown_obstruction(const WeightedGraph& g,
                                                VertexId v) {
  const Vertex& vert = g.vertex(v);
  if (vert.genus != 0 || vert.weight != 1)
    return "vertex " + std::to_string(v) + " is not a (0,1) vertex";
  auto neighbours = g.link(v);
  if (neighbours.size() != 1 && neighbours.size() != 2)
    return "vertex " + std::to_string(v) + " has valency " +
           std::to_string(neighbours.size());
  for (VertexId u : neighbours) {
    if (g.weight(u) < 2)
      return "neighbour " + std::to_string(u) + " has weight 1";
  }
  if (neighbours.size() == 2 && g.has_edge(neighbours[0], neighbours[1]))
    return "neighbours " + std::to_string(neighbours[0]) + " and " +
           std::to_string(neighbours[1]) + " are adjacent";
  return std::nullopt;
}

}  // namespace

std::vector<VertexId> blowdown_candidates(const WeightedGraph& g) {
  std::vector<VertexId> out;
  for (const Vertex& v : g.vertices())
    if (!blowdown_obstruction(g, v.id)) out.push_back(v.id);
  return out;
}

BlowdownResult blowdown(const WeightedGraph& g, VertexId v) {
  if (auto reason = blowdown_obstruction(g, v))
    throw std::invalid_argument(*reason);
  auto neighbours = g.link(v);
  WeightedGraph out = g;
  out.remove_vertex(v);
  for (VertexId u : neighbours) out.bump_weight(u, -1);
  ModStep undone;
  if (neighbours.size() == 1) {
    undone = ModStep::at_vertex(neighbours[0], v);
  } else {
    out.add_edge(neighbours[0], neighbours[1]);
    undone = ModStep::at_edge(neighbours[0], neighbours[1], v);
  }
  return BlowdownResult{std::move(out), undone};
}

InducedModification induced_modification(const ModSequence& delta_seq,
                                         const VertexMap& emb,
                                         const WeightedGraph& gamma) {
  if (auto violation = check_embedding(delta_seq.base, gamma, emb))
    throw std::invalid_argument("embedding invalid: " + violation->message);
  WeightedGraph delta_cur = delta_seq.base;
  WeightedGraph gamma_cur = gamma;
  VertexMap running = emb;
  ModSequence out{gamma, {}};
  for (std::size_t i = 0; i < delta_seq.steps.size(); ++i) {
    const ModStep& step = delta_seq.steps[i];
    ModStep lifted;
    VertexId fresh = gamma_cur.fresh_id();
    try {
      delta_cur = apply_step(delta_cur, step);
      lifted = step.kind == ModStep::Kind::Vertex
                   ? ModStep::at_vertex(running.at(step.center_a), fresh)
                   : ModStep::at_edge(running.at(step.center_a),
                                      running.at(step.center_b), fresh);
      gamma_cur = apply_step(gamma_cur, lifted);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("step " + std::to_string(i) + ": " +
                                  err.what());
    }
    running.insert(step.new_id, fresh);
    out.steps.push_back(lifted);
  }
  return InducedModification{std::move(out), std::move(running)};
}

}  // namespace dualgraph
