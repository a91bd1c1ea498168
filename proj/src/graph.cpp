#include "dualgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dualgraph {

Edge make_edge(VertexId a, VertexId b) {
  return a <= b ? Edge{a, b} : Edge{b, a};
}

WeightedGraph::WeightedGraph(std::vector<Vertex> vertices,
                             std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (Edge& e : edges_) e = make_edge(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
}

bool WeightedGraph::has_vertex(VertexId id) const {
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), id,
      [](const Vertex& v, VertexId target) { return v.id < target; });
  return it != vertices_.end() && it->id == id;
}

bool WeightedGraph::has_edge(VertexId a, VertexId b) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

const Vertex& WeightedGraph::vertex(VertexId id) const {
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), id,
      [](const Vertex& v, VertexId target) { return v.id < target; });
  if (it == vertices_.end() || it->id != id)
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
  return *it;
}

VertexId WeightedGraph::max_id() const {
  return vertices_.empty() ? -1 : vertices_.back().id;
}

void WeightedGraph::add_vertex(VertexId id, int genus, int weight) {
  if (id < 0)
    throw std::invalid_argument("vertex id " + std::to_string(id) +
                                " is negative");
  if (has_vertex(id))
    throw std::invalid_argument("vertex id " + std::to_string(id) +
                                " already present");
  if (genus < 0)
    throw std::invalid_argument("genus < 0 at vertex " + std::to_string(id));
  if (weight < 1)
    throw std::invalid_argument("weight < 1 at vertex " + std::to_string(id));
  Vertex v{id, genus, weight};
  vertices_.insert(
      std::upper_bound(vertices_.begin(), vertices_.end(), v), v);
}

void WeightedGraph::add_edge(VertexId a, VertexId b) {
  if (a == b)
    throw std::invalid_argument("loop at " + std::to_string(a));
  vertex(a);
  vertex(b);
  Edge e = make_edge(a, b);
  if (has_edge(a, b))
    throw std::invalid_argument("duplicate edge [" + std::to_string(e.first) +
                                "," + std::to_string(e.second) + "]");
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

void WeightedGraph::remove_edge(VertexId a, VertexId b) {
  Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw std::invalid_argument("no edge [" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + "]");
  edges_.erase(it);
}

void WeightedGraph::remove_vertex(VertexId id) {
  vertex(id);
  std::erase_if(edges_,
                [id](const Edge& e) { return e.first == id || e.second == id; });
  std::erase_if(vertices_, [id](const Vertex& v) { return v.id == id; });
}

Vertex& WeightedGraph::vertex_mut(VertexId id) {
  return const_cast<Vertex&>(std::as_const(*this).vertex(id));
}

void WeightedGraph::bump_weight(VertexId id, int delta) {
  Vertex& v = vertex_mut(id);
  if (v.weight + delta < 1)
    throw std::invalid_argument("weight < 1 at vertex " + std::to_string(id));
  v.weight += delta;
}

std::optional<Violation> WeightedGraph::validate() const {
  for (const Edge& e : edges_) {
    if (e.first == e.second)
      return Violation{"loop at " + std::to_string(e.first)};
  }
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1])
      return Violation{"duplicate edge [" + std::to_string(edges_[i].first) +
                       "," + std::to_string(edges_[i].second) + "]"};
  }
  for (const Edge& e : edges_) {
    for (VertexId end : {e.first, e.second}) {
      if (!has_vertex(end))
        return Violation{"edge [" + std::to_string(e.first) + "," +
                         std::to_string(e.second) +
                         "] references unknown vertex " + std::to_string(end)};
    }
  }
  for (const Vertex& v : vertices_) {
    if (v.id < 0)
      return Violation{"negative vertex id " + std::to_string(v.id)};
    if (v.weight < 1)
      return Violation{"weight < 1 at vertex " + std::to_string(v.id)};
    if (v.genus < 0)
      return Violation{"genus < 0 at vertex " + std::to_string(v.id)};
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].id == vertices_[i - 1].id)
      return Violation{"duplicate vertex id " +
                       std::to_string(vertices_[i].id)};
  }
  return std::nullopt;
}

std::vector<VertexId> WeightedGraph::link(VertexId id) const {
  vertex(id);
  std::vector<VertexId> out;
  for (const Edge& e : edges_) {
    if (e.first == id) out.push_back(e.second);
    else if (e.second == id) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int WeightedGraph::valency(VertexId id) const {
  return static_cast<int>(link(id).size());
}

bool WeightedGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::set<VertexId> seen{vertices_.front().id};
  std::queue<VertexId> queue;
  queue.push(vertices_.front().id);
  while (!queue.empty()) {
    VertexId cur = queue.front();
    queue.pop();
    for (const Edge& e : edges_) {
      VertexId other = -1;
      if (e.first == cur) other = e.second;
      else if (e.second == cur) other = e.first;
      else continue;
      if (seen.insert(other).second) queue.push(other);
    }
  }
  return seen.size() == vertices_.size();
}

std::optional<int> WeightedGraph::edge_distance(VertexId a, VertexId b) const {
  vertex(a);
  vertex(b);
  std::set<VertexId> seen{a};
  std::queue<std::pair<VertexId, int>> queue;
  queue.push({a, 0});
  while (!queue.empty()) {
    auto [cur, dist] = queue.front();
    queue.pop();
    if (cur == b) return dist;
    for (const Edge& e : edges_) {
      VertexId other = -1;
      if (e.first == cur) other = e.second;
      else if (e.second == cur) other = e.first;
      else continue;
      if (seen.insert(other).second) queue.push({other, dist + 1});
    }
  }
  return std::nullopt;
}

WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<VertexId>& ids) {
  std::set<VertexId> keep(ids.begin(), ids.end());
  std::vector<Vertex> vs;
  for (VertexId id : keep) vs.push_back(g.vertex(id));
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (keep.count(e.first) && keep.count(e.second)) es.push_back(e);
  return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph remove_vertices(const WeightedGraph& g,
                              const std::vector<VertexId>& ids) {
  std::set<VertexId> drop(ids.begin(), ids.end());
  std::vector<VertexId> keep;
  for (const Vertex& v : g.vertices())
    if (!drop.count(v.id)) keep.push_back(v.id);
  return induced_subgraph(g, keep);
}

std::vector<WeightedGraph> components(const WeightedGraph& g) {
  std::set<VertexId> remaining;
  for (const Vertex& v : g.vertices()) remaining.insert(v.id);
  std::vector<WeightedGraph> out;
  while (!remaining.empty()) {
    VertexId start = *remaining.begin();
    std::vector<VertexId> comp{start};
    remaining.erase(start);
    std::queue<VertexId> queue;
    queue.push(start);
    while (!queue.empty()) {
      VertexId cur = queue.front();
      queue.pop();
      for (VertexId other : g.link(cur)) {
        if (remaining.erase(other)) {
          comp.push_back(other);
          queue.push(other);
        }
      }
    }
    out.push_back(induced_subgraph(g, comp));
  }
  return out;
}

WeightedGraph point_graph(VertexId id) {
  WeightedGraph g;
  g.add_vertex(id, 0, 1);
  return g;
}

std::string graph_key(const WeightedGraph& g) {
  std::ostringstream out;
  for (const Vertex& v : g.vertices())
    out << v.id << ':' << v.genus << ':' << v.weight << ';';
  out << '|';
  for (const Edge& e : g.edges()) out << e.first << '-' << e.second << ';';
  return out.str();
}

}  // namespace dualgraph
