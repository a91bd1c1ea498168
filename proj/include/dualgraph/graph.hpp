#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dualgraph {

using VertexId = int;

// A vertex carries the label (genus, weight). The weight is the negated
// self-intersection of the corresponding curve, so valid graphs have
// weight >= 1 and genus >= 0.
struct Vertex {
  VertexId id{};
  int genus{};
  int weight{};

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Unordered vertex pair, stored with the smaller id first.
using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b);

// Names the first violated invariant of a graph, map or witness together
// with the offending element.
struct Violation {
  std::string message;
};

// Finite simple graph with (genus, weight) vertex labels.
//
// Vertices are kept sorted by id and edges sorted lexicographically, so
// equal graphs compare equal member-wise and serialization is canonical by
// construction. The mutating interface rejects loops, duplicate edges and
// duplicate ids up front; data from untrusted sources can be loaded through
// the raw constructor, which only sorts, and then checked with validate().
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId id) const;
  bool has_edge(VertexId a, VertexId b) const;
  // Throw std::invalid_argument on an unknown id.
  const Vertex& vertex(VertexId id) const;
  int genus(VertexId id) const { return vertex(id).genus; }
  int weight(VertexId id) const { return vertex(id).weight; }

  // Largest id in use, -1 for the empty graph; fresh_id() is the smallest
  // id never used, the default for new vertices created by rewriting.
  VertexId max_id() const;
  VertexId fresh_id() const { return max_id() + 1; }

  void add_vertex(VertexId id, int genus, int weight);
  void add_edge(VertexId a, VertexId b);
  void remove_edge(VertexId a, VertexId b);
  // Removes the vertex together with all incident edges.
  void remove_vertex(VertexId id);
  void bump_weight(VertexId id, int delta);

  // First violated invariant, checked in a fixed order: loops, duplicate
  // edges, undeclared endpoints, weight/genus bounds, duplicate ids.
  std::optional<Violation> validate() const;

  // Neighbour ids in ascending order.
  std::vector<VertexId> link(VertexId id) const;
  int valency(VertexId id) const;

  bool is_connected() const;
  // Length of a shortest path, std::nullopt when unreachable.
  std::optional<int> edge_distance(VertexId a, VertexId b) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  Vertex& vertex_mut(VertexId id);

  std::vector<Vertex> vertices_;  // sorted by id
  std::vector<Edge> edges_;       // normalized pairs, sorted
};

// Subgraph induced on the given vertex ids (every id must exist).
WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<VertexId>& ids);

// Graph left after deleting the listed vertices and their incident edges.
// Ids that are not present are ignored.
WeightedGraph remove_vertices(const WeightedGraph& g,
                              const std::vector<VertexId>& ids);

// Connected components as induced subgraphs, ordered by smallest vertex id.
std::vector<WeightedGraph> components(const WeightedGraph& g);

// Single vertex (genus 0, weight 1), the seed of every regular graph.
WeightedGraph point_graph(VertexId id = 0);

// Compact single-line rendering used for memo keys and error messages.
std::string graph_key(const WeightedGraph& g);

}  // namespace dualgraph
