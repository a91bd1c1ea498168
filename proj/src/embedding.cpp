#include "dualgraph/embedding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dualgraph {

VertexMap::VertexMap(std::vector<std::pair<VertexId, VertexId>> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].first == pairs_[i - 1].first)
      throw std::invalid_argument("source id " +
                                  std::to_string(pairs_[i].first) +
                                  " mapped twice");
  }
}

VertexMap VertexMap::identity(const WeightedGraph& g) {
  VertexMap m;
  for (const Vertex& v : g.vertices()) m.pairs_.push_back({v.id, v.id});
  return m;
}

VertexMap VertexMap::identity(const std::vector<VertexId>& ids) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId id : ids) pairs.push_back({id, id});
  return VertexMap(std::move(pairs));
}

std::optional<VertexId> VertexMap::find(VertexId source) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), source,
      [](const auto& pair, VertexId target) { return pair.first < target; });
  if (it == pairs_.end() || it->first != source) return std::nullopt;
  return it->second;
}

VertexId VertexMap::at(VertexId source) const {
  auto target = find(source);
  if (!target)
    throw std::invalid_argument("vertex id " + std::to_string(source) +
                                " not mapped");
  return *target;
}

bool VertexMap::maps_to(VertexId target) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [target](const auto& p) { return p.second == target; });
}

void VertexMap::insert(VertexId source, VertexId target) {
  if (contains(source))
    throw std::invalid_argument("source id " + std::to_string(source) +
                                " mapped twice");
  std::pair<VertexId, VertexId> p{source, target};
  pairs_.insert(std::upper_bound(pairs_.begin(), pairs_.end(), p), p);
}

bool VertexMap::is_injective() const {
  std::set<VertexId> targets;
  for (const auto& p : pairs_)
    if (!targets.insert(p.second).second) return false;
  return true;
}

VertexMap VertexMap::inverse() const {
  if (!is_injective()) throw std::invalid_argument("map is not injective");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& p : pairs_) pairs.push_back({p.second, p.first});
  return VertexMap(std::move(pairs));
}

std::vector<VertexId> VertexMap::domain() const {
  std::vector<VertexId> out;
  for (const auto& p : pairs_) out.push_back(p.first);
  return out;
}

std::vector<VertexId> VertexMap::image() const {
  std::vector<VertexId> out;
  for (const auto& p : pairs_) out.push_back(p.second);
  std::sort(out.begin(), out.end());
  return out;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& p : inner.pairs()) pairs.push_back({p.first, outer.at(p.second)});
  return VertexMap(std::move(pairs));
}

std::optional<Violation> check_embedding(const WeightedGraph& source,
                                         const WeightedGraph& target,
                                         const VertexMap& m) {
  for (const Vertex& v : source.vertices()) {
    auto image = m.find(v.id);
    if (!image)
      return Violation{"vertex " + std::to_string(v.id) + " not mapped"};
    if (!target.has_vertex(*image))
      return Violation{"vertex " + std::to_string(v.id) +
                       " maps to unknown vertex " + std::to_string(*image)};
    const Vertex& w = target.vertex(*image);
    if (w.genus != v.genus)
      return Violation{"genus mismatch at vertex " + std::to_string(v.id)};
    if (w.weight != v.weight)
      return Violation{"weight mismatch at vertex " + std::to_string(v.id)};
  }
  for (const auto& p : m.pairs()) {
    if (!source.has_vertex(p.first))
      return Violation{"map mentions unknown vertex " +
                       std::to_string(p.first)};
  }
  if (!m.is_injective()) return Violation{"map is not injective"};
  for (const Edge& e : source.edges()) {
    if (!target.has_edge(m.at(e.first), m.at(e.second)))
      return Violation{"edge [" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "] not preserved"};
  }
  return std::nullopt;
}

namespace {

// Backtracking search shared by the isomorphism and embedding entry points.
// Source vertices are processed in ascending id order and candidate targets
// tried in ascending id order, so matches are produced in lexicographic
// order of their pair lists and the first hit is the minimal one.
struct MatchSearch {
  const WeightedGraph& small;
  const WeightedGraph& big;
  bool bijective;
  std::size_t limit;

  std::vector<VertexId> sids, bids;
  std::vector<std::vector<bool>> sadj, badj;  // indexed by position
  std::vector<int> sdeg, bdeg;
  std::vector<int> assign;  // small index -> big index
  std::vector<bool> used;
  std::vector<VertexMap> out;

  MatchSearch(const WeightedGraph& small_graph, const WeightedGraph& big_graph,
              bool bijective_mode, std::size_t max_results)
      : small(small_graph),
        big(big_graph),
        bijective(bijective_mode),
        limit(max_results) {
    for (const Vertex& v : small.vertices()) sids.push_back(v.id);
    for (const Vertex& v : big.vertices()) bids.push_back(v.id);
    sadj = adjacency(small, sids);
    badj = adjacency(big, bids);
    for (std::size_t i = 0; i < sids.size(); ++i)
      sdeg.push_back(static_cast<int>(
          std::count(sadj[i].begin(), sadj[i].end(), true)));
    for (std::size_t i = 0; i < bids.size(); ++i)
      bdeg.push_back(static_cast<int>(
          std::count(badj[i].begin(), badj[i].end(), true)));
    assign.assign(sids.size(), -1);
    used.assign(bids.size(), false);
  }

  static std::vector<std::vector<bool>> adjacency(
      const WeightedGraph& g, const std::vector<VertexId>& ids) {
    std::vector<std::vector<bool>> adj(ids.size(),
                                       std::vector<bool>(ids.size(), false));
    auto index = [&ids](VertexId id) {
      return std::lower_bound(ids.begin(), ids.end(), id) - ids.begin();
    };
    for (const Edge& e : g.edges()) {
      auto a = index(e.first), b = index(e.second);
      adj[a][b] = adj[b][a] = true;
    }
    return adj;
  }

  bool compatible(std::size_t si, std::size_t bi) const {
    const Vertex& s = small.vertices()[si];
    const Vertex& b = big.vertices()[bi];
    if (s.genus != b.genus || s.weight != b.weight) return false;
    if (bijective ? sdeg[si] != bdeg[bi] : sdeg[si] > bdeg[bi]) return false;
    for (std::size_t sj = 0; sj < si; ++sj) {
      bool small_edge = sadj[si][sj];
      bool big_edge = badj[bi][assign[sj]];
      if (small_edge && !big_edge) return false;
      if (bijective && !small_edge && big_edge) return false;
    }
    return true;
  }

  bool run(std::size_t si) {  // returns false once the limit is reached
    if (si == sids.size()) {
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (std::size_t i = 0; i < sids.size(); ++i)
        pairs.push_back({sids[i], bids[assign[i]]});
      out.push_back(VertexMap(std::move(pairs)));
      return out.size() < limit;
    }
    for (std::size_t bi = 0; bi < bids.size(); ++bi) {
      if (used[bi] || !compatible(si, bi)) continue;
      assign[si] = static_cast<int>(bi);
      used[bi] = true;
      bool keep_going = run(si + 1);
      used[bi] = false;
      assign[si] = -1;
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const WeightedGraph& a,
                                          const WeightedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  MatchSearch search(a, b, /*bijective_mode=*/true, 1);
  search.run(0);
  if (search.out.empty()) return std::nullopt;
  return search.out.front();
}

std::vector<VertexMap> find_embeddings(const WeightedGraph& small,
                                       const WeightedGraph& big,
                                       std::size_t limit) {
  if (limit == 0) return {};
  if (small.vertex_count() > big.vertex_count() ||
      small.edge_count() > big.edge_count())
    return {};
  MatchSearch search(small, big, /*bijective_mode=*/false, limit);
  search.run(0);
  return search.out;
}

}  // namespace dualgraph
