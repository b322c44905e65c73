#pragma once

// Finite labeled graphs: BFS ball construction, explicit-correspondence
// isomorphism checks, and edge-list / DOT export.
//
// Vertex types only need std::hash, operator== and an ADL-visible
// to_string(); vertices are stored in lexicographic order of their
// serialization so that every export is deterministic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crosswire/error.hpp"

namespace crosswire {

template <class V>
class Graph {
 public:
  Graph() = default;

  /// Builds the graph on `vertices` with the given undirected edges (given as
  /// index pairs into `vertices`), and labels BFS distances from `base`.
  Graph(std::vector<V> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
        std::size_t base) {
    const std::size_t count = vertices.size();
    std::vector<std::string> labels(count);
    for (std::size_t i = 0; i < count; ++i) labels[i] = to_string(vertices[i]);
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<std::size_t> rank(count);
    for (std::size_t i = 0; i < count; ++i) rank[order[i]] = i;

    vertices_.reserve(count);
    labels_.reserve(count);
    for (std::size_t i : order) {
      vertices_.push_back(std::move(vertices[i]));
      labels_.push_back(std::move(labels[i]));
    }
    index_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      auto [it, inserted] = index_.emplace(vertices_[i], i);
      if (!inserted) throw Error(ErrorKind::domain, "duplicate vertex " + labels_[i]);
    }
    adjacency_.assign(count, {});
    for (auto [a, b] : edges) {
      const std::size_t u = rank.at(a);
      const std::size_t v = rank.at(b);
      if (u == v) continue;
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& row : adjacency_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    base_ = count == 0 ? 0 : rank.at(base);
    relabel_distances();
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<V>& vertices() const { return vertices_; }
  const V& vertex(std::size_t i) const { return vertices_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

  std::size_t base() const { return base_; }
  const V& base_vertex() const { return vertices_[base_]; }

  /// BFS distance from the base inside this graph; -1 when unreachable.
  int distance(std::size_t i) const { return distance_[i]; }

  int radius() const {
    int r = 0;
    for (int d : distance_) r = std::max(r, d);
    return r;
  }

  std::optional<std::size_t> index_of(const V& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const V& v) const { return index_.count(v) != 0; }

  bool adjacent(std::size_t u, std::size_t v) const {
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.size();
    return twice / 2;
  }

  /// Edges as index pairs (u < v), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Sizes of the BFS spheres around the base, indexed by distance.
  std::vector<std::size_t> sphere_sizes() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(radius()) + 1, 0);
    for (int d : distance_)
      if (d >= 0) ++out[static_cast<std::size_t>(d)];
    return out;
  }

 private:
  void relabel_distances() {
    distance_.assign(size(), -1);
    if (size() == 0) return;
    std::deque<std::size_t> queue{base_};
    distance_[base_] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adjacency_[u]) {
        if (distance_[v] >= 0) continue;
        distance_[v] = distance_[u] + 1;
        queue.push_back(v);
      }
    }
  }

  std::vector<V> vertices_;
  std::vector<std::string> labels_;
  std::unordered_map<V, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> distance_;
  std::size_t base_ = 0;
};

/// All vertices within `radius` of `center`, with the induced adjacency.
/// `neighbors(v)` must return an iterable of V and describe a symmetric
/// relation.
template <class V, class NeighborFn>
Graph<V> bfs_ball(const V& center, int radius, NeighborFn&& neighbors) {
  if (radius < 0) throw Error(ErrorKind::invalid_radius, std::to_string(radius));
  std::unordered_map<V, std::size_t> index;
  std::vector<V> order;
  std::vector<int> dist;
  index.emplace(center, 0);
  order.push_back(center);
  dist.push_back(0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int d = dist[head];
    // Copy: `order` may reallocate while we append.
    const V current = order[head];
    for (auto&& next : neighbors(current)) {
      auto it = index.find(next);
      if (it == index.end()) {
        if (d == radius) continue;
        it = index.emplace(next, order.size()).first;
        order.push_back(next);
        dist.push_back(d + 1);
      }
      if (head < it->second) edges.emplace_back(head, it->second);
    }
  }
  // Edges between two boundary vertices are found from the lower index only
  // when both are already known; pick up the ones seen from the other side.
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (dist[head] != radius) continue;
    const V current = order[head];
    for (auto&& next : neighbors(current)) {
      auto it = index.find(next);
      if (it != index.end() && it->second < head && dist[it->second] == radius)
        edges.emplace_back(it->second, head);
    }
  }
  return Graph<V>(std::move(order), edges, 0);
}

/// Induced subgraph on the vertices within `radius` of the base.
template <class V>
Graph<V> sub_ball(const Graph<V>& g, int radius) {
  std::vector<V> keep;
  std::vector<std::size_t> remap(g.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int d = g.distance(i);
    if (d >= 0 && d <= radius) {
      remap[i] = keep.size();
      keep.push_back(g.vertex(i));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : g.edges())
    if (remap[u] != static_cast<std::size_t>(-1) && remap[v] != static_cast<std::size_t>(-1))
      edges.emplace_back(remap[u], remap[v]);
  return Graph<V>(std::move(keep), edges, remap[g.base()]);
}

enum class Witness { none, not_in_target, not_injective, not_surjective, broken_edge, phantom_edge };

inline const char* to_string(Witness w) {
  switch (w) {
    case Witness::none: return "none";
    case Witness::not_in_target: return "missing-vertex";
    case Witness::not_injective: return "not-injective";
    case Witness::not_surjective: return "unhit-vertex";
    case Witness::broken_edge: return "broken-edge";
    case Witness::phantom_edge: return "phantom-edge";
  }
  return "unknown";
}

struct BijectionReport {
  bool ok = true;
  Witness witness = Witness::none;
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// Checks that `f` is a bijection from A's vertices onto B's vertices that
/// preserves adjacency and non-adjacency.  `f` returns std::optional; an empty
/// result is a domain error.
template <class VA, class VB, class F>
BijectionReport check_bijection(F&& f, const Graph<VA>& a, const Graph<VB>& b) {
  std::vector<std::size_t> image(a.size());
  std::vector<std::size_t> preimage(b.size(), static_cast<std::size_t>(-1));
  for (std::size_t u = 0; u < a.size(); ++u) {
    std::optional<VB> fu = f(a.vertex(u));
    if (!fu) throw Error(ErrorKind::domain, "correspondence undefined on " + a.label(u));
    auto j = b.index_of(*fu);
    if (!j) return {false, Witness::not_in_target, a.label(u) + " -> " + to_string(*fu)};
    if (preimage[*j] != static_cast<std::size_t>(-1))
      return {false, Witness::not_injective,
              a.label(preimage[*j]) + " and " + a.label(u) + " -> " + b.label(*j)};
    preimage[*j] = u;
    image[u] = *j;
  }
  for (std::size_t j = 0; j < b.size(); ++j)
    if (preimage[j] == static_cast<std::size_t>(-1))
      return {false, Witness::not_surjective, b.label(j)};
  for (auto [u, v] : a.edges())
    if (!b.adjacent(image[u], image[v]))
      return {false, Witness::broken_edge, a.label(u) + " ~ " + a.label(v)};
  for (auto [i, j] : b.edges())
    if (!a.adjacent(preimage[i], preimage[j]))
      return {false, Witness::phantom_edge, b.label(i) + " ~ " + b.label(j)};
  return {};
}

/// One edge per line, `u<TAB>v` with u < v, lines sorted.
template <class V>
void write_edge_list(std::ostream& out, const Graph<V>& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << '\t' << g.label(v) << '\n';
}

/// DOT export; `height(v)` supplies the per-node `height` attribute.
template <class V, class HeightFn>
void write_dot(std::ostream& out, const Graph<V>& g, const std::string& name, HeightFn&& height) {
  out << "graph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << "  \"" << g.label(i) << "\" [height=" << height(g.vertex(i)) << "];\n";
  for (auto [u, v] : g.edges()) out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
  out << "}\n";
}

}  // namespace crosswire
