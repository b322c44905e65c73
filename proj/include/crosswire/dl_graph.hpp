#pragma once

// Diestel-Leader graphs DL(m,n): pairs (x,y) in T_m x T_n with
// level(x) + level(y) = 0, adjacent when both coordinates move along tree
// edges.  The height of (x,y) is level(x).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crosswire/graph.hpp"
#include "crosswire/horotree.hpp"

namespace crosswire {

struct DLVertex {
  TreeVertex x;
  TreeVertex y;

  auto operator<=>(const DLVertex&) const = default;
  bool operator==(const DLVertex&) const = default;
};

}  // namespace crosswire

template <>
struct std::hash<crosswire::DLVertex> {
  std::size_t operator()(const crosswire::DLVertex& w) const noexcept {
    std::size_t seed = std::hash<crosswire::TreeVertex>{}(w.x);
    crosswire::detail::hash_combine(seed, std::hash<crosswire::TreeVertex>{}(w.y));
    return seed;
  }
};

namespace crosswire {

inline DLVertex make_dl_vertex(TreeVertex x, TreeVertex y) {
  if (x.level() + y.level() != 0)
    throw Error(ErrorKind::invalid_vertex, "levels " + std::to_string(x.level()) + " and " +
                                               std::to_string(y.level()) + " do not sum to 0");
  return DLVertex{std::move(x), std::move(y)};
}

inline DLVertex dl_base(int m, int n) { return {TreeVertex::root(m), TreeVertex::root(n)}; }

inline std::int64_t height(const DLVertex& w) { return w.x.level(); }

inline std::string to_string(const DLVertex& w) {
  return "(" + to_string(w.x) + ";" + to_string(w.y) + ")";
}

inline DLVertex parse_dl_vertex(std::string_view text) {
  detail::Cursor in(text);
  in.expect('(');
  TreeVertex x = detail::parse_tree_vertex(in);
  in.expect(';');
  TreeVertex y = detail::parse_tree_vertex(in);
  in.expect(')');
  in.finish();
  return make_dl_vertex(std::move(x), std::move(y));
}

/// The m "up" neighbors (x moves to a child) followed by the n "down" ones.
inline std::vector<DLVertex> neighbors(const DLVertex& w) {
  std::vector<DLVertex> out;
  out.reserve(static_cast<std::size_t>(w.x.arity() + w.y.arity()));
  const TreeVertex py = parent(w.y);
  for (int c = 0; c < w.x.arity(); ++c) out.push_back({child(w.x, static_cast<std::uint32_t>(c)), py});
  const TreeVertex px = parent(w.x);
  for (int c = 0; c < w.y.arity(); ++c) out.push_back({px, child(w.y, static_cast<std::uint32_t>(c))});
  return out;
}

inline bool dl_adjacent(const DLVertex& u, const DLVertex& v) {
  return tree_adjacent(u.x, v.x) && tree_adjacent(u.y, v.y);
}

struct DLBall {
  int m = 2;
  int n = 2;
  int radius = 0;
  Graph<DLVertex> graph;
};

inline DLBall ball(int m, int n, const DLVertex& center, int radius) {
  if (radius < 0) throw Error(ErrorKind::invalid_radius, std::to_string(radius));
  if (center.x.arity() != m || center.y.arity() != n)
    throw Error(ErrorKind::incompatible_trees, "center " + to_string(center) + " is not in DL(" +
                                                   std::to_string(m) + "," + std::to_string(n) + ")");
  (void)make_dl_vertex(center.x, center.y);
  return {m, n, radius, bfs_ball(center, radius, [](const DLVertex& w) { return neighbors(w); })};
}

inline DLBall ball(int m, int n, int radius) { return ball(m, n, dl_base(m, n), radius); }

inline std::int64_t floor_mod(std::int64_t a, std::int64_t d) {
  const std::int64_t r = a % d;
  return r < 0 ? r + d : r;
}

/// The collapsed graph: vertices of B at heights divisible by d, joined when a
/// vertical geodesic of length d connects them.  Distances are relabelled in
/// the collapsed graph.
struct CollapsedGraph {
  int m = 2;
  int n = 2;
  int d = 1;
  Graph<DLVertex> graph;
};

inline CollapsedGraph collapse(const DLBall& b, int d) {
  if (d < 1) throw Error(ErrorKind::alignment, "collapse factor must be positive");
  const DLVertex& base = b.graph.base_vertex();
  if (floor_mod(height(base), d) != 0)
    throw Error(ErrorKind::alignment,
                "base height " + std::to_string(height(base)) + " not divisible by " + std::to_string(d));

  std::vector<DLVertex> kept;
  std::size_t base_index = 0;
  for (const auto& w : b.graph.vertices()) {
    if (floor_mod(height(w), d) != 0) continue;
    if (w == base) base_index = kept.size();
    kept.push_back(w);
  }
  // u (height h) and v (height h + d) are joined iff
  //   ancestor(v.x, h) == u.x  and  ancestor(u.y, -h - d) == v.y,
  // so both endpoints reduce to the same key pair.
  std::unordered_multimap<DLVertex, std::size_t> lower;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const DLVertex& u = kept[i];
    lower.emplace(DLVertex{u.x, ancestor(u.y, u.y.level() - d)}, i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const DLVertex& v = kept[i];
    auto [first, last] = lower.equal_range(DLVertex{ancestor(v.x, v.x.level() - d), v.y});
    for (auto it = first; it != last; ++it) edges.emplace_back(it->second, i);
  }
  return {b.m, b.n, d, Graph<DLVertex>(std::move(kept), edges, base_index)};
}

namespace detail {

// Groups the digits of a level-(d*k) vertex into blocks of d, most
// significant digit first.
inline TreeVertex collapse_tree_vertex(const TreeVertex& v, int d) {
  if (floor_mod(v.level(), d) != 0)
    throw Error(ErrorKind::alignment,
                "level " + std::to_string(v.level()) + " not divisible by " + std::to_string(d));
  std::int64_t arity = 1;
  for (int i = 0; i < d; ++i) arity *= v.arity();
  if (arity > (1LL << 30)) throw Error(ErrorKind::domain, "collapsed arity too large");
  Digits blocks;
  for (const auto& [pos, c] : v.digits()) {
    const std::int64_t block = (pos - floor_mod(pos, d)) / d;  // floor(pos / d)
    const std::int64_t offset = floor_mod(pos, d);
    std::uint64_t weight = 1;
    for (std::int64_t i = offset + 1; i < d; ++i) weight *= static_cast<std::uint64_t>(v.arity());
    blocks[block] += static_cast<std::uint32_t>(c * weight);
  }
  return TreeVertex(static_cast<int>(arity), v.level() / d, std::move(blocks));
}

}  // namespace detail

/// Bijection from height-divisible-by-d vertices of DL(m,n) onto DL(m^d,n^d).
inline DLVertex collapse_map(const DLVertex& w, int d) {
  if (d < 1) throw Error(ErrorKind::alignment, "collapse factor must be positive");
  return {detail::collapse_tree_vertex(w.x, d), detail::collapse_tree_vertex(w.y, d)};
}

/// Exchanges the two trees; maps DL(m,n) to DL(n,m).
inline DLVertex flip(const DLVertex& w) { return {w.y, w.x}; }

/// Translation by `amount` in height: x is shifted up, y down.
inline DLVertex shift(const DLVertex& w, std::int64_t amount) {
  return {shift(w.x, amount), shift(w.y, -amount)};
}

}  // namespace crosswire
