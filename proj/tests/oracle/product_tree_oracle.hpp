#pragma once

// Ball sizes in DL(m,n) computed without the library: each tree vertex is the
// word of its digits read downward from a fixed depth R below the base, and a
// DL vertex is a pair of such words whose lengths sum to 2R.

#include <cstddef>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Pair = std::pair<Word, Word>;

struct BallCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> spheres;
};

inline BallCounts dl_ball_counts(int m, int n, int radius) {
  const Pair base{Word(radius, 0), Word(radius, 0)};
  auto moves = [&](const Pair& p) {
    std::vector<Pair> out;
    if (!p.second.empty())
      for (int c = 0; c < m; ++c) {
        Pair q = p;
        q.first.push_back(c);
        q.second.pop_back();
        out.push_back(q);
      }
    if (!p.first.empty())
      for (int c = 0; c < n; ++c) {
        Pair q = p;
        q.first.pop_back();
        q.second.push_back(c);
        out.push_back(q);
      }
    return out;
  };

  std::set<Pair> seen{base};
  std::vector<std::vector<Pair>> layers{{base}};
  for (int r = 0; r < radius; ++r) {
    std::vector<Pair> next;
    for (const Pair& p : layers.back())
      for (const Pair& q : moves(p))
        if (seen.insert(q).second) next.push_back(q);
    layers.push_back(std::move(next));
  }

  BallCounts out;
  out.vertices = seen.size();
  for (const auto& layer : layers) out.spheres.push_back(layer.size());
  std::size_t ends = 0;
  for (const Pair& p : seen)
    for (const Pair& q : moves(p))
      if (seen.count(q)) ++ends;
  out.edges = ends / 2;
  return out;
}

}  // namespace oracle
