#pragma once

// Capability record for a cross-wired lamplighter datum (H, L, L', t) inside
// Gamma = H x| <t>.
//
// Conventions used throughout the engine:
//   L_n  = t^n L t^-n        (decreasing in n; tree T has levels n)
//   L'_n = t^-n L' t^n       (decreasing in n; tree T' has levels n)
// A vertex of the horocyclic product is a pair (a L_n, b L'_-n).

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "crosswire/error.hpp"

namespace crosswire {

enum class Side { L, Lp };

inline const char* to_string(Side side) { return side == Side::L ? "L" : "Lp"; }

template <class G>
struct CwlPresentation {
  std::string id;

  // Group law on Gamma.
  G identity;
  std::function<G(const G&, const G&)> multiply;
  std::function<G(const G&)> invert;
  std::function<G(std::int64_t)> t_power;
  /// t^k g t^-k.
  std::function<G(const G&, std::int64_t)> conj;
  /// The projection Gamma -> Z.
  std::function<std::int64_t(const G&)> height;

  std::function<bool(const G&)> in_H;
  std::function<bool(const G&)> in_L;
  std::function<bool(const G&)> in_Lp;

  /// Canonical representatives of h L and h L' for h in H.
  std::function<G(const G&)> canon_L;
  std::function<G(const G&)> canon_Lp;

  /// Transversal of t L t^-1 in L, and of t^-1 L' t in L'.
  std::vector<G> transversal_L;
  std::vector<G> transversal_Lp;

  // Truncation N: the examples bound the support of H-elements by [-N, N].
  std::function<bool(const G&, int)> within_truncation;
  std::function<std::vector<G>(int)> enumerate_L;
  std::function<std::vector<G>(int)> enumerate_Lp;
  /// Canonical representatives of the cosets h L' for h in the truncation.
  std::function<std::vector<G>(int)> lp_coset_reps;
  std::function<std::uint64_t(int)> count_H;
  std::function<void(int, const std::function<void(const G&)>&)> for_each_H;
  std::function<G(int, std::mt19937_64&)> random_H;

  /// h -> (l, l') with l in L, l' in L' and l l' = h, when H = L L'.
  std::optional<std::function<std::pair<G, G>(const G&)>> factor;
};

/// A vertex of a Bass-Serre tree: the coset rep L_level (or rep L'_level),
/// with rep in canonical form.
template <class G>
struct CosetVertex {
  Side side = Side::L;
  std::int64_t level = 0;
  G rep;

  bool operator==(const CosetVertex&) const = default;
};

/// A vertex (a L_n, b L'_-n) of the horocyclic product of the two trees.
template <class G>
struct CosetPair {
  CosetVertex<G> x;
  CosetVertex<G> y;

  bool operator==(const CosetPair&) const = default;
};

template <class G>
std::string to_string(const CosetVertex<G>& v) {
  return std::string(to_string(v.side)) + "@" + std::to_string(v.level) + ":" + to_string(v.rep);
}

template <class G>
std::string to_string(const CosetPair<G>& v) {
  return "(" + to_string(v.x) + ";" + to_string(v.y) + ")";
}

}  // namespace crosswire

template <class G>
struct std::hash<crosswire::CosetVertex<G>> {
  std::size_t operator()(const crosswire::CosetVertex<G>& v) const noexcept {
    std::size_t seed = std::hash<G>{}(v.rep);
    crosswire::detail::hash_combine(seed, std::hash<std::int64_t>{}(v.level));
    crosswire::detail::hash_combine(seed, static_cast<std::size_t>(v.side));
    return seed;
  }
};

template <class G>
struct std::hash<crosswire::CosetPair<G>> {
  std::size_t operator()(const crosswire::CosetPair<G>& v) const noexcept {
    std::size_t seed = std::hash<crosswire::CosetVertex<G>>{}(v.x);
    crosswire::detail::hash_combine(seed, std::hash<crosswire::CosetVertex<G>>{}(v.y));
    return seed;
  }
};
