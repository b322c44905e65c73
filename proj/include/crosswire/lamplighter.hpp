#pragma once

// The lamplighter group Z/n wr Z and its identification with DL(n,n).
//
// An element is (config, shift) with the law
//   (f1, k1)(f2, k2) = (f1 + f2(. - k1), k1 + k2).
// Cayley adjacency is right multiplication by S = {(a d0, 1)^{+-1}}; the
// isometric action on DL(n,n) is left multiplication.

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "crosswire/dl_graph.hpp"
#include "crosswire/graph.hpp"
#include "crosswire/presentation.hpp"
#include "crosswire/text.hpp"

namespace crosswire {

class LamplighterElement {
 public:
  LamplighterElement() = default;

  LamplighterElement(std::uint32_t modulus, Digits config, std::int64_t shift = 0)
      : modulus_(modulus), shift_(shift) {
    if (modulus_ < 2) throw Error(ErrorKind::invalid_modulus, "lamp modulus must be >= 2");
    for (const auto& [pos, a] : config) {
      const std::uint32_t v = a % modulus_;
      if (v != 0) config_.emplace_hint(config_.end(), pos, v);
    }
  }

  static LamplighterElement identity(std::uint32_t modulus) { return {modulus, {}, 0}; }
  static LamplighterElement t(std::uint32_t modulus, std::int64_t k = 1) { return {modulus, {}, k}; }
  static LamplighterElement lamp(std::uint32_t modulus, std::int64_t position, std::uint32_t value) {
    return {modulus, {{position, value}}, 0};
  }

  std::uint32_t modulus() const { return modulus_; }
  const Digits& config() const { return config_; }
  std::int64_t shift() const { return shift_; }

  std::uint32_t lamp_at(std::int64_t position) const {
    auto it = config_.find(position);
    return it == config_.end() ? 0 : it->second;
  }

  auto operator<=>(const LamplighterElement&) const = default;
  bool operator==(const LamplighterElement&) const = default;

 private:
  std::uint32_t modulus_ = 2;
  Digits config_;
  std::int64_t shift_ = 0;
};

}  // namespace crosswire

template <>
struct std::hash<crosswire::LamplighterElement> {
  std::size_t operator()(const crosswire::LamplighterElement& g) const noexcept {
    std::size_t seed = std::hash<std::int64_t>{}(g.shift());
    crosswire::detail::hash_combine(seed, g.modulus());
    return crosswire::detail::hash_sparse(g.config(), seed);
  }
};

namespace crosswire {

inline LamplighterElement ll_mul(const LamplighterElement& a, const LamplighterElement& b) {
  if (a.modulus() != b.modulus())
    throw Error(ErrorKind::modulus_mismatch,
                std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  Digits config = a.config();
  for (const auto& [pos, v] : b.config()) config[pos + a.shift()] += v;
  return {a.modulus(), std::move(config), a.shift() + b.shift()};
}

inline LamplighterElement ll_inv(const LamplighterElement& g) {
  Digits config;
  for (const auto& [pos, v] : g.config()) config.emplace_hint(config.end(), pos - g.shift(), g.modulus() - v);
  return {g.modulus(), std::move(config), -g.shift()};
}

inline std::string to_string(const LamplighterElement& g) {
  std::string out = "LL" + std::to_string(g.modulus()) + ":k=" + std::to_string(g.shift()) + "{";
  bool first = true;
  for (const auto& [pos, v] : g.config()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(pos) + "=" + std::to_string(v);
  }
  return out + "}";
}

inline LamplighterElement parse_lamplighter(std::string_view text) {
  detail::Cursor in(text);
  in.expect("LL");
  const std::int64_t n = in.integer();
  if (n < 2 || n > (1 << 30)) in.fail("modulus out of range");
  in.expect(":k=");
  const std::int64_t k = in.integer();
  in.expect('{');
  Digits config;
  if (!in.accept('}')) {
    do {
      const std::int64_t pos = in.integer();
      in.expect('=');
      const std::int64_t a = in.integer();
      if (!config.empty() && pos <= config.rbegin()->first) in.fail("positions not ascending");
      if (a <= 0 || a >= n) in.fail("lamp value out of range or zero");
      config.emplace_hint(config.end(), pos, static_cast<std::uint32_t>(a));
    } while (in.accept(','));
    in.expect('}');
  }
  in.finish();
  return {static_cast<std::uint32_t>(n), std::move(config), k};
}

/// x carries the lamps below the lamplighter, y the lamps at or above it
/// (read in reverse: the y-digit at position i is the lamp at -1-i).
inline DLVertex ll_to_dl(const LamplighterElement& g) {
  const int n = static_cast<int>(g.modulus());
  const std::int64_t k = g.shift();
  Digits xd, yd;
  for (const auto& [pos, v] : g.config()) {
    if (pos < k)
      xd.emplace(pos, v);
    else
      yd.emplace(-1 - pos, v);
  }
  return {TreeVertex(n, k, std::move(xd)), TreeVertex(n, -k, std::move(yd))};
}

inline LamplighterElement dl_to_ll(const DLVertex& w) {
  if (w.x.arity() != w.y.arity())
    throw Error(ErrorKind::incompatible_trees, "lamplighter vertices live in DL(n,n)");
  if (height(w) + w.y.level() != 0) throw Error(ErrorKind::invalid_vertex, to_string(w));
  Digits config = w.x.digits();
  for (const auto& [i, v] : w.y.digits()) config.emplace(-1 - i, v);
  return {static_cast<std::uint32_t>(w.x.arity()), std::move(config), height(w)};
}

inline DLVertex ll_act(const LamplighterElement& g, const DLVertex& w) {
  if (static_cast<int>(g.modulus()) != w.x.arity())
    throw Error(ErrorKind::modulus_mismatch, "element and vertex disagree on n");
  return ll_to_dl(ll_mul(g, dl_to_ll(w)));
}

/// S = {(a d0, 1) : a in Z/n} together with the inverses; 2n elements.
inline std::vector<LamplighterElement> ll_generators(std::uint32_t n) {
  std::vector<LamplighterElement> out;
  for (std::uint32_t a = 0; a < n; ++a) out.emplace_back(n, Digits{{0, a}}, 1);
  for (std::uint32_t a = 0; a < n; ++a) out.push_back(ll_inv(out[a]));
  return out;
}

inline Graph<LamplighterElement> ll_cayley_ball(std::uint32_t n, int radius) {
  if (n < 2) throw Error(ErrorKind::invalid_modulus, "lamp modulus must be >= 2");
  const auto gens = ll_generators(n);
  return bfs_ball(LamplighterElement::identity(n), radius, [&](const LamplighterElement& g) {
    std::vector<LamplighterElement> out;
    out.reserve(gens.size());
    for (const auto& s : gens) out.push_back(ll_mul(g, s));
    return out;
  });
}

// --- Cross-wired lamplighter datum -------------------------------------------

/// L = {shift 0, support in [l_start, inf)}, L' = {shift 0, support in (-inf, lp_end]}.
/// The standard datum is l_start = lp_end = 0.
struct LamplighterSubgroups {
  std::int64_t l_start = 0;
  std::int64_t lp_end = 0;
};

inline bool ll_in_L(const LamplighterElement& g, LamplighterSubgroups s = {}) {
  return g.shift() == 0 && (g.config().empty() || g.config().begin()->first >= s.l_start);
}

inline bool ll_in_Lp(const LamplighterElement& g, LamplighterSubgroups s = {}) {
  return g.shift() == 0 && (g.config().empty() || g.config().rbegin()->first <= s.lp_end);
}

namespace detail {

inline LamplighterElement restrict_config(const LamplighterElement& g, std::int64_t lo, std::int64_t hi) {
  Digits config(g.config().lower_bound(lo), g.config().upper_bound(hi));
  return {g.modulus(), std::move(config), g.shift()};
}

// Every config supported in [lo, hi], in odometer order.
template <class Fn>
void for_each_config(std::uint32_t n, std::int64_t lo, std::int64_t hi, Fn&& fn) {
  if (hi < lo) {
    fn(LamplighterElement::identity(n));
    return;
  }
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(hi - lo + 1), 0);
  while (true) {
    Digits config;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] != 0) config.emplace_hint(config.end(), lo + static_cast<std::int64_t>(i), digits[i]);
    fn(LamplighterElement(n, std::move(config), 0));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

inline std::vector<LamplighterElement> all_configs(std::uint32_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<LamplighterElement> out;
  for_each_config(n, lo, hi, [&](const LamplighterElement& g) { out.push_back(g); });
  return out;
}

}  // namespace detail

inline CwlPresentation<LamplighterElement> lamplighter_presentation(std::uint32_t n,
                                                                   LamplighterSubgroups s = {}) {
  if (n < 2) throw Error(ErrorKind::invalid_modulus, "lamp modulus must be >= 2");
  CwlPresentation<LamplighterElement> p;
  p.id = "lamplighter(n=" + std::to_string(n) + ",L>=" + std::to_string(s.l_start) +
         ",Lp<=" + std::to_string(s.lp_end) + ")";
  p.identity = LamplighterElement::identity(n);
  p.multiply = ll_mul;
  p.invert = ll_inv;
  p.t_power = [n](std::int64_t k) { return LamplighterElement::t(n, k); };
  p.conj = [](const LamplighterElement& g, std::int64_t k) {
    Digits config;
    for (const auto& [pos, v] : g.config()) config.emplace_hint(config.end(), pos + k, v);
    return LamplighterElement(g.modulus(), std::move(config), g.shift());
  };
  p.height = [](const LamplighterElement& g) { return g.shift(); };
  p.in_H = [](const LamplighterElement& g) { return g.shift() == 0; };
  p.in_L = [s](const LamplighterElement& g) { return ll_in_L(g, s); };
  p.in_Lp = [s](const LamplighterElement& g) { return ll_in_Lp(g, s); };
  p.canon_L = [s](const LamplighterElement& h) {
    return detail::restrict_config(h, INT64_MIN, s.l_start - 1);
  };
  p.canon_Lp = [s](const LamplighterElement& h) {
    return detail::restrict_config(h, s.lp_end + 1, INT64_MAX);
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    p.transversal_L.push_back(LamplighterElement(n, {{s.l_start, a}}));
    p.transversal_Lp.push_back(LamplighterElement(n, {{s.lp_end, a}}));
  }
  p.within_truncation = [](const LamplighterElement& g, int N) {
    return g.shift() == 0 && (g.config().empty() || (g.config().begin()->first >= -N &&
                                                     g.config().rbegin()->first <= N));
  };
  p.enumerate_L = [n, s](int N) {
    return detail::all_configs(n, std::max<std::int64_t>(s.l_start, -N), N);
  };
  p.enumerate_Lp = [n, s](int N) {
    return detail::all_configs(n, -N, std::min<std::int64_t>(s.lp_end, N));
  };
  p.lp_coset_reps = [n, s](int N) {
    return detail::all_configs(n, std::max<std::int64_t>(s.lp_end + 1, -N), N);
  };
  p.count_H = [n](int N) {
    std::uint64_t count = 1;
    for (int i = -N; i <= N; ++i) count *= n;
    return count;
  };
  p.for_each_H = [n](int N, const std::function<void(const LamplighterElement&)>& fn) {
    detail::for_each_config(n, -N, N, fn);
  };
  p.random_H = [n](int N, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> lamp(0, n - 1);
    Digits config;
    for (std::int64_t pos = -N; pos <= N; ++pos) config.emplace(pos, lamp(rng));
    return LamplighterElement(n, std::move(config), 0);
  };
  if (s.l_start <= s.lp_end + 1) {
    p.factor = [s](const LamplighterElement& h) {
      return std::pair{detail::restrict_config(h, s.l_start, INT64_MAX),
                       detail::restrict_config(h, INT64_MIN, s.l_start - 1)};
    };
  }
  return p;
}

/// The tree vertex of T_n named by a canonical coset of the lamplighter datum
/// with l_start = lp_end = 0: a L_k keeps the lamps below k, b L'_k keeps the
/// lamps above -k (the T'-digit at position i is the lamp at -i).
inline TreeVertex ll_coset_tree_vertex(const CosetVertex<LamplighterElement>& v) {
  const int n = static_cast<int>(v.rep.modulus());
  if (v.side == Side::L) return TreeVertex(n, v.level, v.rep.config());
  Digits digits;
  for (const auto& [pos, a] : v.rep.config()) digits.emplace(-pos, a);
  return TreeVertex(n, v.level, std::move(digits));
}

}  // namespace crosswire
