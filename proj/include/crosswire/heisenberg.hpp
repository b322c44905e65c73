#pragma once

// The Heisenberg group over A = F_p[t, 1/t] extended by the automorphism
//   Phi(x, y, z) = (t x, t y, t^2 z),
// with L = H(F_p[t]) and L' = H(F_p[1/t]).
//
// An H-part (x, y, z) stands for the unipotent matrix [[1,x,z],[0,1,y],[0,0,1]],
// so (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).  A full element
// (h, k) stands for h t^k, and (h1,k1)(h2,k2) = (h1 Phi^k1(h2), k1+k2).

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosswire/laurent.hpp"
#include "crosswire/presentation.hpp"

namespace crosswire {

struct HPart {
  LaurentPoly x;
  LaurentPoly y;
  LaurentPoly z;

  static HPart identity(std::uint32_t p) { return {LaurentPoly(p), LaurentPoly(p), LaurentPoly(p)}; }

  std::uint32_t modulus() const { return x.modulus(); }

  auto operator<=>(const HPart&) const = default;
  bool operator==(const HPart&) const = default;
};

struct HeisenbergElement {
  HPart h;
  std::int64_t k = 0;

  static HeisenbergElement identity(std::uint32_t p) { return {HPart::identity(p), 0}; }
  static HeisenbergElement t(std::uint32_t p, std::int64_t k = 1) { return {HPart::identity(p), k}; }

  std::uint32_t modulus() const { return h.modulus(); }

  auto operator<=>(const HeisenbergElement&) const = default;
  bool operator==(const HeisenbergElement&) const = default;
};

}  // namespace crosswire

template <>
struct std::hash<crosswire::HPart> {
  std::size_t operator()(const crosswire::HPart& h) const noexcept {
    std::size_t seed = std::hash<crosswire::LaurentPoly>{}(h.x);
    crosswire::detail::hash_combine(seed, std::hash<crosswire::LaurentPoly>{}(h.y));
    crosswire::detail::hash_combine(seed, std::hash<crosswire::LaurentPoly>{}(h.z));
    return seed;
  }
};

template <>
struct std::hash<crosswire::HeisenbergElement> {
  std::size_t operator()(const crosswire::HeisenbergElement& g) const noexcept {
    std::size_t seed = std::hash<crosswire::HPart>{}(g.h);
    crosswire::detail::hash_combine(seed, std::hash<std::int64_t>{}(g.k));
    return seed;
  }
};

namespace crosswire {

inline HPart h_mul(const HPart& a, const HPart& b) { return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y}; }

inline HPart h_inv(const HPart& a) { return {-a.x, -a.y, a.x * a.y - a.z}; }

/// Phi^k.
inline HPart phi(const HPart& a, std::int64_t k) {
  return {a.x.shifted(k), a.y.shifted(k), a.z.shifted(2 * k)};
}

inline HeisenbergElement h_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
  return {h_mul(a.h, phi(b.h, a.k)), a.k + b.k};
}

inline HeisenbergElement h_inv(const HeisenbergElement& a) { return {phi(h_inv(a.h), -a.k), -a.k}; }

inline HPart commutator(const HPart& a, const HPart& b) {
  return h_mul(h_mul(a, b), h_inv(h_mul(b, a)));
}

inline bool in_L(const HPart& h) {
  for (const auto* f : {&h.x, &h.y, &h.z})
    if (!f->is_zero() && f->min_exponent() < 0) return false;
  return true;
}

inline bool in_Lp(const HPart& h) {
  for (const auto* f : {&h.x, &h.y, &h.z})
    if (!f->is_zero() && f->max_exponent() > 0) return false;
  return true;
}

/// Normal form of the left coset hL (side L) or hL' (side Lp).  On the L side
/// exponent 0 is absorbed by L, so the form has strictly negative support; on
/// the L' side it is absorbed by L', leaving strictly positive support.
inline HPart canon_coset(const HPart& h, Side side) {
  if (side == Side::L) {
    const LaurentPoly w = h.z - h.x * h.y.at_least(0);
    return {h.x.below(0), h.y.below(0), w.below(0)};
  }
  const LaurentPoly w = h.z - h.x * h.y.below(1);
  return {h.x.at_least(1), h.y.at_least(1), w.at_least(1)};
}

/// (l, l') with l in L, l' in L' and l * l' = h.
inline std::pair<HPart, HPart> factor(const HPart& h) {
  const LaurentPoly w = h.z - h.x.at_least(0) * h.y.below(0);
  return {{h.x.at_least(0), h.y.at_least(0), w.at_least(0)}, {h.x.below(0), h.y.below(0), w.below(0)}};
}

inline void require_prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 16)) throw Error(ErrorKind::invalid_modulus, std::to_string(p) + " is not a supported prime");
}

/// The p^4 elements (a, b, c + d t) (side L) or (a, b, c + d/t) (side Lp):
/// a transversal of Phi(L) in L, resp. of Phi^-1(L') in L'.
inline std::vector<HPart> transversal(Side side, std::uint32_t p) {
  require_prime(p);
  const std::int64_t e = side == Side::L ? 1 : -1;
  std::vector<HPart> out;
  out.reserve(static_cast<std::size_t>(p) * p * p * p);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d)
          out.push_back({LaurentPoly(p, {{0, a}}), LaurentPoly(p, {{0, b}}), LaurentPoly(p, {{0, c}, {e, d}})});
  return out;
}

inline std::string to_string(const HPart& h) {
  return "H(" + to_string(h.x) + ";" + to_string(h.y) + ";" + to_string(h.z) + ")";
}

inline std::string to_string(const HeisenbergElement& g) {
  return to_string(g.h) + "@t^" + std::to_string(g.k);
}

inline HeisenbergElement parse_heisenberg(std::string_view text) {
  detail::Cursor in(text);
  in.expect("H(");
  LaurentPoly x = detail::parse_laurent(in);
  in.expect(';');
  LaurentPoly y = detail::parse_laurent(in);
  in.expect(';');
  LaurentPoly z = detail::parse_laurent(in);
  in.expect(")@t^");
  const std::int64_t k = in.integer();
  in.finish();
  if (x.modulus() != y.modulus() || y.modulus() != z.modulus())
    throw Error(ErrorKind::modulus_mismatch, std::string(text));
  return {{std::move(x), std::move(y), std::move(z)}, k};
}

namespace detail {

inline bool support_within(const LaurentPoly& f, std::int64_t lo, std::int64_t hi) {
  return f.is_zero() || (f.min_exponent() >= lo && f.max_exponent() <= hi);
}

template <class Fn>
void for_each_hpart(std::uint32_t p, std::int64_t lo, std::int64_t hi, Fn&& fn) {
  const auto polys = all_laurent(p, lo, hi);
  for (const auto& x : polys)
    for (const auto& y : polys)
      for (const auto& z : polys) fn(HeisenbergElement{{x, y, z}, 0});
}

inline std::vector<HeisenbergElement> all_hparts(std::uint32_t p, std::int64_t lo, std::int64_t hi) {
  std::vector<HeisenbergElement> out;
  for_each_hpart(p, lo, hi, [&](const HeisenbergElement& g) { out.push_back(g); });
  return out;
}

}  // namespace detail

inline CwlPresentation<HeisenbergElement> make_presentation(std::uint32_t p) {
  require_prime(p);
  using G = HeisenbergElement;
  CwlPresentation<G> pres;
  pres.id = "heisenberg(p=" + std::to_string(p) + ")";
  pres.identity = G::identity(p);
  pres.multiply = [](const G& a, const G& b) { return h_mul(a, b); };
  pres.invert = [](const G& a) { return h_inv(a); };
  pres.t_power = [p](std::int64_t k) { return G::t(p, k); };
  pres.conj = [](const G& g, std::int64_t k) { return G{phi(g.h, k), g.k}; };
  pres.height = [](const G& g) { return g.k; };
  pres.in_H = [](const G& g) { return g.k == 0; };
  pres.in_L = [](const G& g) { return g.k == 0 && in_L(g.h); };
  pres.in_Lp = [](const G& g) { return g.k == 0 && in_Lp(g.h); };
  pres.canon_L = [](const G& g) { return G{canon_coset(g.h, Side::L), 0}; };
  pres.canon_Lp = [](const G& g) { return G{canon_coset(g.h, Side::Lp), 0}; };
  for (auto& h : transversal(Side::L, p)) pres.transversal_L.push_back({std::move(h), 0});
  for (auto& h : transversal(Side::Lp, p)) pres.transversal_Lp.push_back({std::move(h), 0});
  pres.within_truncation = [](const G& g, int N) {
    return g.k == 0 && detail::support_within(g.h.x, -N, N) && detail::support_within(g.h.y, -N, N) &&
           detail::support_within(g.h.z, -N, N);
  };
  pres.enumerate_L = [p](int N) { return detail::all_hparts(p, 0, N); };
  pres.enumerate_Lp = [p](int N) { return detail::all_hparts(p, -N, 0); };
  pres.lp_coset_reps = [p](int N) { return detail::all_hparts(p, 1, N); };
  pres.count_H = [p](int N) {
    std::uint64_t count = 1;
    for (int i = 0; i < 3 * (2 * N + 1); ++i) {
      if (count > (UINT64_MAX / p)) return UINT64_MAX;
      count *= p;
    }
    return count;
  };
  pres.for_each_H = [p](int N, const std::function<void(const G&)>& fn) {
    detail::for_each_hpart(p, -N, N, fn);
  };
  pres.random_H = [p](int N, std::mt19937_64& rng) {
    return G{{random_laurent(p, -N, N, rng), random_laurent(p, -N, N, rng), random_laurent(p, -N, N, rng)}, 0};
  };
  pres.factor = [](const G& g) {
    auto [l, lp] = factor(g.h);
    return std::pair{G{std::move(l), 0}, G{std::move(lp), 0}};
  };
  return pres;
}

}  // namespace crosswire
