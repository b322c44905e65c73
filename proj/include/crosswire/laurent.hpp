#pragma once

// Laurent polynomials over the prime field F_p, stored sparsely.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "crosswire/error.hpp"
#include "crosswire/text.hpp"

namespace crosswire {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class LaurentPoly {
 public:
  using Coeffs = std::map<std::int64_t, std::uint32_t>;

  LaurentPoly() = default;

  explicit LaurentPoly(std::uint32_t p, const Coeffs& coeffs = {}) : p_(p) {
    if (p_ < 2 || p_ > (1u << 16)) throw Error(ErrorKind::invalid_modulus, std::to_string(p));
    for (const auto& [e, c] : coeffs)
      if (c % p_ != 0) coeffs_.emplace_hint(coeffs_.end(), e, c % p_);
  }

  static LaurentPoly monomial(std::uint32_t p, std::int64_t exponent, std::uint32_t coeff = 1) {
    return LaurentPoly(p, {{exponent, coeff}});
  }

  std::uint32_t modulus() const { return p_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exponent() const { return coeffs_.begin()->first; }
  std::int64_t max_exponent() const { return coeffs_.rbegin()->first; }

  std::uint32_t coeff(std::int64_t e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? 0 : it->second;
  }

  /// Terms with exponent in [lo, hi].
  LaurentPoly part(std::int64_t lo, std::int64_t hi) const {
    LaurentPoly out(p_);
    if (lo <= hi) out.coeffs_.insert(coeffs_.lower_bound(lo), coeffs_.upper_bound(hi));
    return out;
  }
  LaurentPoly at_least(std::int64_t lo) const { return part(lo, INT64_MAX); }
  LaurentPoly below(std::int64_t hi) const { return part(INT64_MIN, hi - 1); }

  /// Multiplication by t^k.
  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly out(p_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e + k, c);
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly out(p_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e, p_ - c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.coeffs_) {
      auto [it, inserted] = coeffs_.emplace(e, c);
      if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0) coeffs_.erase(it);
      }
    }
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly out(a.p_);
    if (a.is_zero() || b.is_zero()) return out;
    std::map<std::int64_t, std::uint64_t> acc;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) acc[ea + eb] += static_cast<std::uint64_t>(ca) * cb % a.p_;
    for (const auto& [e, c] : acc)
      if (c % a.p_ != 0) out.coeffs_.emplace_hint(out.coeffs_.end(), e, static_cast<std::uint32_t>(c % a.p_));
    return out;
  }

  auto operator<=>(const LaurentPoly&) const = default;
  bool operator==(const LaurentPoly&) const = default;

 private:
  void check(const LaurentPoly& o) const {
    if (o.p_ != p_)
      throw Error(ErrorKind::modulus_mismatch, std::to_string(p_) + " vs " + std::to_string(o.p_));
  }

  std::uint32_t p_ = 2;
  Coeffs coeffs_;
};

inline std::string to_string(const LaurentPoly& f) {
  std::string out = "F" + std::to_string(f.modulus()) + "[";
  bool first = true;
  for (const auto& [e, c] : f.coeffs()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e) + ":" + std::to_string(c);
  }
  return out + "]";
}

namespace detail {

inline LaurentPoly parse_laurent(Cursor& in) {
  in.expect('F');
  const std::int64_t p = in.integer();
  if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0))) || p > (1 << 16))
    in.fail("modulus is not a supported prime");
  in.expect('[');
  LaurentPoly::Coeffs coeffs;
  if (!in.accept(']')) {
    do {
      const std::int64_t e = in.integer();
      in.expect(':');
      const std::int64_t c = in.integer();
      if (!coeffs.empty() && e <= coeffs.rbegin()->first) in.fail("exponents not ascending");
      if (c <= 0 || c >= p) in.fail("coefficient out of range or zero");
      coeffs.emplace_hint(coeffs.end(), e, static_cast<std::uint32_t>(c));
    } while (in.accept(','));
    in.expect(']');
  }
  return LaurentPoly(static_cast<std::uint32_t>(p), coeffs);
}

}  // namespace detail

inline LaurentPoly parse_laurent(std::string_view text) {
  detail::Cursor in(text);
  LaurentPoly f = detail::parse_laurent(in);
  in.finish();
  return f;
}

/// Uniformly random polynomial with support in [lo, hi].
inline LaurentPoly random_laurent(std::uint32_t p, std::int64_t lo, std::int64_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  LaurentPoly::Coeffs coeffs;
  for (std::int64_t e = lo; e <= hi; ++e) coeffs.emplace_hint(coeffs.end(), e, coeff(rng));
  return LaurentPoly(p, coeffs);
}

/// Calls fn on each of the p^(hi-lo+1) polynomials supported in [lo, hi].
template <class Fn>
void for_each_laurent(std::uint32_t p, std::int64_t lo, std::int64_t hi, Fn&& fn) {
  if (hi < lo) {
    fn(LaurentPoly(p));
    return;
  }
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(hi - lo + 1), 0);
  while (true) {
    LaurentPoly::Coeffs coeffs;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] != 0) coeffs.emplace_hint(coeffs.end(), lo + static_cast<std::int64_t>(i), digits[i]);
    fn(LaurentPoly(p, coeffs));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

inline std::vector<LaurentPoly> all_laurent(std::uint32_t p, std::int64_t lo, std::int64_t hi) {
  std::vector<LaurentPoly> out;
  for_each_laurent(p, lo, hi, [&](const LaurentPoly& f) { out.push_back(f); });
  return out;
}

}  // namespace crosswire

template <>
struct std::hash<crosswire::LaurentPoly> {
  std::size_t operator()(const crosswire::LaurentPoly& f) const noexcept {
    return crosswire::detail::hash_sparse(f.coeffs(), f.modulus());
  }
};
