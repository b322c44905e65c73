#pragma once

// Regular trees with a distinguished end -inf in horocyclic coordinates.
//
// A vertex of the (n+1)-regular tree T_n is a pair (level, digits): the level
// is the Busemann value b, and the digit at position j < level records which
// child was taken when descending from level j to level j+1 along the ray that
// comes up from -inf.  All but finitely many digits are zero; zero digits are
// never stored, so structural equality is vertex equality.  The base vertex o
// is (level 0, no digits).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "crosswire/error.hpp"
#include "crosswire/text.hpp"

namespace crosswire {

using Digits = std::map<std::int64_t, std::uint32_t>;

class TreeVertex {
 public:
  TreeVertex() = default;

  TreeVertex(int arity, std::int64_t level, Digits digits = {})
      : arity_(arity), level_(level), digits_(std::move(digits)) {
    if (arity_ < 2) throw Error(ErrorKind::invalid_digit, "tree arity must be >= 2");
    for (const auto& [pos, c] : digits_) {
      if (c == 0 || c >= static_cast<std::uint32_t>(arity_))
        throw Error(ErrorKind::invalid_digit,
                    "digit " + std::to_string(c) + " at position " + std::to_string(pos));
      if (pos >= level_)
        throw Error(ErrorKind::invalid_digit,
                    "digit position " + std::to_string(pos) + " not below level " +
                        std::to_string(level_));
    }
  }

  static TreeVertex root(int arity) { return TreeVertex(arity, 0); }

  int arity() const { return arity_; }
  std::int64_t level() const { return level_; }
  const Digits& digits() const { return digits_; }

  std::uint32_t digit(std::int64_t position) const {
    auto it = digits_.find(position);
    return it == digits_.end() ? 0 : it->second;
  }

  auto operator<=>(const TreeVertex&) const = default;
  bool operator==(const TreeVertex&) const = default;

 private:
  // Unchecked constructor for operations that preserve the invariants.
  struct Trusted {};
  TreeVertex(Trusted, int arity, std::int64_t level, Digits digits)
      : arity_(arity), level_(level), digits_(std::move(digits)) {}

  friend TreeVertex parent(const TreeVertex&);
  friend TreeVertex child(const TreeVertex&, std::uint32_t);
  friend TreeVertex ancestor(const TreeVertex&, std::int64_t);
  friend TreeVertex shift(const TreeVertex&, std::int64_t);

  int arity_ = 2;
  std::int64_t level_ = 0;
  Digits digits_;
};

inline TreeVertex parent(const TreeVertex& v) {
  Digits digits = v.digits();
  digits.erase(v.level() - 1);
  return TreeVertex(TreeVertex::Trusted{}, v.arity(), v.level() - 1, std::move(digits));
}

inline TreeVertex child(const TreeVertex& v, std::uint32_t c) {
  if (c >= static_cast<std::uint32_t>(v.arity()))
    throw Error(ErrorKind::invalid_digit,
                "child digit " + std::to_string(c) + " for arity " + std::to_string(v.arity()));
  Digits digits = v.digits();
  if (c != 0) digits.emplace(v.level(), c);
  return TreeVertex(TreeVertex::Trusted{}, v.arity(), v.level() + 1, std::move(digits));
}

/// The unique vertex at `level` on the ray from v toward -inf.
inline TreeVertex ancestor(const TreeVertex& v, std::int64_t level) {
  if (level > v.level())
    throw Error(ErrorKind::domain, "ancestor level " + std::to_string(level) + " above vertex");
  Digits digits(v.digits().begin(), v.digits().lower_bound(level));
  return TreeVertex(TreeVertex::Trusted{}, v.arity(), level, std::move(digits));
}

/// Relabels levels k -> k + amount with digit positions re-indexed.  This is
/// the translation along the all-zero line through o.
inline TreeVertex shift(const TreeVertex& v, std::int64_t amount) {
  Digits digits;
  for (const auto& [pos, c] : v.digits()) digits.emplace_hint(digits.end(), pos + amount, c);
  return TreeVertex(TreeVertex::Trusted{}, v.arity(), v.level() + amount, std::move(digits));
}

inline std::vector<TreeVertex> children(const TreeVertex& v) {
  std::vector<TreeVertex> out;
  out.reserve(static_cast<std::size_t>(v.arity()));
  for (int c = 0; c < v.arity(); ++c) out.push_back(child(v, static_cast<std::uint32_t>(c)));
  return out;
}

inline std::vector<TreeVertex> tree_neighbors(const TreeVertex& v) {
  auto out = children(v);
  out.push_back(parent(v));
  return out;
}

inline void require_same_tree(const TreeVertex& x, const TreeVertex& y) {
  if (x.arity() != y.arity())
    throw Error(ErrorKind::incompatible_trees,
                "arity " + std::to_string(x.arity()) + " vs " + std::to_string(y.arity()));
}

/// Deepest common vertex of the rays from x and y toward -inf.
inline TreeVertex confluent(const TreeVertex& x, const TreeVertex& y) {
  require_same_tree(x, y);
  const std::int64_t top = std::min(x.level(), y.level());
  auto xi = x.digits().begin();
  auto yi = y.digits().begin();
  const auto xe = x.digits().lower_bound(top);
  const auto ye = y.digits().lower_bound(top);
  std::int64_t level = top;
  while (xi != xe || yi != ye) {
    if (xi != xe && yi != ye && xi->first == yi->first) {
      if (xi->second != yi->second) {
        level = xi->first;
        break;
      }
      ++xi;
      ++yi;
    } else if (yi == ye || (xi != xe && xi->first < yi->first)) {
      level = xi->first;
      break;
    } else {
      level = yi->first;
      break;
    }
  }
  return ancestor(x, level);
}

inline std::int64_t distance(const TreeVertex& x, const TreeVertex& y) {
  const std::int64_t l = confluent(x, y).level();
  return (x.level() - l) + (y.level() - l);
}

/// True when d lies on a ray going up from a (including d == a).
inline bool is_descendant(const TreeVertex& d, const TreeVertex& a) {
  return d.arity() == a.arity() && d.level() >= a.level() && ancestor(d, a.level()) == a;
}

inline bool tree_adjacent(const TreeVertex& x, const TreeVertex& y) {
  if (x.arity() != y.arity()) return false;
  if (x.level() == y.level() + 1) return parent(x) == y;
  if (y.level() == x.level() + 1) return parent(y) == x;
  return false;
}

inline std::string to_string(const TreeVertex& v) {
  std::string out = "T" + std::to_string(v.arity()) + ":L" + std::to_string(v.level()) + "[";
  bool first = true;
  for (const auto& [pos, c] : v.digits()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(pos) + "=" + std::to_string(c);
  }
  out += ']';
  return out;
}

namespace detail {

inline TreeVertex parse_tree_vertex(Cursor& in) {
  in.expect('T');
  const std::int64_t arity = in.integer();
  if (arity < 2 || arity > (1 << 30)) in.fail("arity out of range");
  in.expect(":L");
  const std::int64_t level = in.integer();
  in.expect('[');
  Digits digits;
  if (!in.accept(']')) {
    do {
      const std::int64_t pos = in.integer();
      in.expect('=');
      const std::int64_t c = in.integer();
      if (!digits.empty() && pos <= digits.rbegin()->first) in.fail("positions not ascending");
      if (c <= 0 || c >= arity) in.fail("digit out of range or zero");
      if (pos >= level) in.fail("digit position not below level");
      digits.emplace_hint(digits.end(), pos, static_cast<std::uint32_t>(c));
    } while (in.accept(','));
    in.expect(']');
  }
  return TreeVertex(static_cast<int>(arity), level, std::move(digits));
}

}  // namespace detail

inline TreeVertex parse_tree_vertex(std::string_view text) {
  detail::Cursor in(text);
  TreeVertex v = detail::parse_tree_vertex(in);
  in.finish();
  return v;
}

}  // namespace crosswire

template <>
struct std::hash<crosswire::TreeVertex> {
  std::size_t operator()(const crosswire::TreeVertex& v) const noexcept {
    std::size_t seed = std::hash<std::int64_t>{}(v.level());
    crosswire::detail::hash_combine(seed, static_cast<std::size_t>(v.arity()));
    return crosswire::detail::hash_sparse(v.digits(), seed);
  }
};
