#pragma once

// Generic machinery for a cross-wired lamplighter datum: certification of the
// four hypotheses at a truncation, Bass-Serre tree balls on H/L_n and H/L'_n,
// the diagonal action on their horocyclic product, double-coset counting and
// the conjugation that makes the action transitive.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "crosswire/graph.hpp"
#include "crosswire/presentation.hpp"

namespace crosswire {

// --- cosets and the two trees -------------------------------------------------

/// Canonical representative of h L_level (side L) or h L'_level (side Lp).
template <class G>
G canon_at(const CwlPresentation<G>& P, Side side, const G& h, std::int64_t level) {
  if (side == Side::L) {
    if (level == 0) return P.canon_L(h);
    return P.conj(P.canon_L(P.conj(h, -level)), level);
  }
  if (level == 0) return P.canon_Lp(h);
  return P.conj(P.canon_Lp(P.conj(h, level)), -level);
}

template <class G>
CosetVertex<G> coset_base(const CwlPresentation<G>& P, Side side) {
  return {side, 0, P.identity};
}

template <class G>
CosetPair<G> pair_base(const CwlPresentation<G>& P) {
  return {coset_base(P, Side::L), coset_base(P, Side::Lp)};
}

template <class G>
const std::vector<G>& transversal_of(const CwlPresentation<G>& P, Side side) {
  return side == Side::L ? P.transversal_L : P.transversal_Lp;
}

template <class G>
CosetVertex<G> coset_parent(const CwlPresentation<G>& P, const CosetVertex<G>& v) {
  return {v.side, v.level - 1, canon_at(P, v.side, v.rep, v.level - 1)};
}

/// The cosets at level+1 contained in v, one per transversal element.
template <class G>
std::vector<CosetVertex<G>> coset_children(const CwlPresentation<G>& P, const CosetVertex<G>& v) {
  const std::int64_t shift = v.side == Side::L ? v.level : -v.level;
  std::vector<CosetVertex<G>> out;
  for (const G& tau : transversal_of(P, v.side))
    out.push_back({v.side, v.level + 1, canon_at(P, v.side, P.multiply(v.rep, P.conj(tau, shift)), v.level + 1)});
  return out;
}

template <class G>
std::vector<CosetVertex<G>> coset_neighbors(const CwlPresentation<G>& P, const CosetVertex<G>& v) {
  auto out = coset_children(P, v);
  out.push_back(coset_parent(P, v));
  return out;
}

template <class G>
bool coset_adjacent(const CwlPresentation<G>& P, const CosetVertex<G>& u, const CosetVertex<G>& v) {
  if (u.side != v.side) return false;
  if (u.level == v.level + 1) return coset_parent(P, u) == v;
  if (v.level == u.level + 1) return coset_parent(P, v) == u;
  return false;
}

/// Up-neighbors (x to a child, y to its parent) then down-neighbors.
template <class G>
std::vector<CosetPair<G>> pair_neighbors(const CwlPresentation<G>& P, const CosetPair<G>& w) {
  std::vector<CosetPair<G>> out;
  const auto py = coset_parent(P, w.y);
  for (auto& cx : coset_children(P, w.x)) out.push_back({std::move(cx), py});
  const auto px = coset_parent(P, w.x);
  for (auto& cy : coset_children(P, w.y)) out.push_back({px, std::move(cy)});
  return out;
}

template <class G>
bool pair_adjacent(const CwlPresentation<G>& P, const CosetPair<G>& u, const CosetPair<G>& v) {
  return coset_adjacent(P, u.x, v.x) && coset_adjacent(P, u.y, v.y);
}

/// g = h t^k acts by h . (a L_n) = (h a) L_n and t . (a L_n) = (t a t^-1) L_n+1;
/// on the second tree t lowers the level.
template <class G>
CosetVertex<G> act(const CwlPresentation<G>& P, const G& g, const CosetVertex<G>& v) {
  const std::int64_t k = P.height(g);
  const G h = P.multiply(g, P.t_power(-k));
  const std::int64_t level = v.side == Side::L ? v.level + k : v.level - k;
  return {v.side, level, canon_at(P, v.side, P.multiply(h, P.conj(v.rep, k)), level)};
}

template <class G>
CosetPair<G> act(const CwlPresentation<G>& P, const G& g, const CosetPair<G>& w) {
  return {act(P, g, w.x), act(P, g, w.y)};
}

// --- verification -------------------------------------------------------------

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct VerificationReport {
  std::string presentation;
  std::optional<std::int64_t> index_L;
  std::optional<std::int64_t> index_Lp;
  std::optional<std::int64_t> intersection_order;
  std::optional<std::int64_t> double_cosets;
  std::optional<std::int64_t> exhaustion_depth;
  int truncation = 0;

  struct Passed {
    Verdict finite_index = Verdict::inconclusive;
    Verdict exhaustion = Verdict::inconclusive;
    Verdict compact_intersection = Verdict::inconclusive;
    Verdict finite_double_cosets = Verdict::inconclusive;
  } passed;

  std::vector<std::string> warnings;

  std::vector<Verdict> verdicts() const {
    return {passed.finite_index, passed.exhaustion, passed.compact_intersection, passed.finite_double_cosets};
  }
  bool all_passed() const {
    auto v = verdicts();
    return std::all_of(v.begin(), v.end(), [](Verdict x) { return x == Verdict::pass; });
  }
  bool any_failed() const {
    auto v = verdicts();
    return std::any_of(v.begin(), v.end(), [](Verdict x) { return x == Verdict::fail; });
  }
  /// 0 when everything passes, 1 on a failure, 3 when only inconclusive.
  int exit_code() const { return all_passed() ? 0 : any_failed() ? 1 : 3; }
};

struct VerifyOptions {
  /// Sweeps over the truncated H are exhaustive up to this many elements and
  /// sampled above it.
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 21;
  std::size_t samples = std::size_t{1} << 16;
  std::uint64_t seed = 0x5eedULL;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), classes_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    --classes_;
  }
  std::size_t classes() const { return classes_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t classes_;
};

template <class G>
Verdict certify_index(const CwlPresentation<G>& P, Side side, int N, std::vector<std::string>& warnings) {
  const char* name = side == Side::L ? "L" : "Lp";
  const auto& tau = transversal_of(P, side);
  const auto& member = side == Side::L ? P.in_L : P.in_Lp;
  for (const G& t : tau) {
    if (!member(t)) {
      warnings.push_back(std::string("witness: transversal element ") + to_string(t) + " not in " + name);
      return Verdict::fail;
    }
    if (!P.within_truncation(t, N)) {
      warnings.push_back(std::string("inconclusive: transversal of ") + name + " leaves truncation " +
                         std::to_string(N) + " at " + to_string(t));
      return Verdict::inconclusive;
    }
  }
  std::unordered_map<G, std::size_t> reps;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    auto [it, inserted] = reps.emplace(canon_at(P, side, tau[i], 1), i);
    if (!inserted) {
      warnings.push_back(std::string("witness: transversal of ") + name + " repeats a coset: " +
                         to_string(tau[it->second]) + " and " + to_string(tau[i]));
      return Verdict::fail;
    }
  }
  // Every truncated element of L reduces to a representative, and t L t^-1
  // (resp. t^-1 L' t) stays inside.
  const auto elements = side == Side::L ? P.enumerate_L(N) : P.enumerate_Lp(N);
  const std::int64_t inward = side == Side::L ? 1 : -1;
  for (const G& l : elements) {
    if (!member(l)) {
      warnings.push_back(std::string("witness: enumerated element ") + to_string(l) + " not in " + name);
      return Verdict::fail;
    }
    if (!member(P.conj(l, inward))) {
      warnings.push_back(std::string("witness: conjugate of ") + to_string(l) + " leaves " + name);
      return Verdict::fail;
    }
    if (!reps.count(canon_at(P, side, l, 1))) {
      warnings.push_back(std::string("witness: ") + to_string(l) + " reduces to no transversal element of " + name);
      return Verdict::fail;
    }
  }
  return Verdict::pass;
}

template <class G>
std::size_t intersection_size(const CwlPresentation<G>& P, int N) {
  std::size_t count = 0;
  for (const G& l : P.enumerate_L(N))
    if (P.in_Lp(l)) ++count;
  return count;
}

template <class G, class Fn>
bool sweep_H(const CwlPresentation<G>& P, int N, const VerifyOptions& options, std::vector<std::string>& warnings,
             Fn&& fn) {
  const std::uint64_t total = P.count_H(N);
  if (total <= options.exhaustive_cap) {
    bool ok = true;
    P.for_each_H(N, [&](const G& h) {
      if (ok) ok = fn(h);
    });
    return ok;
  }
  warnings.push_back("sampled " + std::to_string(options.samples) + " of " + std::to_string(total) +
                     " truncated elements of H");
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i)
    if (!fn(P.random_H(N, rng))) return false;
  return true;
}

}  // namespace detail

struct OrbitCount {
  std::size_t orbits = 0;
  /// Count at truncation N - 1; equal to `orbits` when stable.
  std::size_t previous = 0;
  /// Generator moves that left the truncation and were dropped.
  std::size_t widened = 0;
  std::size_t representatives = 0;

  bool stable() const { return orbits == previous; }
};

namespace detail {

template <class G>
std::pair<std::size_t, std::size_t> orbit_bfs(const CwlPresentation<G>& P, int N) {
  const auto reps = P.lp_coset_reps(N);
  std::unordered_map<G, std::size_t> index;
  index.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) index.emplace(reps[i], i);
  std::vector<G> generators;
  for (std::int64_t j = 0; j <= N; ++j)
    for (const G& tau : P.transversal_L) {
      G g = P.conj(tau, j);
      if (g != P.identity) generators.push_back(std::move(g));
    }
  UnionFind classes(reps.size());
  std::size_t widened = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const G& g : generators) {
      auto it = index.find(P.canon_Lp(P.multiply(g, reps[i])));
      if (it == index.end())
        ++widened;
      else
        classes.unite(i, it->second);
    }
  return {classes.classes(), widened};
}

}  // namespace detail

/// Number of orbits of H on H/L x H/L' within the truncation, i.e. of L on
/// the truncated cosets H/L', by union-find over moves l . (h L').
template <class G>
OrbitCount orbit_count(const CwlPresentation<G>& P, int N) {
  OrbitCount out;
  auto [orbits, widened] = detail::orbit_bfs(P, N);
  out.orbits = orbits;
  out.widened = widened;
  out.representatives = P.lp_coset_reps(N).size();
  out.previous = N > 0 ? detail::orbit_bfs(P, N - 1).first : orbits;
  return out;
}

/// Double-coset label: alternate the normal forms of L h and h L' until a
/// fixed point; nullopt when 16 rounds do not settle.
template <class G>
std::optional<G> double_coset_label(const CwlPresentation<G>& P, const G& h) {
  G current = h;
  for (int round = 0; round < 16; ++round) {
    G next = P.canon_Lp(P.invert(P.canon_L(P.invert(current))));
    if (next == current) return current;
    current = std::move(next);
  }
  return std::nullopt;
}

struct LabelCount {
  std::size_t labels = 0;
  bool converged = true;
  bool via_factor = false;
};

/// Counts double cosets among the truncated coset representatives using the
/// factor oracle when it is present and every factorization checks out,
/// otherwise by distinct labels.
template <class G>
LabelCount double_coset_labels(const CwlPresentation<G>& P, int N) {
  const auto reps = P.lp_coset_reps(N);
  LabelCount out;
  if (P.factor) {
    bool ok = true;
    for (const G& h : reps) {
      auto [l, lp] = (*P.factor)(h);
      if (!P.in_L(l) || !P.in_Lp(lp) || P.multiply(l, lp) != h) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.labels = 1;
      out.via_factor = true;
      return out;
    }
  }
  std::unordered_set<G> labels;
  for (const G& h : reps) {
    auto label = double_coset_label(P, h);
    if (!label) {
      out.converged = false;
      return out;
    }
    labels.insert(std::move(*label));
  }
  out.labels = labels.size();
  return out;
}

template <class G>
VerificationReport verify_conditions(const CwlPresentation<G>& P, int N, const VerifyOptions& options = {}) {
  if (N < 1) throw Error(ErrorKind::domain, "truncation must be >= 1");
  VerificationReport report;
  report.presentation = P.id;
  report.truncation = N;
  auto& warnings = report.warnings;

  // Indices of t L t^-1 in L and t^-1 L' t in L'.
  const Verdict vl = detail::certify_index(P, Side::L, N, warnings);
  const Verdict vlp = detail::certify_index(P, Side::Lp, N, warnings);
  if (vl == Verdict::pass) report.index_L = static_cast<std::int64_t>(P.transversal_L.size());
  if (vlp == Verdict::pass) report.index_Lp = static_cast<std::int64_t>(P.transversal_Lp.size());
  report.passed.finite_index = (vl == Verdict::fail || vlp == Verdict::fail) ? Verdict::fail
                               : (vl == Verdict::pass && vlp == Verdict::pass) ? Verdict::pass
                                                                               : Verdict::inconclusive;

  // L n L' must not grow with the truncation.
  {
    std::vector<std::size_t> sizes;
    for (int j = 0; j <= N; ++j) sizes.push_back(detail::intersection_size(P, j));
    const bool stable = sizes[N] == sizes[N - 1];
    bool always_growing = true;
    for (int j = 1; j <= N; ++j) always_growing = always_growing && sizes[j] > sizes[j - 1];
    if (stable) {
      report.intersection_order = static_cast<std::int64_t>(sizes[N]);
      report.passed.compact_intersection = Verdict::pass;
    } else if (always_growing) {
      std::string growth;
      for (std::size_t s : sizes) growth += (growth.empty() ? "" : ",") + std::to_string(s);
      std::string example;
      for (const G& l : P.enumerate_L(N))
        if (P.in_Lp(l) && !P.within_truncation(l, N - 1)) {
          example = to_string(l);
          break;
        }
      warnings.push_back("witness: L n Lp grows without bound: sizes " + growth + "; new element " + example);
      report.passed.compact_intersection = Verdict::fail;
    } else {
      warnings.push_back("inconclusive: L n Lp changed between truncations " + std::to_string(N - 1) + " and " +
                         std::to_string(N));
    }
  }

  // Increasing unions exhaust H.  Membership of t^k h t^-k in L is monotone
  // in k, so the deepest level needed so far only ever grows.
  {
    const std::int64_t bound = 2 * static_cast<std::int64_t>(N);
    std::int64_t depth_L = 0, depth_Lp = 0;
    const bool ok = detail::sweep_H(P, N, options, warnings, [&](const G& h) {
      while (depth_L <= bound && !P.in_L(P.conj(h, depth_L))) ++depth_L;
      while (depth_Lp <= bound && !P.in_Lp(P.conj(h, -depth_Lp))) ++depth_Lp;
      if (depth_L > bound || depth_Lp > bound) {
        warnings.push_back("witness: " + to_string(h) + " is in no " + (depth_L > bound ? "t^-k L t^k" : "t^k Lp t^-k") +
                           " with k <= " + std::to_string(bound));
        return false;
      }
      return true;
    });
    if (ok) {
      report.exhaustion_depth = std::max(depth_L, depth_Lp);
      report.passed.exhaustion = Verdict::pass;
    } else {
      report.passed.exhaustion = Verdict::fail;
    }
  }

  // A supplied factor oracle must hold on every truncated coset h L'.
  if (P.factor) {
    for (const G& h : P.lp_coset_reps(N)) {
      auto [l, lp] = (*P.factor)(h);
      if (!P.in_L(l) || !P.in_Lp(lp) || P.multiply(l, lp) != h) {
        warnings.push_back("witness: factor oracle fails on " + to_string(h));
        report.passed.finite_double_cosets = Verdict::fail;
        break;
      }
    }
  }

  // |L \ H / L'| by orbit enumeration, cross-checked against labels.  The
  // orbit search moves by the L-transversal, so it needs that certified.
  if (report.passed.finite_double_cosets != Verdict::fail && vl != Verdict::pass) {
    warnings.push_back("inconclusive: double cosets not counted without a certified transversal of L");
  } else if (report.passed.finite_double_cosets != Verdict::fail) {
    const OrbitCount orbits = orbit_count(P, N);
    const LabelCount labels = double_coset_labels(P, N);
    if (orbits.widened > 0)
      warnings.push_back("orbit search dropped " + std::to_string(orbits.widened) +
                         " moves leaving the truncation");
    if (!labels.converged) warnings.push_back("double coset labels did not settle; using orbit count");
    if (labels.converged && labels.labels != orbits.orbits) {
      warnings.push_back("witness: " + std::to_string(labels.labels) + " double coset labels but " +
                         std::to_string(orbits.orbits) + " orbits");
      report.passed.finite_double_cosets = Verdict::fail;
    } else if (!orbits.stable()) {
      warnings.push_back("inconclusive: orbit count changed from " + std::to_string(orbits.previous) + " to " +
                         std::to_string(orbits.orbits) + " between truncations");
    } else {
      report.double_cosets = static_cast<std::int64_t>(orbits.orbits);
      report.passed.finite_double_cosets = Verdict::pass;
    }
  }
  return report;
}

// --- Bass-Serre trees and the DL action -----------------------------------------

template <class G>
struct BassSerreBall {
  Side side = Side::L;
  int radius = 0;
  Graph<CosetVertex<G>> graph;
};

namespace detail {

template <class G>
void require_certified(const CwlPresentation<G>& P, const VerificationReport& report) {
  if (report.presentation != P.id)
    throw Error(ErrorKind::uncertified, "report is for " + report.presentation + ", not " + P.id +
                                            "; run verify_conditions first");
  if (report.passed.finite_index != Verdict::pass)
    throw Error(ErrorKind::uncertified, "indices of " + P.id + " are not certified; see verify_conditions");
}

}  // namespace detail

template <class G>
BassSerreBall<G> bass_serre_ball(const CwlPresentation<G>& P, const VerificationReport& report, Side side,
                                 int radius) {
  detail::require_certified(P, report);
  return {side, radius,
          bfs_ball(coset_base(P, side), radius, [&](const CosetVertex<G>& v) { return coset_neighbors(P, v); })};
}

template <class G>
Graph<CosetPair<G>> dl_action_ball(const CwlPresentation<G>& P, const VerificationReport& report, int radius) {
  detail::require_certified(P, report);
  return bfs_ball(pair_base(P), radius, [&](const CosetPair<G>& w) { return pair_neighbors(P, w); });
}

template <class V>
bool is_tree(const Graph<V>& g) {
  if (g.size() == 0) return false;
  if (g.edge_count() != g.size() - 1) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.distance(i) < 0) return false;
  return true;
}

/// Truncated elements of H fixing w: conjugates a (t^n l t^-n) a^-1 of the
/// enumerated l in L (with w.x = a L_n) that also fix w.y.
template <class G>
std::vector<G> stabilizer(const CwlPresentation<G>& P, const CosetPair<G>& w, int N) {
  const G& a = w.x.rep;
  const G a_inv = P.invert(a);
  std::unordered_set<G> found;
  for (const G& l : P.enumerate_L(N)) {
    G s = P.multiply(P.multiply(a, P.conj(l, w.x.level)), a_inv);
    if (act(P, s, w) == w) found.insert(std::move(s));
  }
  std::vector<G> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const G& u, const G& v) { return to_string(u) < to_string(v); });
  return out;
}

/// The datum with L replaced by t^k L t^-k.
template <class G>
CwlPresentation<G> conjugate_L(const CwlPresentation<G>& P, std::int64_t k) {
  if (k == 0) return P;
  CwlPresentation<G> Q = P;
  Q.id = P.id + "[L->t^" + std::to_string(k) + " L t^" + std::to_string(-k) + "]";
  auto conj = P.conj;
  Q.in_L = [conj, in_L = P.in_L, k](const G& g) { return in_L(conj(g, -k)); };
  Q.canon_L = [conj, canon = P.canon_L, k](const G& h) { return conj(canon(conj(h, -k)), k); };
  Q.transversal_L.clear();
  for (const G& tau : P.transversal_L) Q.transversal_L.push_back(conj(tau, k));
  Q.enumerate_L = [conj, enumerate = P.enumerate_L, within = P.within_truncation, k](int N) {
    std::vector<G> out;
    for (const G& l : enumerate(N + static_cast<int>(k < 0 ? -k : k))) {
      G c = conj(l, k);
      if (within(c, N)) out.push_back(std::move(c));
    }
    return out;
  };
  // A factorization through L still factors through the larger t^k L t^-k.
  if (k > 0) Q.factor.reset();
  return Q;
}

template <class G>
struct Promotion {
  CwlPresentation<G> presentation;
  std::int64_t k = 0;
  std::size_t orbits_before = 0;
  std::size_t orbits_after = 0;
  bool found = false;
};

/// Replaces L by t^k L t^-k for the k <= 0 closest to 0 that leaves a single
/// double coset at the truncation.
template <class G>
Promotion<G> promote_transitive(const CwlPresentation<G>& P, int N) {
  Promotion<G> out{P};
  out.orbits_before = orbit_count(P, N).orbits;
  for (std::int64_t k = 0; k >= -static_cast<std::int64_t>(N); --k) {
    CwlPresentation<G> Q = conjugate_L(P, k);
    const std::size_t d = orbit_count(Q, N).orbits;
    if (d == 1) {
      out.presentation = std::move(Q);
      out.k = k;
      out.orbits_after = 1;
      out.found = true;
      return out;
    }
  }
  out.orbits_after = out.orbits_before;
  return out;
}

}  // namespace crosswire
