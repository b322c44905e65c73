// Command-line front end.  Exit codes: 0 success, 1 verification or check
// failure, 2 usage error, 3 inconclusive verification.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "crosswire/crosswire.hpp"

using namespace crosswire;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2, kInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;
  std::string format = "edges";

  template <class V, class HeightFn>
  void write(const Graph<V>& g, const std::string& name, HeightFn&& height) const {
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw UsageError("--out: cannot open " + path);
    }
    std::ostream& out = path.empty() ? std::cout : file;
    if (format == "dot")
      write_dot(out, g, name, height);
    else
      write_edge_list(out, g);
  }
};

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "edges or dot")->check(CLI::IsMember({"edges", "dot"}))->capture_default_str();
  cmd->add_option("--out", o.path, "write to PATH instead of standard output");
}

int status_line(const BijectionReport& r) {
  if (r.ok) {
    std::cerr << "check: ok\n";
    return kOk;
  }
  std::cerr << "check: FAILED " << to_string(r.witness) << " " << r.detail << "\n";
  return kFailed;
}

struct ExampleArgs {
  std::string example;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> p;
  int truncation = 4;
};

void add_example(CLI::App* cmd, ExampleArgs& a, bool truncation_required) {
  cmd->add_option("--example", a.example, "lamplighter, lamplighter-offset or heisenberg")
      ->required()
      ->check(CLI::IsMember({"lamplighter", "lamplighter-offset", "heisenberg"}));
  auto* n = cmd->add_option("--n", a.n, "lamp modulus (lamplighter examples, default 2)")->check(CLI::Range(2, 1 << 16));
  auto* p = cmd->add_option("--p", a.p, "prime (heisenberg, default 2)")->check(CLI::Range(2, 1 << 16));
  n->excludes(p);
  auto* t = cmd->add_option("--truncation", a.truncation, "support bound N >= 1")->check(CLI::Range(1, 64));
  if (truncation_required)
    t->required();
  else
    t->capture_default_str();
}

// Runs `fn` with the presentation named by the flags.
template <class Fn>
int with_example(const ExampleArgs& a, Fn&& fn) {
  if (a.example == "heisenberg") {
    if (a.n) throw UsageError("--n: not an option of the heisenberg example (use --p)");
    const std::uint32_t p = a.p.value_or(2);
    if (!is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not prime");
    return fn(make_presentation(p));
  }
  if (a.p) throw UsageError("--p: not an option of the lamplighter examples (use --n)");
  const std::uint32_t n = a.n.value_or(2);
  const LamplighterSubgroups s = a.example == "lamplighter-offset" ? LamplighterSubgroups{1, -1} : LamplighterSubgroups{};
  return fn(lamplighter_presentation(n, s));
}

void print_report(const VerificationReport& r) {
  auto field = [](const char* name, const std::optional<std::int64_t>& v) {
    std::cout << name << "\t" << (v ? std::to_string(*v) : std::string("-")) << "\n";
  };
  std::cout << "presentation\t" << r.presentation << "\n";
  field("index_L", r.index_L);
  field("index_Lp", r.index_Lp);
  field("intersection_order", r.intersection_order);
  field("double_cosets", r.double_cosets);
  field("exhaustion_depth", r.exhaustion_depth);
  std::cout << "truncation\t" << r.truncation << "\n";
  std::cout << "finite_index\t" << to_string(r.passed.finite_index) << "\n";
  std::cout << "exhaustion\t" << to_string(r.passed.exhaustion) << "\n";
  std::cout << "compact_intersection\t" << to_string(r.passed.compact_intersection) << "\n";
  std::cout << "finite_double_cosets\t" << to_string(r.passed.finite_double_cosets) << "\n";
  for (const auto& w : r.warnings) std::cout << "warning\t" << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diestel-Leader graphs and cross-wired lamplighter data"};
  app.require_subcommand(1);

  // dl
  auto* dl = app.add_subcommand("dl", "Diestel-Leader graph balls");
  dl->require_subcommand(1);
  int m = 2, n = 2, radius = 0, d = 1, max_radius = 0;
  bool check = false;
  Output out;
  auto arities = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "arity of the first tree (>= 2)")->required()->check(CLI::Range(2, 1 << 10));
    cmd->add_option("--n", n, "arity of the second tree (>= 2)")->required()->check(CLI::Range(2, 1 << 10));
  };
  auto* dl_ball = dl->add_subcommand("ball", "ball around the base vertex");
  arities(dl_ball);
  dl_ball->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  add_output(dl_ball, out);

  auto* dl_collapse = dl->add_subcommand("collapse", "keep heights divisible by d");
  arities(dl_collapse);
  dl_collapse->add_option("--d", d)->required()->check(CLI::Range(1, 16));
  dl_collapse->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  dl_collapse->add_flag("--check", check, "compare with the DL(m^d,n^d) ball via collapse_map");
  add_output(dl_collapse, out);

  auto* dl_growth = dl->add_subcommand("growth", "sphere and ball sizes as TSV");
  arities(dl_growth);
  dl_growth->add_option("--max-radius", max_radius)->required()->check(CLI::NonNegativeNumber);

  // lamplighter
  auto* ll = app.add_subcommand("lamplighter", "lamplighter groups Z/n wr Z");
  ll->require_subcommand(1);
  std::uint32_t lamps = 2;
  auto* cayley = ll->add_subcommand("cayley", "Cayley graph ball");
  cayley->add_option("--n", lamps, "lamp modulus (>= 2)")->required()->check(CLI::Range(2, 1 << 10));
  cayley->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  cayley->add_flag("--check-dl", check, "compare with the DL(n,n) ball");
  add_output(cayley, out);

  // cwl
  auto* cwl = app.add_subcommand("cwl", "cross-wired lamplighter engine");
  cwl->require_subcommand(1);
  ExampleArgs ex;
  bool json = false;
  std::string side = "L";
  auto* verify = cwl->add_subcommand("verify", "check the four hypotheses at a truncation");
  add_example(verify, ex, true);
  verify->add_flag("--json", json, "print the report as JSON");

  auto* bass = cwl->add_subcommand("bass-serre", "Bass-Serre tree ball");
  add_example(bass, ex, false);
  bass->add_option("--side", side)->required()->check(CLI::IsMember({"L", "Lp"}));
  bass->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  add_output(bass, out);

  auto* orbits = cwl->add_subcommand("orbits", "count double cosets by orbit enumeration");
  add_example(orbits, ex, true);

  auto* promote = cwl->add_subcommand("promote", "conjugate L until the action is transitive");
  add_example(promote, ex, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const std::string name = "DL(" + std::to_string(m) + "," + std::to_string(n) + ")";
    auto dl_height = [](const DLVertex& w) { return height(w); };

    if (dl_ball->parsed()) {
      out.write(ball(m, n, radius).graph, name, dl_height);
      return kOk;
    }
    if (dl_collapse->parsed()) {
      const auto collapsed = collapse(ball(m, n, radius), d);
      out.write(collapsed.graph, name + "/" + std::to_string(d), dl_height);
      if (!check) return kOk;
      int M = 1, N = 1;
      for (int i = 0; i < d; ++i) M *= m, N *= n;
      return status_line(check_bijection([&](const DLVertex& w) { return std::optional(collapse_map(w, d)); },
                                         sub_ball(collapsed.graph, radius / d), ball(M, N, radius / d).graph));
    }
    if (dl_growth->parsed()) {
      const auto spheres = ball(m, n, max_radius).graph.sphere_sizes();
      std::cout << "radius\tsphere\tball\n";
      std::size_t total = 0;
      for (std::size_t r = 0; r < spheres.size(); ++r) {
        total += spheres[r];
        std::cout << r << "\t" << spheres[r] << "\t" << total << "\n";
      }
      return kOk;
    }
    if (cayley->parsed()) {
      const auto g = ll_cayley_ball(lamps, radius);
      out.write(g, "LL" + std::to_string(lamps), [](const LamplighterElement& e) { return e.shift(); });
      if (!check) return kOk;
      const int k = static_cast<int>(lamps);
      return status_line(check_bijection([](const LamplighterElement& e) { return std::optional(ll_to_dl(e)); }, g,
                                         ball(k, k, radius).graph));
    }
    if (verify->parsed()) {
      return with_example(ex, [&](const auto& P) {
        const auto report = verify_conditions(P, ex.truncation);
        if (json)
          std::cout << report_to_json(report).dump(2) << "\n";
        else
          print_report(report);
        return report.exit_code();
      });
    }
    if (bass->parsed()) {
      return with_example(ex, [&](const auto& P) {
        const auto report = verify_conditions(P, ex.truncation);
        if (report.passed.finite_index != Verdict::pass) {
          std::cerr << "error: indices not certified at truncation " << ex.truncation << "\n";
          for (const auto& w : report.warnings) std::cerr << "  " << w << "\n";
          return report.passed.finite_index == Verdict::fail ? kFailed : kInconclusive;
        }
        const auto b = bass_serre_ball(P, report, side == "L" ? Side::L : Side::Lp, radius);
        out.write(b.graph, P.id + ":" + side, [](const auto& v) { return v.level; });
        return kOk;
      });
    }
    if (orbits->parsed()) {
      return with_example(ex, [&](const auto& P) {
        const auto count = orbit_count(P, ex.truncation);
        const auto labels = double_coset_labels(P, ex.truncation);
        std::cout << "presentation\t" << P.id << "\n";
        std::cout << "orbits\t" << count.orbits << "\n";
        std::cout << "orbits_previous_truncation\t" << count.previous << "\n";
        std::cout << "coset_representatives\t" << count.representatives << "\n";
        std::cout << "widened_moves\t" << count.widened << "\n";
        if (labels.converged)
          std::cout << "labels\t" << labels.labels << (labels.via_factor ? "\tfactor" : "\tfixed-point") << "\n";
        else
          std::cout << "labels\t-\n";
        if (labels.converged && labels.labels != count.orbits) return kFailed;
        return count.stable() ? kOk : kInconclusive;
      });
    }
    if (promote->parsed()) {
      return with_example(ex, [&](const auto& P) {
        const auto result = promote_transitive(P, ex.truncation);
        std::cout << "presentation\t" << P.id << "\n";
        std::cout << "orbits_before\t" << result.orbits_before << "\n";
        if (!result.found) {
          std::cout << "found\tno\n";
          std::cerr << "inconclusive: no k in [-" << ex.truncation << ", 0] gives a single double coset\n";
          return kInconclusive;
        }
        std::cout << "found\tyes\n";
        std::cout << "k\t" << result.k << "\n";
        std::cout << "orbits_after\t" << result.orbits_after << "\n";
        std::cout << "promoted\t" << result.presentation.id << "\n";
        std::cout << "index_L\t" << result.presentation.transversal_L.size() << "\n";
        std::cout << "index_Lp\t" << result.presentation.transversal_Lp.size() << "\n";
        return kOk;
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::uncertified ? kFailed : kUsage;
  }
  return kUsage;
}
