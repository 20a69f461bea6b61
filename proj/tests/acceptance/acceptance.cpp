// Acceptance gate. One PASS/FAIL line per criterion; diagnostics follow on
// indented lines. Exit status is nonzero when any selected criterion fails.

#include <chebext/chebext.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

using namespace chebext;

namespace {

constexpr std::size_t kOracleBudget = 200000;
constexpr std::uint64_t kOracleSeed = 7;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("miss: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<Polynomial> values_of(const std::map<int, Polynomial>& m) {
  std::vector<Polynomial> out;
  for (const auto& entry : m) out.push_back(entry.second);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

const double kR2 = std::sqrt(2.0);
const double kR3 = std::sqrt(3.0);

// b grid spanning (0.5, 3] for the explicit-versus-general comparison
constexpr double kAgreementB[] = {0.6, 1.0, 1.4, 1.45, 1.6, 1.75, 1.9, 2.0, 3.0};
constexpr double kCertificateB[] = {0.5, 1.0, 1.5, 2.0, 3.0};

struct OracleCase {
  std::vector<int> indices;
  double b;
};

const std::vector<OracleCase> kOracleCases{{{1, 2}, 1.0},    {{1, 2}, 2.0}, {{1, 2, 3}, 1.0},
                                           {{1, 2, 3}, 1.6}, {{1, 2, 3}, 2.0}, {{2, 3}, 1.0},
                                           {{2, 3}, 2.0},    {{1, 3}, 1.5}};

std::vector<double> golden_b() { return {0.8, 1.0, kR2, 1.5, 1.6, kR3, 2.0, 3.0}; }

// Index sets with n <= 8 used for the certificate and feasibility sweeps.
std::vector<std::vector<int>> certificate_sets() {
  std::vector<std::vector<int>> sets;
  for (int n = 1; n <= 8; ++n) {
    sets.push_back(range(1, n));
    sets.push_back({n});
    if (n >= 2) sets.push_back({n - 1, n});
  }
  for (auto s : std::vector<std::vector<int>>{{1, 3}, {2, 4}, {1, 3, 5}, {2, 5, 8}, {1, 4, 6, 8}})
    sets.push_back(s);
  return sets;
}

// Every first-kind instance solved in criteria 1 to 5.
std::vector<ProblemSpec> first_kind_instances() {
  std::vector<ProblemSpec> out;
  for (double b : golden_b()) out.emplace_back(ProblemKind::first, range(1, 3), b);
  for (int n = 1; n <= 8; ++n)
    for (double b : kAgreementB) out.emplace_back(ProblemKind::first, range(1, n), b);
  for (const auto& c : kOracleCases) out.emplace_back(ProblemKind::first, c.indices, c.b);
  for (const auto& s : certificate_sets())
    for (double b : kCertificateB) out.emplace_back(ProblemKind::first, s, b);
  return out;
}

Outcome criterion1() {
  Outcome o;
  auto value = [](double b) { return solve_first_kind(ProblemSpec(ProblemKind::first, {1, 2, 3}, b)).objective; };
  auto small = [](double b) { return 16 * std::pow(b, -6); };
  auto middle = [](double b) { return 4 / (b * b * (b * b - 1)); };
  auto large = [](double b) { return (b * b - 1) / (b * b * (b * b - 2)); };
  struct Row {
    const char* regime;
    std::function<double(double)> f;
    std::vector<double> bs;
  };
  const std::vector<Row> rows{{"small", small, {0.8, 1.0, kR2}},
                              {"middle", middle, {1.5, 1.6, kR3}},
                              {"large", large, {kR3, 2.0, 3.0}}};
  double worst = 0.0;
  for (const auto& r : rows)
    for (double b : r.bs) {
      const double err = rel_err(value(b), r.f(b));
      worst = std::max(worst, err);
      o.require(err <= 1e-9, fmt("%s regime at b=%.6f: rel err %.3e", r.regime, b, err));
    }
  const double at_r2 = rel_err(small(kR2), middle(kR2));
  const double at_r3 = rel_err(middle(kR3), large(kR3));
  o.require(at_r2 <= 1e-9, fmt("formulas disagree at sqrt2: %.3e", at_r2));
  o.require(at_r3 <= 1e-9, fmt("formulas disagree at sqrt3: %.3e", at_r3));
  o.note(fmt("worst rel err %.3e; boundary gaps %.3e, %.3e", worst, at_r2, at_r3));
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst_obj = 0.0, worst_coef = 0.0;
  for (int n = 1; n <= 8; ++n)
    for (double b : kAgreementB) {
      const auto general = solve_first_kind(ProblemSpec(ProblemKind::first, range(1, n), b));
      const auto closed = closed_form_first_full(n, b);
      const double eo = rel_err(general.objective, closed.objective);
      double ec = 0.0;
      for (int j = 1; j <= n; ++j)
        ec = std::max(ec, max_coeff_diff(general.polys.at(j), closed.polys.at(j)));
      worst_obj = std::max(worst_obj, eo);
      worst_coef = std::max(worst_coef, ec);
      o.require(eo <= 1e-9, fmt("n=%d b=%.3f objective rel err %.3e", n, b, eo));
      o.require(ec <= 1e-8, fmt("n=%d b=%.3f coefficient err %.3e", n, b, ec));
    }
  o.note(fmt("72 instances; worst objective rel err %.3e, coefficient err %.3e", worst_obj, worst_coef));
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& c : kOracleCases) {
    const ProblemSpec spec(ProblemKind::first, c.indices, c.b);
    const double solver = solve_first_kind(spec).objective;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = brute_force_max(spec, kOracleBudget, kOracleSeed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double gap = std::abs(r.best_value - solver);
    const double tol = 1e-3 * std::max(1.0, std::abs(solver));
    o.require(gap <= tol, fmt("I=%s b=%.2f gap %.3e > %.3e", join(c.indices).c_str(), c.b, gap, tol));
    o.require(secs <= 10.0, fmt("I=%s b=%.2f took %.2f s", join(c.indices).c_str(), c.b, secs));
    o.note(fmt("I=%s b=%.2f solver %.10g oracle %.10g gap %.2e (%.2f s)", join(c.indices).c_str(), c.b,
               solver, r.best_value, gap, secs));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst_sup = 0.0, worst_att = 0.0;
  std::size_t count = 0;
  for (const auto& spec : first_kind_instances()) {
    const auto rep = verify_solution(solve_first_kind(spec), spec);
    worst_sup = std::max(worst_sup, rep.constraint_sup.sup);
    worst_att = std::max(worst_att, rep.support_attainment);
    o.require(rep.constraint_sup.sup <= 1 + 1e-8,
              fmt("I=%s b=%.3f sup %.12f", join(spec.indices()).c_str(), spec.b(), rep.constraint_sup.sup));
    o.require(rep.support_attainment <= 1e-8,
              fmt("I=%s b=%.3f attainment %.3e", join(spec.indices()).c_str(), spec.b(), rep.support_attainment));
    ++count;
  }
  o.note(fmt("%zu instances; max sup %.15f, worst attainment %.3e", count, worst_sup, worst_att));
  return o;
}

Outcome criterion5() {
  Outcome o;
  double w[4] = {0, 0, 0, 0};
  std::size_t count = 0;
  for (const auto& s : certificate_sets())
    for (double b : kCertificateB) {
      const ProblemSpec spec(ProblemKind::first, s, b);
      const auto rep = duality_certificate(solve_first_kind(spec), spec);
      const std::string tag = fmt("I=%s b=%.2f", join(s).c_str(), b);
      o.require(!rep.singular_index, tag + " singular moment matrix");
      o.require(rep.trace_residual <= 1e-8, fmt("%s trace residual %.3e", tag.c_str(), rep.trace_residual));
      o.require(rep.matrix_residual <= 1e-8, fmt("%s matrix residual %.3e", tag.c_str(), rep.matrix_residual));
      o.require(rep.minimum_residual <= 1e-8, fmt("%s minimum residual %.3e", tag.c_str(), rep.minimum_residual));
      o.require(rep.identity_residual <= 1e-9, fmt("%s identity residual %.3e", tag.c_str(), rep.identity_residual));
      w[0] = std::max(w[0], rep.trace_residual);
      w[1] = std::max(w[1], rep.matrix_residual);
      w[2] = std::max(w[2], rep.minimum_residual);
      w[3] = std::max(w[3], rep.identity_residual);
      ++count;
    }
  o.note(fmt("%zu instances; worst trace %.2e, matrix %.2e, minimum %.2e, identity %.2e", count, w[0], w[1],
             w[2], w[3]));
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst_sum = 0.0, worst_orth = 0.0;
  std::size_t count = 0;
  auto check = [&](const ExtremalSolution& sol, int n, const std::string& tag) {
    double s = 0.0;
    for (const auto& entry : sol.alphas) s += entry.second;
    const auto& cm = *sol.dual_moments;
    const double orth = orthogonality_defect(support_measure(cm), monic_orthopolys(cm, n), l2_norms(cm, n));
    worst_sum = std::max(worst_sum, std::abs(s - 1));
    worst_orth = std::max(worst_orth, orth);
    o.require(std::abs(s - 1) <= 1e-12, fmt("%s alpha sum off by %.3e", tag.c_str(), std::abs(s - 1)));
    o.require(orth <= 1e-9, fmt("%s orthogonality defect %.3e", tag.c_str(), orth));
    ++count;
  };
  for (const auto& spec : first_kind_instances())
    check(solve_first_kind(spec), spec.n(), fmt("I=%s b=%.3f", join(spec.indices()).c_str(), spec.b()));
  for (int n = 1; n <= 8; ++n)
    for (double b : kAgreementB) check(closed_form_first_full(n, b), n, fmt("explicit n=%d b=%.3f", n, b));
  o.note(fmt("%zu dual measures; worst alpha-sum err %.2e, orthogonality defect %.2e", count, worst_sum,
             worst_orth));
  return o;
}

std::vector<double> phase_jumps(int n, ProblemKind kind) {
  std::vector<double> out;
  const double lo_b = 0.5, hi_b = 3.0;
  const int steps = 2500;
  int prev = threshold_index(n, lo_b, kind);
  for (int i = 1; i <= steps; ++i) {
    const double b = lo_b + (hi_b - lo_b) * i / steps;
    const int k = threshold_index(n, b, kind);
    if (k == prev) continue;
    double lo = lo_b + (hi_b - lo_b) * (i - 1) / steps, hi = b;
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      (threshold_index(n, mid, kind) == prev ? lo : hi) = mid;
    }
    out.push_back(0.5 * (lo + hi));
    prev = k;
  }
  return out;
}

std::string list(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += fmt("%s%.12f", s.empty() ? "" : ", ", x);
  return "[" + s + "]";
}

Outcome criterion7() {
  Outcome o;
  const std::vector<double> expected{kR2, kR3, std::sqrt(2 + kR2), std::sqrt((5 + std::sqrt(5.0)) / 2)};
  const auto found = phase_jumps(4, ProblemKind::first);
  o.note("expected " + list(expected));
  o.note("found    " + list(found) + " (first kind, n=4)");
  o.require(found.size() == expected.size(),
            fmt("found %zu jump points, expected %zu", found.size(), expected.size()));
  for (std::size_t i = 0; i < std::min(found.size(), expected.size()); ++i)
    o.require(std::abs(found[i] - expected[i]) <= 1e-9,
              fmt("jump %zu at %.12f, expected %.12f", i + 1, found[i], expected[i]));
  if (found.size() != expected.size()) {
    // where the missing point does show up
    o.note("first kind, n=5:  " + list(phase_jumps(5, ProblemKind::first)));
    o.note("second kind, n=4: " + list(phase_jumps(4, ProblemKind::second)));
    o.note("n=4 first kind has phases 4..1 only, i.e. three changes; the fourth value needs n >= 5");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto oracle_check = [&](const ProblemSpec& spec, double objective) {
    const auto r = brute_force_max(spec, kOracleBudget, kOracleSeed);
    const double gap = std::abs(r.best_value - objective);
    const double tol = 1e-3 * std::max(1.0, std::abs(objective));
    o.require(gap <= tol, fmt("second kind I=%s b=%.2f oracle gap %.3e", join(spec.indices()).c_str(),
                              spec.b(), gap));
    return r.best_value;
  };
  auto feasible = [&](const ExtremalSolution& sol, const ProblemSpec& spec) {
    const double sup = sup_sum_squares(values_of(sol.polys), spec.b(), Weight::second_kind).sup;
    o.require(sup <= 1 + 1e-8, fmt("second kind I=%s b=%.2f weighted sup %.12f",
                                   join(spec.indices()).c_str(), spec.b(), sup));
  };

  struct PairCase {
    int n;
    double b;
    double expected;
    const char* formula;
  };
  const std::vector<PairCase> pairs{
      {2, 1.0, std::pow(2.0, 4) * std::pow(1.0, -2), "2^{2n} b^{-2n+2}"},
      {3, 1.2, std::pow(2.0, 6) * std::pow(1.2, -4), "2^{2n} b^{-2n+2}"},
      {2, 2.0, std::pow(2.0 / 2.0, 2) / (4.0 - 1), "(2/b)^{2(n-1)} / (b^2-1)"},
      {3, 2.0, std::pow(2.0 / 2.0, 4) / (4.0 - 1), "(2/b)^{2(n-1)} / (b^2-1)"}};
  for (const auto& c : pairs) {
    const ProblemSpec spec(ProblemKind::second, {c.n - 1, c.n}, c.b);
    const auto sol = closed_form_pair_second(c.n, c.b);
    const double err = rel_err(sol.objective, c.expected);
    feasible(sol, spec);
    const double oracle = oracle_check(spec, sol.objective);
    o.note(fmt("pair n=%d b=%.2f expected %.10g solution %.10g oracle %.10g", c.n, c.b, c.expected,
               sol.objective, oracle));
    o.require(err <= 1e-9, fmt("pair n=%d b=%.2f: %s = %.10g, solution %.10g", c.n, c.b, c.formula,
                               c.expected, sol.objective));
    if (err > 1e-9)
      o.note(fmt("  squared leading coefficient of U_n(x/b)/b is 2^{2n} b^{-2n-2} = %.10g",
                 std::pow(2.0, 2 * c.n) * std::pow(c.b, -2 * c.n - 2)));
  }

  double worst = 0.0;
  for (double b : {2.0, 3.0})
    for (int n = 0; n <= 4; ++n) {
      const ProblemSpec spec(ProblemKind::second, range(0, n), b);
      const auto sol = closed_form_second_full(n, b);
      const double expected = cheb_second_value(n, b / 2) / (b * cheb_second_value(n + 1, b / 2));
      const double err = rel_err(sol.objective, expected);
      worst = std::max(worst, err);
      o.require(err <= 1e-9, fmt("full n=%d b=%.1f rel err %.3e", n, b, err));
      feasible(sol, spec);
      if (n <= 3) oracle_check(spec, sol.objective);
    }
  o.note(fmt("full set, b in {2,3}, n <= 4: worst rel err %.3e", worst));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto at1 = solve_first_kind(ProblemSpec(ProblemKind::first, {1, 2, 3}, 1.0));
  const double target = solve_first_kind(ProblemSpec(ProblemKind::first, {1, 2, 3}, 2.0)).objective;
  std::map<int, Polynomial> moved;
  for (const auto& [j, p] : at1.polys) moved[j] = p.rescaled(0.5);
  const double sup = sup_sum_squares(values_of(moved), 2.0).sup;
  for (auto& entry : moved) entry.second *= 1 / std::sqrt(sup);
  const double value = objective_of(moved);
  o.require(rel_err(target, 0.375) <= 1e-12, fmt("b=2 optimum %.17g", target));
  o.require(value <= target - 1e-3, fmt("rescaled family reaches %.10g", value));
  o.note(fmt("rescaled b=1 family: %.10g, optimum at b=2: %.10g, shortfall %.4g", value, target, target - value));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "golden values for I={1,2,3}", criterion1},
    {2, "explicit full-set solution vs general solver, n<=8", criterion2},
    {3, "brute-force oracle equivalence", criterion3},
    {4, "feasibility and attainment on the dual support", criterion4},
    {5, "duality certificate residuals", criterion5},
    {6, "alpha telescoping and discrete orthogonality", criterion6},
    {7, "phase diagram jump points, n=4", criterion7},
    {8, "second-kind closed forms", criterion8},
    {9, "non-invariance under rescaling", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::set<int> wanted(only.begin(), only.end());
  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && !wanted.contains(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s (%.2f s)\n", c.id, out.pass ? "PASS" : "FAIL", c.title, secs);
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    all_ok = all_ok && out.pass;
  }
  return all_ok ? 0 : 1;
}
