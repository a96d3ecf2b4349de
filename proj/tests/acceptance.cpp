// Acceptance gate for the whole toolkit: one PASS/FAIL line per criterion,
// nonzero exit when anything fails.  Tolerances are pinned here on purpose;
// loosening them is a behavior change, not a cleanup.
#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drabi/cli.hpp"
#include "drabi/identities.hpp"
#include "drabi/invariants.hpp"
#include "drabi/spectra.hpp"

using namespace drabi;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : "  -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------- criterion 1
void check_symbolic_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = run_identity_suite(false);
  const double elapsed = seconds_since(t0);
  int fails = 0;
  std::string first;
  for (const auto& c : checks)
    if (!c.pass) {
      if (first.empty()) first = c.name;
      ++fails;
    }
  std::ostringstream detail;
  detail << checks.size() << " identities, " << std::fixed << elapsed << " s";
  if (fails > 0) detail << "; first failure: " << first;
  report("exact operator algebra: products, conjugations, both theorem "
         "directions",
         fails == 0 && elapsed < 1.0, detail.str());
}

// ---------------------------------------------------------------- criterion 2
void check_parity_union() {
  const auto t0 = std::chrono::steady_clock::now();
  GrmParams p;
  p.gamma = 1.0;
  p.mu = 0.7;
  p.k1 = 0.8;
  p.k2 = 0.3;
  const int count = 20;
  const auto s = grm_spectrum(p, count, 1e-10);

  bool pass = static_cast<int>(s.levels.size()) == count;
  double worst = 0.0;
  if (pass) {
    // dense reference at a truncation chosen independently of the reduced
    // route, then doubled for a stability check
    for (const int n_max : {400, 800}) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
          build_grm_full(p, n_max).matrix, Eigen::EigenvaluesOnly);
      for (int i = 0; i < count; ++i)
        worst = std::max(worst, std::abs(s.levels[static_cast<std::size_t>(i)]
                                             .energy -
                                         solver.eigenvalues()(i)));
    }
    pass = worst <= 1e-8;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "max |reduced - dense| = " << std::scientific << worst << ", "
         << std::fixed << elapsed << " s";
  report("reduced-operator union matches the dense generalized model",
         pass && elapsed < 30.0, detail.str());
}

// ---------------------------------------------------------------- criterion 3
void check_rotating_limit() {
  GrmParams p;
  p.gamma = 1.0;
  p.mu = 0.5;
  p.k1 = 0.1;
  const int count = 15;
  const auto closed = jcm_analytic(p, count);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      build_grm_full(p, 400).matrix, Eigen::EigenvaluesOnly);
  double worst = 0.0;
  for (int i = 0; i < count; ++i)
    worst = std::max(worst, std::abs(closed[static_cast<std::size_t>(i)] -
                                     solver.eigenvalues()(i)));
  const bool spot = std::abs(closed[0] + 0.5) <= 1e-10 &&
                    std::abs(closed[1] - 0.4) <= 1e-10 &&
                    std::abs(closed[2] - 0.6) <= 1e-10;
  std::ostringstream detail;
  detail << "max |closed form - dense| = " << std::scientific << worst;
  report("decoupled rotating model matches its closed-form blocks",
         spot && worst <= 1e-10, detail.str());
}

// ---------------------------------------------------------------- criterion 4
void check_solvable_limits() {
  bool pass = true;
  double worst = 0.0;
  for (const double kappa : {0.3, 0.6, 1.0}) {
    const auto m = build_ttrr(rm_dunkl_spec(0.0, kappa, +1), 600);
    const auto e = eig_tridiagonal(m);
    for (int k = 0; k < 10; ++k)
      worst = std::max(worst,
                       std::abs(e[static_cast<std::size_t>(k)] -
                                (k - kappa * kappa)));
  }
  pass = worst <= 1e-8;

  // fully decoupled model: {gamma n +- mu} exactly at the first truncation
  GrmParams dec;
  dec.gamma = 1.0;
  dec.mu = 0.3;
  const auto s = grm_spectrum(dec, 8, 1e-10);
  const std::vector<double> want = {-0.3, 0.3, 0.7, 1.3, 1.7, 2.3, 2.7, 3.3};
  for (std::size_t i = 0; i < want.size(); ++i)
    pass = pass && s.levels[i].energy == want[i];
  std::ostringstream detail;
  detail << "max displaced-ladder deviation = " << std::scientific << worst;
  report("solvable limits: displaced ladder and the decoupled point", pass,
         detail.str());
}

// ---------------------------------------------------------------- criterion 5
void check_ladder_models() {
  bool pass = true;
  std::ostringstream detail;
  double worst = 0.0;

  struct Case {
    Su11Model model;
    double q;
  };
  const std::vector<Case> cases = {{Su11Model::two_photon, 0.25},
                                   {Su11Model::two_photon, 0.75},
                                   {Su11Model::two_mode, 0.5},
                                   {Su11Model::two_mode, 1.0}};
  for (const auto& c : cases) {
    Su11Params p;
    p.model = c.model;
    p.gamma = 3.0;
    p.q = c.q;
    p.delta = 0.4;
    const auto s = su11_spectrum(p, 15, 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        build_su11_full(p, 700).matrix, Eigen::EigenvaluesOnly);
    for (int i = 0; i < 15; ++i)
      worst = std::max(worst, std::abs(s.levels[static_cast<std::size_t>(i)]
                                           .energy -
                                       solver.eigenvalues()(i)));
  }
  pass = worst <= 1e-8;

  // closed form at delta = 0
  double worst_closed = 0.0;
  {
    Su11Params p;
    p.model = Su11Model::two_photon;
    p.gamma = 3.0;
    p.q = 0.25;
    p.delta = 0.0;
    const auto s = su11_spectrum(p, 10, 1e-10);
    const double slope = p.gamma * std::sqrt(1.0 - 4.0 / (p.gamma * p.gamma));
    for (int i = 0; i < 10; ++i) {
      // both parity blocks carry the same ladder: levels come in pairs
      const double expect = slope * (i / 2 + p.q) - p.gamma * 0.25;
      worst_closed =
          std::max(worst_closed,
                   std::abs(s.levels[static_cast<std::size_t>(i)].energy -
                            expect));
    }
  }
  pass = pass && worst_closed <= 1e-8;

  // the collapse regime must refuse, not fabricate
  bool collapsed_refused = false;
  try {
    Su11Params p;
    p.model = Su11Model::two_photon;
    p.gamma = 1.5;
    p.q = 0.25;
    su11_spectrum(p, 6, 1e-10, 4096);
  } catch (const ConvergenceFailure&) {
    collapsed_refused = true;
  }
  pass = pass && collapsed_refused;

  detail << "max |reduced - dense| = " << std::scientific << worst
         << ", closed-form deviation = " << worst_closed
         << (collapsed_refused ? ", collapse refused" : ", collapse MISSED");
  report("ladder models match their dense builds and closed forms", pass,
         detail.str());
}

// ---------------------------------------------------------------- criterion 6
void check_crossing_phenomenology() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream detail;

  const auto rm_family = rm_kappa_family(0.5, 8, 1e-10, 8192);
  const auto rm_events = crossing_scan(rm_family, 0.0, 1.5, 60);
  int opposite_true = 0;
  int equal_true = 0;
  double tightest_open_gap = 1.0;
  for (const auto& e : rm_events) {
    if (e.parity_a == e.parity_b) {
      if (e.true_crossing)
        ++equal_true;
      else
        tightest_open_gap = std::min(tightest_open_gap, e.min_gap);
    } else if (e.true_crossing && e.min_gap <= 1e-8) {
      ++opposite_true;
    }
  }
  pass = opposite_true >= 1 && equal_true == 0 && tightest_open_gap > 1e-10;

  const auto grm_family =
      grm_coupling_family(1.0, 0.7, std::atan2(0.3, 0.8), 8, 1e-10, 8192);
  const auto grm_events = crossing_scan(grm_family, 0.05, 1.0, 30);
  int grm_equal_true = 0;
  for (const auto& e : grm_events)
    if (e.parity_a == e.parity_b && e.true_crossing) ++grm_equal_true;
  pass = pass && grm_equal_true == 0;

  const double elapsed = seconds_since(t0);
  detail << opposite_true << " opposite-parity crossings, "
         << "equal-parity gaps stay above " << std::scientific
         << tightest_open_gap << ", " << std::fixed << elapsed << " s";
  report("crossing scans: opposite-parity degeneracies only",
         pass && elapsed < 300.0, detail.str());
}

// ---------------------------------------------------------------- criterion 7
void check_invariant_realness() {
  bool pass = true;
  double worst_imag = 0.0;
  const double pi = 3.14159265358979323846;
  for (int li = 0; li < 5; ++li) {
    const double lambda = 0.1 + 0.9 * li / 4.0;
    for (int ai = 0; ai < 5; ++ai) {
      const double alpha = pi / 8.0 * ai;
      CouplingPolar polar;
      polar.lambda = lambda;
      polar.alpha = alpha;
      const auto p = polar.to_params(1.0, 0.4);
      const auto pat = converged_invariant_pattern(p, 30, 1e-9);
      if (static_cast<int>(pat.points.size()) < 30) {
        pass = false;
        continue;
      }
      for (const auto& pt : pat.points)
        worst_imag = std::max(worst_imag, pt.imag_residual);
    }
  }
  pass = pass && worst_imag <= 1e-8;

  // byte determinism of the emitted pattern file
  auto emit = [] {
    std::ostringstream out;
    std::ostringstream err;
    cli::run({"invariants", "--model", "grm", "--gamma", "1", "--mu", "0.4",
              "--k1", "0.6", "--k2", "0.25", "--count", "12"},
             out, err);
    return out.str();
  };
  const std::string first = emit();
  const std::string second = emit();
  pass = pass && !first.empty() && first == second;

  std::ostringstream detail;
  detail << "max imaginary residual = " << std::scientific << worst_imag
         << (first == second ? ", emission deterministic"
                             : ", emission NOT deterministic");
  report("conserved-quantity expectations stay real on the coupling grid",
         pass, detail.str());
}

// ---------------------------------------------------------------- criterion 8
void check_internal_consistency() {
  std::mt19937_64 rng(20240817ULL);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<int> deg(0, 30);

  std::vector<DunklOperatorSpec> specs;
  for (int parity : {+1, -1}) {
    specs.push_back(grm_dunkl_spec(0.7, std::sqrt(0.24), 0.365, 0.275,
                                   parity));
    specs.push_back(rm_dunkl_spec(0.5, 0.6, parity));
    specs.push_back(two_photon_dunkl_spec(3.0, 0.25, 0.4, parity));
    specs.push_back(two_mode_dunkl_spec(3.0, 0.5, 0.4, parity));
  }

  double worst_rel = 0.0;
  for (const auto& spec : specs) {
    const auto m = build_ttrr(spec, 32);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : c) x = coeff(rng);
      const Polynomial p(c);
      const auto direct = apply_dunkl(spec, p);
      // matrix route
      std::vector<double> via(static_cast<std::size_t>(m.size()), 0.0);
      for (int n = 0; n < m.size(); ++n) {
        const double cn = p.at(n);
        if (cn == 0.0) continue;
        via[static_cast<std::size_t>(n)] +=
            m.diag[static_cast<std::size_t>(n)] * cn;
        if (n > 0)
          via[static_cast<std::size_t>(n - 1)] +=
              m.super[static_cast<std::size_t>(n - 1)] * cn;
        if (n + 1 < m.size())
          via[static_cast<std::size_t>(n + 1)] +=
              m.sub[static_cast<std::size_t>(n)] * cn;
      }
      for (int k = 0; k < m.size(); ++k) {
        const double a = direct.at(k);
        const double b = via[static_cast<std::size_t>(k)];
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        worst_rel = std::max(worst_rel, std::abs(a - b) / scale);
      }
    }
  }
  bool pass = worst_rel <= 1e-12;

  // the two eigensolver routes agree where both apply
  double worst_eig = 0.0;
  for (const auto& spec : specs) {
    const auto m = build_ttrr(spec, 160);
    const auto fast = eig_tridiagonal(m);
    const auto general = eig_tridiagonal_general(m);
    for (int k = 0; k < 30; ++k)
      worst_eig = std::max(worst_eig,
                           std::abs(fast[static_cast<std::size_t>(k)] -
                                    general[static_cast<std::size_t>(k)]));
  }
  pass = pass && worst_eig <= 1e-9;

  std::ostringstream detail;
  detail << "operator action relative deviation = " << std::scientific
         << worst_rel << ", eigensolver route deviation = " << worst_eig;
  report("internal consistency: operator action and eigensolver routes",
         pass, detail.str());
}

}  // namespace

int main() {
  check_symbolic_suite();
  check_parity_union();
  check_rotating_limit();
  check_solvable_limits();
  check_ladder_models();
  check_crossing_phenomenology();
  check_invariant_realness();
  check_internal_consistency();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
