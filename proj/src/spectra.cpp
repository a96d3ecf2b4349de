#include "drabi/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "drabi/parallel.hpp"

namespace drabi {

namespace {

constexpr double kImagTol = 1e-8;

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

std::vector<double> eig_tridiagonal(const TridiagonalMatrix& m) {
  const int n = m.size();
  if (n == 0) return {};
  if (n == 1) return {m.diag[0]};
  if (const auto b = balance_to_symmetric(m)) {
    Eigen::Map<const Eigen::VectorXd> diag(b->diag.data(), n);
    Eigen::Map<const Eigen::VectorXd> off(b->off.data(), n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw Error("symmetric tridiagonal eigensolver did not converge");
    return to_vector(es.eigenvalues());
  }
  return eig_tridiagonal_general(m);
}

std::vector<double> eig_tridiagonal_general(const TridiagonalMatrix& m) {
  const int n = m.size();
  if (n == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> es(m.dense(), false);
  if (es.info() != Eigen::Success)
    throw Error("general eigensolver did not converge");
  const Eigen::VectorXcd ev = es.eigenvalues();
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(ev(i)));
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(ev(i).imag()) > kImagTol * scale)
      throw NonRealSpectrum(
          "eigenvalue with non-negligible imaginary part: " +
          std::to_string(ev(i).real()) + " + " + std::to_string(ev(i).imag()) +
          "i");
    out[i] = ev(i).real();
  }
  std::sort(out.begin(), out.end());
  return out;
}

TridiagonalEigen eig_tridiagonal_vectors(const TridiagonalMatrix& m) {
  const int n = m.size();
  const auto b = balance_to_symmetric(m);
  if (!b)
    throw Error(
        "eigenvectors are provided only for symmetrizable tridiagonal "
        "matrices");
  TridiagonalEigen out;
  if (n == 0) return out;
  Eigen::Map<const Eigen::VectorXd> diag(b->diag.data(), n);
  Eigen::Map<const Eigen::VectorXd> off(b->off.data(), std::max(0, n - 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw Error("symmetric tridiagonal eigensolver did not converge");
  out.values = to_vector(es.eigenvalues());
  out.vectors = es.eigenvectors();
  // back to monomial coordinates: original = D * symmetric-basis vector;
  // scale entries may underflow for large order, harmlessly
  for (int r = 0; r < n; ++r) out.vectors.row(r) *= b->scale[r];
  for (int c = 0; c < n; ++c) {
    int arg = 0;
    double best = 0.0;
    for (int r = 0; r < n; ++r) {
      const double a = std::abs(out.vectors(r, c));
      if (a > best) {
        best = a;
        arg = r;
      }
    }
    if (best > 0.0) out.vectors.col(c) /= out.vectors(arg, c);
  }
  return out;
}

ConvergedLevels converge_eigenvalues(
    const std::function<std::vector<double>(int)>& eigenvalues_at_n_max,
    int count, double tol, int cap) {
  if (count < 1) throw Error("requested level count must be positive");
  if (!(tol > 0)) throw Error("convergence tolerance must be positive");
  if (cap < 1) throw Error("truncation cap must be positive");

  int n = std::min(kTruncationFloor, cap);
  std::vector<double> prev = eigenvalues_at_n_max(n);
  double last_delta = std::numeric_limits<double>::infinity();
  std::vector<bool> settled;
  while (2 * n <= cap) {
    n *= 2;
    std::vector<double> cur = eigenvalues_at_n_max(n);
    const int have =
        std::min<int>(count, std::min(prev.size(), cur.size()));
    settled.assign(count, false);
    last_delta = 0.0;
    bool all = have == count;
    for (int i = 0; i < have; ++i) {
      const double d = std::abs(cur[i] - prev[i]);
      last_delta = std::max(last_delta, d);
      settled[i] = d <= tol;
      all = all && settled[i];
    }
    if (all) {
      cur.resize(count);
      return {std::move(cur), std::move(settled), n, last_delta};
    }
    prev = std::move(cur);
  }
  if (static_cast<int>(prev.size()) > count) prev.resize(count);
  if (settled.empty()) settled.assign(prev.size(), false);
  throw ConvergenceFailure(
      "truncation cap " + std::to_string(cap) +
          " reached before the requested levels settled (last change " +
          std::to_string(last_delta) + ")",
      std::move(prev), std::move(settled), last_delta, n);
}

namespace {

struct LabeledLevel {
  double energy;
  int parity;
  int index_within_parity;
  bool converged;
};

bool level_order(const LabeledLevel& a, const LabeledLevel& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  if (a.parity != b.parity) return a.parity > b.parity;  // +1 first on ties
  return a.index_within_parity < b.index_within_parity;
}

Spectrum finish_spectrum(std::vector<LabeledLevel> rows, int count,
                         int n_max_used, double tol, bool all_converged,
                         double last_delta) {
  std::sort(rows.begin(), rows.end(), level_order);
  if (static_cast<int>(rows.size()) > count) rows.resize(count);
  if (!all_converged) {
    std::vector<double> values;
    std::vector<bool> flags;
    std::vector<int> parity;
    std::vector<int> index;
    for (const auto& r : rows) {
      values.push_back(r.energy);
      flags.push_back(r.converged);
      parity.push_back(r.parity);
      index.push_back(r.index_within_parity);
    }
    ConvergenceFailure err(
        "truncation cap reached before the requested levels settled",
        std::move(values), std::move(flags), last_delta, n_max_used);
    err.parity = std::move(parity);
    err.index_within_parity = std::move(index);
    throw err;
  }
  Spectrum s;
  for (auto& r : rows)
    s.levels.push_back(
        {r.energy, r.parity, r.index_within_parity, r.converged});
  s.n_max_used = n_max_used;
  s.tol = tol;
  return s;
}

}  // namespace

Spectrum parity_spectrum(
    const std::function<TridiagonalMatrix(int parity, int n_max)>& build,
    int count, double tol, int cap, double energy_scale, int parity_filter) {
  if (parity_filter != 0 && parity_filter != +1 && parity_filter != -1)
    throw Error("parity filter must be 0, +1 or -1");
  std::vector<int> parities;
  if (parity_filter >= 0) parities.push_back(+1);
  if (parity_filter <= 0) parities.push_back(-1);

  std::vector<LabeledLevel> rows;
  int n_max_used = 0;
  bool all_converged = true;
  double last_delta = 0.0;
  for (const int parity : parities) {
    ConvergedLevels lv;
    try {
      lv = converge_eigenvalues(
          [&](int n) { return eig_tridiagonal(build(parity, n)); }, count, tol,
          cap);
    } catch (const ConvergenceFailure& e) {
      lv.values = e.best_values;
      lv.settled = e.level_settled;
      lv.n_max_used = e.n_max_reached;
      lv.last_delta = e.last_delta;
      all_converged = false;
    }
    for (std::size_t i = 0; i < lv.values.size(); ++i)
      rows.push_back({lv.values[i] * energy_scale, parity,
                      static_cast<int>(i),
                      i < lv.settled.size() && lv.settled[i]});
    n_max_used = std::max(n_max_used, lv.n_max_used);
    last_delta = std::max(last_delta, lv.last_delta);
  }
  return finish_spectrum(std::move(rows), count, n_max_used, tol,
                         all_converged, last_delta);
}

namespace {

// Dense route for the decoupled boundary: eigendecomposition of the full
// model with parity assignment on the eigenvectors.
Spectrum grm_boundary_spectrum(const GrmParams& p, int count, double tol,
                               int cap, int parity_filter) {
  const int want = parity_filter == 0 ? count : 2 * count + 2;
  auto eigs = [&](int n) {
    const TruncatedHamiltonian h = build_grm_full(p, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.matrix,
                                                      Eigen::EigenvaluesOnly);
    return to_vector(es.eigenvalues());
  };
  ConvergedLevels lv;
  bool all_converged = true;
  try {
    lv = converge_eigenvalues(eigs, want, tol, cap);
  } catch (const ConvergenceFailure& e) {
    lv.values = e.best_values;
    lv.settled = e.level_settled;
    lv.n_max_used = e.n_max_reached;
    lv.last_delta = e.last_delta;
    all_converged = false;
  }

  const TruncatedHamiltonian h = build_grm_full(p, lv.n_max_used);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.matrix);
  Eigen::MatrixXd vectors = es.eigenvectors();
  const Eigen::VectorXd values = es.eigenvalues();
  const ParityAssignment pa = assign_parity(vectors, values, lv.n_max_used);

  std::vector<LabeledLevel> rows;
  int rank_plus = 0, rank_minus = 0;
  for (std::size_t i = 0; i < lv.values.size(); ++i) {
    const int parity = pa.sign[i];
    const int rank = parity > 0 ? rank_plus++ : rank_minus++;
    if (parity_filter != 0 && parity != parity_filter) continue;
    rows.push_back({lv.values[i], parity, rank,
                    i < lv.settled.size() && lv.settled[i]});
  }
  Spectrum s = finish_spectrum(std::move(rows), count, lv.n_max_used, tol,
                               all_converged, lv.last_delta);
  s.note = "decoupled boundary (k1*k2 = 0): dense route with parity "
           "assignment";
  return s;
}

}  // namespace

Spectrum grm_spectrum(const GrmParams& p, int count, double tol, int cap,
                      int parity_filter) {
  if (p.k1 * p.k2 == 0.0)
    return grm_boundary_spectrum(p, count, tol, cap, parity_filter);
  const DerivedGrm d = derive_grm(p);
  auto build = [d](int parity, int n_max) {
    return build_ttrr(grm_dunkl_spec(d.delta, d.kappa, d.lambda_plus,
                                     d.lambda_minus, parity),
                      n_max);
  };
  return parity_spectrum(build, count, tol, cap, p.gamma, parity_filter);
}

Spectrum su11_spectrum(const Su11Params& p, int count, double tol, int cap,
                       int parity_filter) {
  validate_su11(p);
  auto build = [p](int parity, int n_max) {
    const DunklOperatorSpec spec =
        p.model == Su11Model::two_photon
            ? two_photon_dunkl_spec(p.gamma, p.q, p.delta, parity)
            : two_mode_dunkl_spec(p.gamma, p.q, p.delta, parity);
    return build_ttrr(spec, n_max);
  };
  Spectrum s = parity_spectrum(build, count, tol, cap, 1.0, parity_filter);
  if (collapse_risk(p))
    s.note =
        "two_photon with gamma <= 2: discrete spectrum collapses; results "
        "are not trustworthy";
  return s;
}

std::vector<double> jcm_analytic(const GrmParams& p, int count) {
  if (p.k2 != 0.0)
    throw Error("analytic decoupled route requires k2 = 0");
  if (!(p.gamma > 0)) throw Error("gamma must be positive");
  if (count < 1) return {};
  const int margin =
      count + 64 +
      static_cast<int>(std::ceil((p.k1 / p.gamma) * (p.k1 / p.gamma))) +
      static_cast<int>(std::ceil(std::abs(p.mu) / p.gamma));
  std::vector<double> out;
  out.push_back(-p.mu);  // the isolated lowest dressed state
  const double off = p.mu - p.gamma / 2.0;
  for (int n = 0; n < margin; ++n) {
    const double mid = p.gamma * (n + 0.5);
    const double split = std::sqrt(off * off + p.k1 * p.k1 * (n + 1.0));
    out.push_back(mid - split);
    out.push_back(mid + split);
  }
  std::sort(out.begin(), out.end());
  out.resize(count);
  return out;
}

std::vector<double> solvable_no_reflection(double delta, double kappa,
                                           int count) {
  if (count < 1) return {};
  std::vector<double> out;
  const double base = -kappa * kappa;
  for (int m = 0; m < count; ++m) {
    out.push_back(m + base + delta);
    out.push_back(m + base - delta);
  }
  std::sort(out.begin(), out.end());
  out.resize(count);
  return out;
}

SpectrumFamily rm_kappa_family(double delta, int count, double tol, int cap) {
  SpectrumFamily f;
  f.parameter_name = "kappa";
  f.at = [delta, count, tol, cap](double kappa) {
    auto build = [delta, kappa](int parity, int n_max) {
      return build_ttrr(rm_dunkl_spec(delta, kappa, parity), n_max);
    };
    return parity_spectrum(build, count, tol, cap, 1.0, 0);
  };
  f.coupled = [](double kappa) { return kappa != 0.0; };
  return f;
}

SpectrumFamily grm_coupling_family(double gamma, double mu, double alpha,
                                   int count, double tol, int cap) {
  SpectrumFamily f;
  f.parameter_name = "Lambda";
  f.at = [gamma, mu, alpha, count, tol, cap](double lambda) {
    GrmParams p;
    p.gamma = gamma;
    p.mu = mu;
    p.k1 = lambda * std::cos(alpha);
    p.k2 = lambda * std::sin(alpha);
    return grm_spectrum(p, count, tol, cap, 0);
  };
  f.coupled = [](double lambda) { return lambda != 0.0; };
  return f;
}

SpectrumFamily su11_gamma_family(Su11Model model, double q, double delta,
                                 int count, double tol, int cap) {
  SpectrumFamily f;
  f.parameter_name = "gamma";
  f.at = [model, q, delta, count, tol, cap](double gamma) {
    Su11Params p;
    p.model = model;
    p.gamma = gamma;
    p.q = q;
    p.delta = delta;
    return su11_spectrum(p, count, tol, cap, 0);
  };
  f.coupled = [](double) { return true; };
  return f;
}

namespace {

using LevelKey = std::pair<int, int>;  // (parity, index_within_parity)

std::map<LevelKey, double> level_map(const Spectrum& s) {
  std::map<LevelKey, double> m;
  for (const auto& lv : s.levels)
    m[{lv.parity, lv.index_within_parity}] = lv.energy;
  return m;
}

}  // namespace

std::vector<CrossingEvent> crossing_scan(const SpectrumFamily& family,
                                         double lo, double hi, int steps,
                                         double param_tol, double gap_tol) {
  std::vector<CrossingEvent> events;
  if (steps <= 0 || lo == hi) return events;

  std::vector<double> ts(steps + 1);
  for (int g = 0; g <= steps; ++g)
    ts[g] = g == steps ? hi : lo + (hi - lo) * g / steps;

  std::vector<Spectrum> spectra(ts.size());
  parallel_for(static_cast<int>(ts.size()),
               [&](int g) { spectra[g] = family.at(ts[g]); });
  std::vector<std::map<LevelKey, double>> maps(ts.size());
  for (std::size_t g = 0; g < ts.size(); ++g) maps[g] = level_map(spectra[g]);

  // --- equal-parity neighbour gaps, tracked across the grid ---
  struct GapTrack {
    double min_gap = std::numeric_limits<double>::infinity();
    double at = 0.0;
  };
  std::map<std::pair<LevelKey, LevelKey>, GapTrack> gaps;
  for (std::size_t g = 0; g < ts.size(); ++g) {
    if (!family.coupled(ts[g])) continue;
    for (const auto& [key, energy] : maps[g]) {
      const LevelKey next{key.first, key.second + 1};
      const auto it = maps[g].find(next);
      if (it == maps[g].end()) continue;
      const double gap = std::abs(it->second - energy);
      auto& track = gaps[{key, next}];
      if (gap < track.min_gap) {
        track.min_gap = gap;
        track.at = ts[g];
      }
    }
  }
  for (const auto& [pair, track] : gaps) {
    CrossingEvent e;
    e.parameter = track.at;
    e.parity_a = pair.first.first;
    e.index_a = pair.first.second;
    e.parity_b = pair.second.first;
    e.index_b = pair.second.second;
    e.min_gap = track.min_gap;
    e.true_crossing = track.min_gap <= gap_tol;
    events.push_back(e);
  }

  // --- opposite-parity order inversions, refined by bisection ---
  auto signed_gap = [](const std::map<LevelKey, double>& m, const LevelKey& a,
                       const LevelKey& b) -> std::optional<double> {
    const auto ia = m.find(a);
    const auto ib = m.find(b);
    if (ia == m.end() || ib == m.end()) return std::nullopt;
    return ia->second - ib->second;
  };

  std::set<std::pair<LevelKey, LevelKey>> candidates;
  auto add_adjacent_pairs = [&](const Spectrum& s) {
    for (std::size_t i = 0; i + 1 < s.levels.size(); ++i) {
      const auto& a = s.levels[i];
      const auto& b = s.levels[i + 1];
      if (a.parity == b.parity) continue;
      LevelKey ka{a.parity, a.index_within_parity};
      LevelKey kb{b.parity, b.index_within_parity};
      if (kb < ka) std::swap(ka, kb);
      candidates.insert({ka, kb});
    }
  };

  std::set<std::pair<LevelKey, LevelKey>> reported;
  for (std::size_t g = 0; g + 1 < ts.size(); ++g) {
    candidates.clear();
    add_adjacent_pairs(spectra[g]);
    add_adjacent_pairs(spectra[g + 1]);
    for (const auto& [ka, kb] : candidates) {
      const auto d0 = signed_gap(maps[g], ka, kb);
      const auto d1 = signed_gap(maps[g + 1], ka, kb);
      if (!d0 || !d1) continue;
      CrossingEvent e;
      e.parity_a = ka.first;
      e.index_a = ka.second;
      e.parity_b = kb.first;
      e.index_b = kb.second;
      if (*d0 == 0.0 || (*d1 == 0.0 && g + 2 == ts.size())) {
        if (!reported.insert({ka, kb}).second) continue;
        e.parameter = *d0 == 0.0 ? ts[g] : ts[g + 1];
        e.min_gap = 0.0;
        e.true_crossing = true;
        events.push_back(e);
        continue;
      }
      if (*d0 * *d1 >= 0.0) continue;
      // bisect the sign change
      double a = ts[g], b = ts[g + 1];
      double da = *d0;
      double mid = 0.5 * (a + b);
      double dmid = da;
      while (b - a > param_tol) {
        mid = 0.5 * (a + b);
        const auto dm = signed_gap(level_map(family.at(mid)), ka, kb);
        if (!dm) break;
        dmid = *dm;
        if (dmid == 0.0) break;
        if (da * dmid < 0)
          b = mid;
        else {
          a = mid;
          da = dmid;
        }
      }
      e.parameter = mid;
      e.min_gap = std::abs(dmid);
      e.true_crossing = true;
      events.push_back(e);
    }
  }

  std::sort(events.begin(), events.end(),
            [](const CrossingEvent& x, const CrossingEvent& y) {
              if (x.parameter != y.parameter) return x.parameter < y.parameter;
              if (x.parity_a != y.parity_a) return x.parity_a > y.parity_a;
              if (x.index_a != y.index_a) return x.index_a < y.index_a;
              if (x.parity_b != y.parity_b) return x.parity_b > y.parity_b;
              return x.index_b < y.index_b;
            });
  return events;
}

}  // namespace drabi
