#include "drabi/invariants.hpp"

#include <cmath>
#include <complex>

#include "drabi/parallel.hpp"

namespace drabi {

GrmParams CouplingPolar::to_params(double gamma, double mu) const {
  GrmParams p;
  p.gamma = gamma;
  p.mu = mu;
  p.k1 = lambda * std::cos(alpha);
  p.k2 = lambda * std::sin(alpha);
  return p;
}

namespace {

using Complex = std::complex<double>;

// <v| a^dag sigma_+ |v> in the interleaved basis.
Complex raise_up_expectation(const Eigen::VectorXcd& v, int n_max) {
  Complex e = 0.0;
  for (int n = 0; n < n_max; ++n)
    e += std::conj(v(2 * (n + 1))) * std::sqrt(n + 1.0) * v(2 * n + 1);
  return e;
}

// <v| a^dag sigma_- |v>.
Complex raise_down_expectation(const Eigen::VectorXcd& v, int n_max) {
  Complex e = 0.0;
  for (int n = 0; n < n_max; ++n)
    e += std::conj(v(2 * (n + 1) + 1)) * std::sqrt(n + 1.0) * v(2 * n);
  return e;
}

void fix_phase(Eigen::VectorXcd& v) {
  int arg = 0;
  double best = 0.0;
  for (int r = 0; r < v.size(); ++r) {
    const double a = std::abs(v(r));
    if (a > best) {
      best = a;
      arg = r;
    }
  }
  if (best == 0.0) return;
  v *= std::conj(v(arg)) / best;  // unit phase: largest component real positive
}

}  // namespace

InvariantPattern invariant_pattern(const GrmParams& p, int count, int n_max) {
  if (count < 1) throw Error("requested level count must be positive");
  const TruncatedHamiltonian h = build_grm_full(p, n_max);
  const int dim = static_cast<int>(h.matrix.rows());
  if (count > dim)
    throw Error("requested more levels than the truncated dimension");

  const Eigen::MatrixXcd hc = h.matrix.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hc);
  if (es.info() != Eigen::Success)
    throw Error("Hermitian eigensolver did not converge");
  const Eigen::VectorXd values = es.eigenvalues();

  // extend the window so a degenerate cluster is never cut in half
  int window = count;
  while (window < dim && values(window) - values(window - 1) < 1e-9) ++window;

  Eigen::MatrixXcd vectors = es.eigenvectors().leftCols(window);
  const Eigen::VectorXd head = values.head(window);
  const ParityAssignment pa = assign_parity(vectors, head, n_max);

  InvariantPattern out;
  out.n_max_used = n_max;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXcd v = vectors.col(i);
    fix_phase(v);
    const Complex t1 = raise_up_expectation(v, n_max);
    const Complex t2 = t1 + raise_down_expectation(v, n_max);
    InvariantPoint pt;
    pt.n = i;
    pt.parity = pa.sign[i];
    pt.energy = values(i);
    pt.t1 = t1.real();
    pt.t2 = t2.real();
    pt.imag_residual = std::max(std::abs(t1.imag()), std::abs(t2.imag()));
    out.points.push_back(pt);
  }
  return out;
}

InvariantPattern converged_invariant_pattern(const GrmParams& p, int count,
                                             double tol, int cap) {
  auto eigs = [&](int n) {
    const TruncatedHamiltonian h = build_grm_full(p, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.matrix,
                                                      Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
    return v;
  };
  const ConvergedLevels lv = converge_eigenvalues(eigs, count, tol, cap);
  return invariant_pattern(p, count, lv.n_max_used);
}

std::vector<PatternFrame> pattern_motion_scan(double gamma, double mu,
                                              double alpha, double lo,
                                              double hi, int steps, int count,
                                              double tol, int cap) {
  if (steps < 0) throw Error("steps must be nonnegative");
  const int points = steps + 1;
  std::vector<PatternFrame> frames(points);
  parallel_for(points, [&](int g) {
    PatternFrame& f = frames[g];
    f.lambda = steps == 0 ? lo
                          : (g == steps ? hi : lo + (hi - lo) * g / steps);
    try {
      const CouplingPolar polar{f.lambda, alpha};
      const InvariantPattern pat =
          converged_invariant_pattern(polar.to_params(gamma, mu), count, tol,
                                      cap);
      f.points = pat.points;
      f.n_max_used = pat.n_max_used;
      f.ok = true;
    } catch (const std::exception& e) {
      f.ok = false;
      f.error = e.what();
    }
  });
  return frames;
}

}  // namespace drabi
