#include "drabi/dunkl.hpp"

#include <cmath>

namespace drabi {

Eigen::MatrixXd TridiagonalMatrix::dense() const {
  const int n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = super[i];
    m(i + 1, i) = sub[i];
  }
  return m;
}

std::optional<BalancedTridiagonal> balance_to_symmetric(
    const TridiagonalMatrix& m) {
  const int n = m.size();
  BalancedTridiagonal b;
  b.diag = m.diag;
  b.off.resize(n > 0 ? n - 1 : 0);
  b.scale.assign(n, 1.0);
  for (int i = 0; i + 1 < n; ++i) {
    const double prod = m.sub[i] * m.super[i];
    if (prod < 0.0) return std::nullopt;
    b.off[i] = std::sqrt(prod);
    // scale[i+1]/scale[i] = sqrt(sub/super) makes D^{-1} M D symmetric; when
    // either entry vanishes the row decouples and the ratio is moot.
    if (m.super[i] != 0.0 && m.sub[i] != 0.0)
      b.scale[i + 1] = b.scale[i] * std::sqrt(m.sub[i] / m.super[i]);
    else
      b.scale[i + 1] = b.scale[i];
  }
  return b;
}

std::string to_string(DunklModel m) {
  switch (m) {
    case DunklModel::grm:
      return "grm";
    case DunklModel::rm:
      return "rm";
    case DunklModel::two_photon:
      return "two_photon";
    case DunklModel::two_mode:
      return "two_mode";
  }
  return "?";
}

namespace {

void require_parity(int parity) {
  if (parity != +1 && parity != -1)
    throw Error("reflection parity must be +1 or -1");
}

void require_su11(double gamma, double q) {
  if (!(gamma > 0)) throw Error("gamma must be positive");
  if (!(q > 0)) throw Error("representation label q must be positive");
}

}  // namespace

DunklOperatorSpec grm_dunkl_spec(double delta, double kappa,
                                 double lambda_plus, double lambda_minus,
                                 int parity) {
  require_parity(parity);
  if (!(kappa > 0))
    throw Error("grm reduced operator requires kappa > 0 (decoupled boundary)");
  DunklOperatorSpec s;
  s.model = DunklModel::grm;
  s.parity = parity;
  s.delta = delta;
  s.kappa = kappa;
  s.lambda_plus = lambda_plus;
  s.lambda_minus = lambda_minus;
  return s;
}

DunklOperatorSpec rm_dunkl_spec(double delta, double kappa, int parity) {
  require_parity(parity);
  if (kappa < 0) throw Error("rm reduced operator requires kappa >= 0");
  DunklOperatorSpec s;
  s.model = DunklModel::rm;
  s.parity = parity;
  s.delta = delta;
  s.kappa = kappa;
  s.lambda_plus = kappa * kappa;  // symmetric limit: lambda_plus/kappa = kappa
  s.lambda_minus = 0.0;
  return s;
}

DunklOperatorSpec two_photon_dunkl_spec(double gamma, double q, double delta,
                                        int parity) {
  require_parity(parity);
  require_su11(gamma, q);
  DunklOperatorSpec s;
  s.model = DunklModel::two_photon;
  s.parity = parity;
  s.gamma = gamma;
  s.q = q;
  s.delta = delta;
  return s;
}

DunklOperatorSpec two_mode_dunkl_spec(double gamma, double q, double delta,
                                      int parity) {
  require_parity(parity);
  require_su11(gamma, q);
  DunklOperatorSpec s;
  s.model = DunklModel::two_mode;
  s.parity = parity;
  s.gamma = gamma;
  s.q = q;
  s.delta = delta;
  return s;
}

TridiagonalMatrix build_ttrr(const DunklOperatorSpec& spec, int n_max) {
  if (n_max < 0) throw Error("n_max must be nonnegative");
  const int size = n_max + 1;
  TridiagonalMatrix t;
  t.diag.resize(size);
  t.super.resize(size - 1);
  t.sub.resize(size - 1);
  const double pm = spec.parity;
  // sign of the reflection term acting on z^n: parity * (-1)^n
  auto refl = [&](int n) { return (n % 2 == 0) ? pm : -pm; };
  switch (spec.model) {
    case DunklModel::grm:
      for (int n = 0; n < size; ++n)
        t.diag[n] = n + refl(n) * spec.delta;
      for (int n = 0; n + 1 < size; ++n) {
        t.super[n] = spec.kappa * (n + 1);
        t.sub[n] =
            (spec.lambda_plus + refl(n) * spec.lambda_minus) / spec.kappa;
      }
      break;
    case DunklModel::rm:
      for (int n = 0; n < size; ++n)
        t.diag[n] = n + refl(n) * spec.delta;
      for (int n = 0; n + 1 < size; ++n) {
        t.super[n] = spec.kappa * (n + 1);
        t.sub[n] = spec.kappa;
      }
      break;
    case DunklModel::two_photon:
      for (int n = 0; n < size; ++n)
        t.diag[n] =
            spec.gamma * n + spec.gamma * (spec.q - 0.25) + refl(n) * spec.delta;
      for (int n = 0; n + 1 < size; ++n) {
        t.super[n] = 2.0 * (n + 1) * (n + 2.0 * spec.q);
        t.sub[n] = 0.5;
      }
      break;
    case DunklModel::two_mode:
      for (int n = 0; n < size; ++n)
        t.diag[n] =
            spec.gamma * n + spec.gamma * (spec.q - 0.5) + refl(n) * spec.delta;
      for (int n = 0; n + 1 < size; ++n) {
        t.super[n] = (n + 1) * (n + 2.0 * spec.q);
        t.sub[n] = 1.0;
      }
      break;
  }
  return t;
}

Polynomial Polynomial::monomial(int degree, double coeff) {
  if (degree < 0) throw Error("monomial degree must be nonnegative");
  std::vector<double> c(degree + 1, 0.0);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = k * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::times_z() const {
  if (c_.empty()) return {};
  std::vector<double> d(c_.size() + 1, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
  std::vector<double> d = c_;
  for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::scaled(double s) const {
  std::vector<double> d = c_;
  for (double& x : d) x *= s;
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> d(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = at(k) + o.at(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(-1.0);
}

Polynomial apply_dunkl(const DunklOperatorSpec& spec, const Polynomial& p) {
  const double s = spec.parity;
  const Polynomial p1 = p.derivative();
  const Polynomial pr = p.reflected();
  switch (spec.model) {
    case DunklModel::grm: {
      // (z + kappa) p' + (lambda_plus/kappa) z p
      //   + s ((lambda_minus/kappa) z + delta) p(-z)
      Polynomial out = p1.times_z() + p1.scaled(spec.kappa) +
                       p.times_z().scaled(spec.lambda_plus / spec.kappa);
      out = out + pr.times_z().scaled(s * spec.lambda_minus / spec.kappa) +
            pr.scaled(s * spec.delta);
      return out;
    }
    case DunklModel::rm: {
      // (z + kappa) p' + kappa z p + s delta p(-z)
      return p1.times_z() + p1.scaled(spec.kappa) +
             p.times_z().scaled(spec.kappa) + pr.scaled(s * spec.delta);
    }
    case DunklModel::two_photon: {
      // 2 z p'' + (4q + gamma z) p' + (z/2 + gamma (q - 1/4)) p
      //   + s delta p(-z)
      const Polynomial p2 = p1.derivative();
      return p2.times_z().scaled(2.0) + p1.scaled(4.0 * spec.q) +
             p1.times_z().scaled(spec.gamma) + p.times_z().scaled(0.5) +
             p.scaled(spec.gamma * (spec.q - 0.25)) + pr.scaled(s * spec.delta);
    }
    case DunklModel::two_mode: {
      // z p'' + (2q + gamma z) p' + (z + gamma (q - 1/2)) p + s delta p(-z)
      const Polynomial p2 = p1.derivative();
      return p2.times_z() + p1.scaled(2.0 * spec.q) +
             p1.times_z().scaled(spec.gamma) + p.times_z() +
             p.scaled(spec.gamma * (spec.q - 0.5)) + pr.scaled(s * spec.delta);
    }
  }
  throw Error("unknown reduced-operator model");
}

}  // namespace drabi
