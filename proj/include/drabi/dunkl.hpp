#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "drabi/errors.hpp"

namespace drabi {

// Real tridiagonal matrix, not necessarily symmetric.
//   diag[i]  = M[i][i]
//   super[i] = M[i][i+1]
//   sub[i]   = M[i+1][i]
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> sub;

  int size() const { return static_cast<int>(diag.size()); }
  Eigen::MatrixXd dense() const;
};

// Result of symmetrizing a tridiagonal matrix by a diagonal similarity:
//   M = D S D^{-1},  S symmetric with off-diagonal off[i] = sqrt(sub*super),
//   D = diag(scale).  Scale entries may underflow to zero for large index;
// eigenvalues are unaffected (they come from diag/off only).
struct BalancedTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
  std::vector<double> scale;
};

// Symmetrizes when every product sub[i]*super[i] is nonnegative; returns
// nullopt otherwise (a negative product has no real diagonal similarity).
std::optional<BalancedTridiagonal> balance_to_symmetric(
    const TridiagonalMatrix& m);

// The four reduced-operator families.  Each acts on functions of one
// variable as a first- or second-order differential operator plus a
// reflection term, and restricts to polynomials, where it is tridiagonal in
// the monomial basis.
enum class DunklModel { grm, rm, two_photon, two_mode };

std::string to_string(DunklModel m);

// Reduced operator on one spin subspace (parity = +1 or -1 selects the sign
// of the reflection term).
struct DunklOperatorSpec {
  DunklModel model = DunklModel::rm;
  int parity = +1;
  // grm / rm parameters
  double delta = 0.0;
  double kappa = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  // two_photon / two_mode parameters
  double gamma = 0.0;
  double q = 0.0;
};

// Generalized model:  (z + kappa) d/dz + (lambda_plus/kappa) z
//                     +- ((lambda_minus/kappa) z + delta) Rz,
// where Rz f(z) = f(-z).  Requires kappa > 0.
DunklOperatorSpec grm_dunkl_spec(double delta, double kappa,
                                 double lambda_plus, double lambda_minus,
                                 int parity);

// Symmetric-coupling limit:  (z + kappa) d/dz + kappa z +- delta Rz.
// kappa = 0 is allowed (the operator decouples to a diagonal).
DunklOperatorSpec rm_dunkl_spec(double delta, double kappa, int parity);

// Second-order family:  2 z d^2 + (4q + gamma z) d + z/2 + gamma (q - 1/4)
//                       +- delta Rz.
DunklOperatorSpec two_photon_dunkl_spec(double gamma, double q, double delta,
                                        int parity);

// Second-order family:  z d^2 + (2q + gamma z) d + z + gamma (q - 1/2)
//                       +- delta Rz.
DunklOperatorSpec two_mode_dunkl_spec(double gamma, double q, double delta,
                                      int parity);

// Matrix of the reduced operator on span{z^0 .. z^n_max}: column n holds the
// monomial coefficients of the operator applied to z^n.
TridiagonalMatrix build_ttrr(const DunklOperatorSpec& spec, int n_max);

// Dense polynomial with real coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeff) : c_(std::move(coeff)) {
    trim();
  }
  static Polynomial monomial(int degree, double coeff = 1.0);

  const std::vector<double>& coeff() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  double at(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0.0;
  }

  Polynomial derivative() const;
  Polynomial times_z() const;
  Polynomial reflected() const;  // p(-z)
  Polynomial scaled(double s) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;

 private:
  void trim();
  std::vector<double> c_;
};

// Direct action of the reduced operator on a polynomial, computed through
// differentiation/reflection rather than through the matrix.  Serves as the
// independent cross-check of build_ttrr.
Polynomial apply_dunkl(const DunklOperatorSpec& spec, const Polynomial& p);

}  // namespace drabi
