#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "drabi/dunkl.hpp"
#include "drabi/errors.hpp"

namespace drabi {

// Two-level system coupled to one bosonic mode with independent rotating and
// counter-rotating strengths:
//   H = gamma a^dag a + mu sigma_3 + k1 (a^dag sigma_- + a sigma_+)
//     + k2 (a^dag sigma_+ + a sigma_-).
struct GrmParams {
  double gamma = 1.0;
  double mu = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
};

// Reduced-operator parameters in units of gamma.
struct DerivedGrm {
  double delta = 0.0;         // mu / gamma
  double lambda_plus = 0.0;   // (k1^2 + k2^2) / (2 gamma^2)
  double lambda_minus = 0.0;  // (k1^2 - k2^2) / (2 gamma^2)
  double kappa = 0.0;         // sqrt(k1 k2) / gamma
  double w = 0.0;             // (k2 / k1)^{1/4}, asymmetry weight
};

// Throws JcmBoundary when k1*k2 = 0 (the reduction is undefined there; the
// decoupled model has its own analytic route) and Error for k1*k2 < 0 or
// gamma <= 0.
DerivedGrm derive_grm(const GrmParams& p);

// su(1,1)-ladder models: H = gamma (K0 - c) + delta sigma_1 + sigma_3 (Kp + Km)
// on the discrete-series representation with label q:
//   K0|m> = (m+q)|m>,  Kp|m> = sqrt((m+1)(m+2q))|m+1>.
// two_photon: q in {1/4, 3/4}, c = 1/4.  two_mode: 2q a positive integer,
// c = 1/2.
enum class Su11Model { two_photon, two_mode };

struct Su11Params {
  Su11Model model = Su11Model::two_photon;
  double gamma = 3.0;
  double q = 0.25;
  double delta = 0.0;
};

// Casimir-normalization constant for the model.
double su11_constant(Su11Model model);

// Validates q against the admissible representation labels; throws Error.
void validate_su11(const Su11Params& p);

// True when the discrete spectrum is expected to collapse (two_photon with
// gamma <= 2): truncated eigenvalues will not settle under refinement.
bool collapse_risk(const Su11Params& p);

// Dense truncated matrix with its basis convention.  All builders here
// produce real matrices; basis strings:
//   "fock-spin-interleaved": index 2n+s, s=0 spin-up, boson level n
//   "spin-blocked":          index s*(n_max+1)+m, s=0 first component
struct TruncatedHamiltonian {
  Eigen::MatrixXd matrix;
  int n_max = 0;
  std::string basis;
  std::string note;  // advisory (e.g. collapse warning); never a side effect
};

// Full model in the interleaved boson/spin product basis (exactly symmetric
// by construction).  The decoupled boundary k1*k2 = 0 is allowed here.
TruncatedHamiltonian build_grm_full(const GrmParams& p, int n_max);

// The same operator conjugated to spin-block form, in units of gamma: two
// (n_max+1)-blocks coupled only through the off-diagonal reflection content.
// Non-symmetric for k1 != k2 (real spectrum guaranteed by similarity).
// Throws JcmBoundary via derive_grm on the decoupled boundary.
TruncatedHamiltonian build_grm_fg_full(const GrmParams& p, int n_max);

// Ladder-model Hamiltonian in spin-block form (real symmetric).
TruncatedHamiltonian build_su11_full(const Su11Params& p, int n_max);

// Parity assignment for eigenvectors of the interleaved full model under
// exp(i pi a^dag a) sigma_3.  Degenerate clusters (eigenvalue gap < 1e-9 in
// sequence) are rotated so each member is a parity eigenvector; V is updated
// in place.  mixed flags any vector whose final |expectation| < 1 - 1e-6.
struct ParityAssignment {
  std::vector<int> sign;
  std::vector<bool> mixed;
};
ParityAssignment assign_parity(Eigen::MatrixXd& vectors,
                               const Eigen::VectorXd& values, int n_max);
ParityAssignment assign_parity(Eigen::MatrixXcd& vectors,
                               const Eigen::VectorXd& values, int n_max);

// Binary snapshot of a truncated Hamiltonian (magic "DRABI1", little-endian
// doubles, row-major).  load validates the magic and dimensions.
void dump_hamiltonian(const TruncatedHamiltonian& h, const std::string& path);
TruncatedHamiltonian load_hamiltonian(const std::string& path);

}  // namespace drabi
