#pragma once

#include <functional>
#include <string>
#include <vector>

#include "drabi/dunkl.hpp"
#include "drabi/models.hpp"

namespace drabi {

// Truncation policy for the doubling loop.
inline constexpr int kTruncationFloor = 64;
inline constexpr int kTruncationCap = 16384;
inline constexpr double kDefaultTol = 1e-10;

// Eigenvalues of a tridiagonal matrix, ascending.  Uses the symmetric
// tridiagonal solver after diagonal balancing; falls back to a dense general
// solver when no real balancing exists, in which case eigenvalues whose
// imaginary part exceeds 1e-8 raise NonRealSpectrum.
std::vector<double> eig_tridiagonal(const TridiagonalMatrix& m);

// Dense general-eigenproblem route, regardless of balanceability.  Same
// realness guard.  Exists as the independent cross-check of the fast path.
std::vector<double> eig_tridiagonal_general(const TridiagonalMatrix& m);

// Eigenvalues and eigenvectors in the original (monomial) coordinates.
// Requires balanceability; vector k is column k, normalized to unit maximum
// magnitude.  High-order components may underflow to zero; eigenvalues are
// unaffected.
struct TridiagonalEigen {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
};
TridiagonalEigen eig_tridiagonal_vectors(const TridiagonalMatrix& m);

// Lowest `count` eigenvalues of a size-indexed family, refined by doubling
// n_max from the floor until successive sweeps agree within tol, then
// reported at the final size.  Throws ConvergenceFailure (carrying best
// estimates) when the cap is hit first.
struct ConvergedLevels {
  std::vector<double> values;
  std::vector<bool> settled;
  int n_max_used = 0;
  double last_delta = 0.0;
};
ConvergedLevels converge_eigenvalues(
    const std::function<std::vector<double>(int)>& eigenvalues_at_n_max,
    int count, double tol, int cap = kTruncationCap);

// One energy level with its reflection-parity label.
struct SpectrumLevel {
  double energy = 0.0;
  int parity = 0;               // +1 or -1
  int index_within_parity = 0;  // ascending within the parity class
  bool converged = false;
};

// Parity-resolved spectrum, ascending in energy (ties broken toward +1).
struct Spectrum {
  std::vector<SpectrumLevel> levels;
  int n_max_used = 0;
  double tol = 0.0;
  std::string note;
};

// Merges per-parity level sets into a Spectrum.  parity_filter: 0 keeps
// both classes, +1/-1 restricts to one.
Spectrum parity_spectrum(
    const std::function<TridiagonalMatrix(int parity, int n_max)>& build,
    int count, double tol, int cap, double energy_scale, int parity_filter);

// Spectrum of the generalized model.  Interior couplings go through the
// reduced-operator blocks (energies scaled back by gamma); the decoupled
// boundary k1*k2 = 0 goes through the dense full model with parity
// assignment and a note in the result.
Spectrum grm_spectrum(const GrmParams& p, int count, double tol,
                      int cap = kTruncationCap, int parity_filter = 0);

// Spectrum of a ladder model via its reduced-operator blocks.
Spectrum su11_spectrum(const Su11Params& p, int count, double tol,
                       int cap = kTruncationCap, int parity_filter = 0);

// Exact levels of the decoupled model (k2 = 0): the isolated -mu level plus
// the two-dimensional block closed forms
//   gamma(n + 1/2) +- sqrt((mu - gamma/2)^2 + k1^2 (n+1)).
// Requires k2 = 0 (throws Error otherwise); returns the lowest `count`.
std::vector<double> jcm_analytic(const GrmParams& p, int count);

// Exact levels {m - kappa^2 +- delta} of the symmetric-coupling reduced
// operator with the reflection replaced by a scalar; lowest `count` of the
// union of both signs.
std::vector<double> solvable_no_reflection(double delta, double kappa,
                                           int count);

// A one-parameter family of spectra for crossing scans.
struct SpectrumFamily {
  std::string parameter_name;
  std::function<Spectrum(double)> at;
  // False at parameter values where some parity block decouples exactly
  // (zero off-diagonals): equal-parity degeneracies there are structural,
  // not level crossings, and are excluded from gap tracking.
  std::function<bool(double)> coupled;
};

SpectrumFamily rm_kappa_family(double delta, int count, double tol,
                               int cap = kTruncationCap);
SpectrumFamily grm_coupling_family(double gamma, double mu, double alpha,
                                   int count, double tol,
                                   int cap = kTruncationCap);
SpectrumFamily su11_gamma_family(Su11Model model, double q, double delta,
                                 int count, double tol,
                                 int cap = kTruncationCap);

// A detected level degeneracy or near-degeneracy along a sweep.
struct CrossingEvent {
  double parameter = 0.0;  // location (refined for true crossings)
  int parity_a = 0;
  int index_a = 0;
  int parity_b = 0;
  int index_b = 0;
  double min_gap = 0.0;
  bool true_crossing = false;  // false: avoided (minimum gap stayed open)
};

// Scans [lo, hi] on an inclusive grid of `steps` intervals.  Opposite-parity
// order inversions between neighbouring grid points are bisected to
// param_tol and reported as true crossings; equal-parity neighbour gaps are
// tracked by label and reported with their grid minimum (a true crossing
// only if the gap closes below gap_tol, which the symmetry forbids for
// coupled blocks).  A zero-length range or steps = 0 yields no events.
std::vector<CrossingEvent> crossing_scan(const SpectrumFamily& family,
                                         double lo, double hi, int steps,
                                         double param_tol = 1e-9,
                                         double gap_tol = 1e-8);

}  // namespace drabi
