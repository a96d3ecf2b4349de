#pragma once

#include <string>
#include <vector>

#include "drabi/models.hpp"
#include "drabi/spectra.hpp"

namespace drabi {

// Polar coupling coordinates: k1 = Lambda cos(alpha), k2 = Lambda sin(alpha).
struct CouplingPolar {
  double lambda = 0.0;
  double alpha = 0.0;

  GrmParams to_params(double gamma, double mu) const;
};

// One eigenstate with its conserved-quantity expectations: t1 = <a^dag
// sigma_+>, t2 = <a^dag (sigma_- + sigma_+)>.  Both are real for the model;
// imag_residual records the observed numerical imaginary magnitude after
// deterministic phase fixing, as an honesty check.
struct InvariantPoint {
  int n = 0;        // global level index (ascending energy)
  int parity = 0;   // +1 or -1
  double energy = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double imag_residual = 0.0;
};

struct InvariantPattern {
  std::vector<InvariantPoint> points;
  int n_max_used = 0;
};

// Expectation pattern of the lowest `count` eigenstates at a fixed
// truncation.  Eigenvectors come from a complex Hermitian solve; degenerate
// clusters are parity-rotated and every vector's phase is fixed by making
// its largest-magnitude component real positive.
InvariantPattern invariant_pattern(const GrmParams& p, int count, int n_max);

// Doubles the truncation until the energies settle (same policy as the
// spectra module), then evaluates the pattern at the final size.
InvariantPattern converged_invariant_pattern(const GrmParams& p, int count,
                                             double tol,
                                             int cap = kTruncationCap);

// Pattern evolution along a coupling ray of fixed direction alpha.  Each
// frame is computed independently; a frame whose convergence or solve fails
// is reported with its error instead of aborting the scan.
struct PatternFrame {
  double lambda = 0.0;
  bool ok = false;
  std::string error;
  std::vector<InvariantPoint> points;
  int n_max_used = 0;
};
std::vector<PatternFrame> pattern_motion_scan(double gamma, double mu,
                                              double alpha, double lo,
                                              double hi, int steps, int count,
                                              double tol,
                                              int cap = kTruncationCap);

}  // namespace drabi
