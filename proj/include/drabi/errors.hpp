#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace drabi {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter set sits on the decoupled k1*k2 = 0 boundary where the
// reflection-operator reduction is undefined; the analytic Jaynes-Cummings
// route applies there instead.
class JcmBoundary : public Error {
 public:
  explicit JcmBoundary(const std::string& what) : Error(what) {}
};

// A 2x2 operator matrix does not satisfy the commutation/anticommutation
// pattern required for spin-subspace diagonalization.
class NotFgForm : public Error {
 public:
  explicit NotFgForm(const std::string& what) : Error(what) {}
};

// A matrix passed as a conjugating transformation fails U * adjoint(U) = 1.
class NonUnitary : public Error {
 public:
  explicit NonUnitary(const std::string& what) : Error(what) {}
};

// The adjoint of a symbolic element with formal (non-numeric) content was
// requested; only elements built from numeric coefficients and the
// reflection generator have a defined adjoint here.
class FormalAdjoint : public Error {
 public:
  explicit FormalAdjoint(const std::string& what) : Error(what) {}
};

// A general (non-symmetrizable) eigenproblem produced eigenvalues with
// imaginary parts beyond tolerance.
class NonRealSpectrum : public Error {
 public:
  explicit NonRealSpectrum(const std::string& what) : Error(what) {}
};

// Truncation doubling hit the cap before the requested eigenvalues settled.
// Carries the best available estimates so callers can emit partial output.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::vector<double> best,
                     std::vector<bool> settled, double last_delta,
                     int n_max_reached)
      : Error(what),
        best_values(std::move(best)),
        level_settled(std::move(settled)),
        last_delta(last_delta),
        n_max_reached(n_max_reached) {}

  std::vector<double> best_values;
  std::vector<bool> level_settled;  // per level: change under last doubling < tol
  double last_delta = 0.0;
  int n_max_reached = 0;
  // Parity labels for best_values when the caller tracked them (parallel
  // vectors, possibly empty).
  std::vector<int> parity;
  std::vector<int> index_within_parity;
};

}  // namespace drabi
