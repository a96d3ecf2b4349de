#pragma once

#include <string>
#include <vector>

#include "drabi/operator_matrix.hpp"

namespace drabi {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass; lhs/rhs dump on failure
};

// Runs the exact symbolic verification suite: Pauli algebra, unitarity and
// exchange rules of the projected transformations, the spin-diagonalization
// theorem in both directions, the parity image, and the reduced-operator
// commutators.  All comparisons are exact (zero tolerance).
//
// With corrupt_expectations set, one expected value is deliberately
// sign-flipped so the suite must report at least one failure; this is the
// negative control guarding against a vacuously green checker.
std::vector<IdentityCheck> run_identity_suite(bool corrupt_expectations = false);

}  // namespace drabi
