#pragma once

#include <array>

#include "drabi/algebra.hpp"

namespace drabi {

// Product of two Pauli matrices: sigma_j sigma_k = coeff * sigma_index.
struct PauliProduct {
  ExactCoefficient coeff;
  int index = 0;
};

// Multiplication table of {sigma_0..sigma_3}; throws Error for indices
// outside 0..3.
PauliProduct pauli_product(int j, int k);

// 2x2 matrix with entries in the graded operator algebra.  Spin structure
// (the Pauli factors) is explicit in the matrix layout; the algebra entries
// carry everything that commutes with spin, plus the reflection R.
class OperatorMatrix2 {
 public:
  OperatorMatrix2() = default;

  static OperatorMatrix2 zero() { return {}; }
  static OperatorMatrix2 identity();
  static OperatorMatrix2 pauli(int j);  // sigma_j, j in 0..3
  // h0*sigma_0 + h1*sigma_1 + h2*sigma_2 + h3*sigma_3
  static OperatorMatrix2 from_components(const AlgebraElement& h0,
                                         const AlgebraElement& h1,
                                         const AlgebraElement& h2,
                                         const AlgebraElement& h3);
  static OperatorMatrix2 diagonal(const AlgebraElement& top,
                                  const AlgebraElement& bottom);

  const AlgebraElement& at(int row, int col) const;
  AlgebraElement& at(int row, int col);

  // Pauli components (h0, h1, h2, h3) recovered from the entries.
  std::array<AlgebraElement, 4> components() const;

  bool is_zero() const;
  bool is_diagonal() const;

  OperatorMatrix2 operator-() const;
  OperatorMatrix2 operator+(const OperatorMatrix2& o) const;
  OperatorMatrix2 operator-(const OperatorMatrix2& o) const;
  OperatorMatrix2 operator*(const OperatorMatrix2& o) const;

  // Left multiplication by a spin-scalar algebra element (embedded as s*1).
  OperatorMatrix2 scaled(const AlgebraElement& s) const;
  OperatorMatrix2 scaled(const ExactCoefficient& c) const;

  // Entry-wise adjoint + transpose; entries must be numeric (see
  // AlgebraElement::adjoint).
  OperatorMatrix2 adjoint() const;

  bool operator==(const OperatorMatrix2& o) const;
  bool operator!=(const OperatorMatrix2& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::array<std::array<AlgebraElement, 2>, 2> m_{};
};

OperatorMatrix2 operator*(const AlgebraElement& s, const OperatorMatrix2& m);

// Unitary that swaps sigma_j and sigma_k on the even-reflection subspace and
// acts as (1 +- i sigma_l)/sqrt(2) on the odd one:
//   U = (1+R)/2 * (sigma_j + sigma_k)/sqrt(2) + (1-R)/2 * (1 + s*i*sigma_l)/sqrt(2),
// s = -1 when invert_l is set.  Requires {j,k,l} == {1,2,3}.
OperatorMatrix2 make_ujkl(int j, int k, int l, bool invert_l);

// The transformation that carries a reflection-symmetric Hamiltonian to
// spin-diagonal form, and its inverse.
OperatorMatrix2 fg_unitary();          // make_ujkl(1, 3, 2, true)
OperatorMatrix2 fg_unitary_inverse();  // make_ujkl(1, 3, 2, false)

// U m U^dagger.  Verifies exactly that u is unitary (throws NonUnitary).
OperatorMatrix2 conjugate(const OperatorMatrix2& u, const OperatorMatrix2& m);

// True when the Pauli components satisfy the reflection-symmetry pattern:
// h0, h1 commute with R; h2, h3 anticommute.
bool check_fg_form(const OperatorMatrix2& m);

// The two spin-subspace operators of a reflection-symmetric Hamiltonian.
struct SpinSubspaceOperators {
  AlgebraElement plus;   // h0 + h3 + (h1 - i h2) R
  AlgebraElement minus;  // h0 + h3 - (h1 - i h2) R
};

// Conjugates a reflection-symmetric matrix to diagonal form and returns the
// subspace operators.  Throws NotFgForm when check_fg_form fails.
SpinSubspaceOperators spin_diagonalize(const OperatorMatrix2& m);

// Inverse direction: given diag(d_plus, d_minus), build the equivalent
// reflection-symmetric matrix by conjugating with the inverse transformation.
// Throws Error when the input is not diagonal.
OperatorMatrix2 fg_from_diagonal(const OperatorMatrix2& diag);

}  // namespace drabi
