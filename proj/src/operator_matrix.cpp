#include "drabi/operator_matrix.hpp"

#include <sstream>

namespace drabi {

namespace {

int levi_civita(int j, int k, int l) {
  if (j == k || k == l || j == l) return 0;
  // parity of the permutation (j,k,l) of (1,2,3)
  const bool even = (j == 1 && k == 2 && l == 3) ||
                    (j == 2 && k == 3 && l == 1) ||
                    (j == 3 && k == 1 && l == 2);
  return even ? +1 : -1;
}

void require_pauli_index(int j) {
  if (j < 0 || j > 3) throw Error("pauli index must be in 0..3");
}

}  // namespace

PauliProduct pauli_product(int j, int k) {
  require_pauli_index(j);
  require_pauli_index(k);
  if (j == 0) return {ExactCoefficient::one(), k};
  if (k == 0) return {ExactCoefficient::one(), j};
  if (j == k) return {ExactCoefficient::one(), 0};
  const int l = 6 - j - k;  // the remaining index of {1,2,3}
  const int eps = levi_civita(j, k, l);
  ExactCoefficient c = ExactCoefficient::i();
  if (eps < 0) c = -c;
  return {c, l};
}

OperatorMatrix2 OperatorMatrix2::identity() {
  OperatorMatrix2 m;
  m.m_[0][0] = AlgebraElement::one();
  m.m_[1][1] = AlgebraElement::one();
  return m;
}

OperatorMatrix2 OperatorMatrix2::pauli(int j) {
  require_pauli_index(j);
  const AlgebraElement one = AlgebraElement::one();
  const AlgebraElement im = AlgebraElement::scalar(ExactCoefficient::i());
  OperatorMatrix2 m;
  switch (j) {
    case 0:
      m.m_[0][0] = one;
      m.m_[1][1] = one;
      break;
    case 1:
      m.m_[0][1] = one;
      m.m_[1][0] = one;
      break;
    case 2:
      m.m_[0][1] = -im;
      m.m_[1][0] = im;
      break;
    case 3:
      m.m_[0][0] = one;
      m.m_[1][1] = -one;
      break;
  }
  return m;
}

OperatorMatrix2 OperatorMatrix2::from_components(const AlgebraElement& h0,
                                                 const AlgebraElement& h1,
                                                 const AlgebraElement& h2,
                                                 const AlgebraElement& h3) {
  const AlgebraElement ih2 = h2.scaled(ExactCoefficient::i());
  OperatorMatrix2 m;
  m.m_[0][0] = h0 + h3;
  m.m_[0][1] = h1 - ih2;
  m.m_[1][0] = h1 + ih2;
  m.m_[1][1] = h0 - h3;
  return m;
}

OperatorMatrix2 OperatorMatrix2::diagonal(const AlgebraElement& top,
                                          const AlgebraElement& bottom) {
  OperatorMatrix2 m;
  m.m_[0][0] = top;
  m.m_[1][1] = bottom;
  return m;
}

const AlgebraElement& OperatorMatrix2::at(int row, int col) const {
  if (row < 0 || row > 1 || col < 0 || col > 1)
    throw Error("matrix index out of range");
  return m_[row][col];
}

AlgebraElement& OperatorMatrix2::at(int row, int col) {
  if (row < 0 || row > 1 || col < 0 || col > 1)
    throw Error("matrix index out of range");
  return m_[row][col];
}

std::array<AlgebraElement, 4> OperatorMatrix2::components() const {
  const ExactCoefficient half = ExactCoefficient::from_rational(1, 2);
  const ExactCoefficient ihalf = ExactCoefficient::i() * half;
  std::array<AlgebraElement, 4> h;
  h[0] = (m_[0][0] + m_[1][1]).scaled(half);
  h[1] = (m_[0][1] + m_[1][0]).scaled(half);
  h[2] = (m_[0][1] - m_[1][0]).scaled(ihalf);
  h[3] = (m_[0][0] - m_[1][1]).scaled(half);
  return h;
}

bool OperatorMatrix2::is_zero() const {
  for (const auto& row : m_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

bool OperatorMatrix2::is_diagonal() const {
  return m_[0][1].is_zero() && m_[1][0].is_zero();
}

OperatorMatrix2 OperatorMatrix2::operator-() const {
  OperatorMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m_[i][j] = -m_[i][j];
  return r;
}

OperatorMatrix2 OperatorMatrix2::operator+(const OperatorMatrix2& o) const {
  OperatorMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m_[i][j] = m_[i][j] + o.m_[i][j];
  return r;
}

OperatorMatrix2 OperatorMatrix2::operator-(const OperatorMatrix2& o) const {
  return *this + (-o);
}

OperatorMatrix2 OperatorMatrix2::operator*(const OperatorMatrix2& o) const {
  OperatorMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m_[i][j] = m_[i][0] * o.m_[0][j] + m_[i][1] * o.m_[1][j];
  return r;
}

OperatorMatrix2 OperatorMatrix2::scaled(const AlgebraElement& s) const {
  OperatorMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m_[i][j] = s * m_[i][j];
  return r;
}

OperatorMatrix2 OperatorMatrix2::scaled(const ExactCoefficient& c) const {
  return scaled(AlgebraElement::scalar(c));
}

OperatorMatrix2 OperatorMatrix2::adjoint() const {
  OperatorMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m_[i][j] = m_[j][i].adjoint();
  return r;
}

bool OperatorMatrix2::operator==(const OperatorMatrix2& o) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m_[i][j] != o.m_[i][j]) return false;
  return true;
}

std::string OperatorMatrix2::to_string() const {
  std::ostringstream os;
  os << "[[" << m_[0][0].to_string() << ", " << m_[0][1].to_string() << "], ["
     << m_[1][0].to_string() << ", " << m_[1][1].to_string() << "]]";
  return os.str();
}

OperatorMatrix2 operator*(const AlgebraElement& s, const OperatorMatrix2& m) {
  return m.scaled(s);
}

OperatorMatrix2 make_ujkl(int j, int k, int l, bool invert_l) {
  if (j < 1 || j > 3 || k < 1 || k > 3 || l < 1 || l > 3 || j == k || j == l ||
      k == l)
    throw Error("make_ujkl requires {j,k,l} to be a permutation of {1,2,3}");
  const ExactCoefficient half = ExactCoefficient::from_rational(1, 2);
  const AlgebraElement proj_even =
      (AlgebraElement::one() + AlgebraElement::reflection()).scaled(half);
  const AlgebraElement proj_odd =
      (AlgebraElement::one() - AlgebraElement::reflection()).scaled(half);
  const ExactCoefficient ir2 = ExactCoefficient::inv_root2();
  const OperatorMatrix2 swap_part =
      (OperatorMatrix2::pauli(j) + OperatorMatrix2::pauli(k)).scaled(ir2);
  ExactCoefficient phase = ExactCoefficient::i();
  if (invert_l) phase = -phase;
  const OperatorMatrix2 rot_part =
      (OperatorMatrix2::identity() + OperatorMatrix2::pauli(l).scaled(phase))
          .scaled(ir2);
  return swap_part.scaled(proj_even) + rot_part.scaled(proj_odd);
}

OperatorMatrix2 fg_unitary() { return make_ujkl(1, 3, 2, true); }

OperatorMatrix2 fg_unitary_inverse() { return make_ujkl(1, 3, 2, false); }

OperatorMatrix2 conjugate(const OperatorMatrix2& u, const OperatorMatrix2& m) {
  const OperatorMatrix2 ud = u.adjoint();
  const OperatorMatrix2 id = OperatorMatrix2::identity();
  if (!(u * ud == id) || !(ud * u == id))
    throw NonUnitary("conjugating matrix is not unitary: " + u.to_string());
  return u * m * ud;
}

bool check_fg_form(const OperatorMatrix2& m) {
  const auto h = m.components();
  return h[0].commutes_with_reflection() && h[1].commutes_with_reflection() &&
         h[2].anticommutes_with_reflection() &&
         h[3].anticommutes_with_reflection();
}

SpinSubspaceOperators spin_diagonalize(const OperatorMatrix2& m) {
  if (!check_fg_form(m))
    throw NotFgForm(
        "matrix lacks the reflection-symmetry component pattern: " +
        m.to_string());
  const OperatorMatrix2 d = conjugate(fg_unitary(), m);
  if (!d.is_diagonal())
    throw Error("internal: conjugation left off-diagonal residue: " +
                d.to_string());
  return {d.at(0, 0), d.at(1, 1)};
}

OperatorMatrix2 fg_from_diagonal(const OperatorMatrix2& diag) {
  if (!diag.is_diagonal())
    throw Error("fg_from_diagonal requires a diagonal matrix, got: " +
                diag.to_string());
  OperatorMatrix2 r = conjugate(fg_unitary_inverse(), diag);
  if (!check_fg_form(r))
    throw Error("internal: reconstructed matrix fails the symmetry pattern");
  return r;
}

}  // namespace drabi
