#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "drabi/rational.hpp"

namespace drabi {

// Parity of a formal symbol under conjugation by the reflection generator R:
//   even:  R X R = X     (commutes)
//   odd:   R Y R = -Y    (anticommutes)
enum class ReflectionParity { even, odd };

// A formal generator of the operator algebra.  A given name must be used
// with a single parity within any one computation.
struct GradedSymbol {
  std::string name;
  ReflectionParity parity = ReflectionParity::even;

  bool operator==(const GradedSymbol& o) const {
    return name == o.name && parity == o.parity;
  }
  bool operator<(const GradedSymbol& o) const {
    if (name != o.name) return name < o.name;
    return static_cast<int>(parity) < static_cast<int>(o.parity);
  }
};

using Word = std::vector<GradedSymbol>;

// Number of odd symbols in a word, mod 2 (0 = commutes with R, 1 = anti).
int word_parity(const Word& w);

// Element of the free associative algebra over the exact coefficient field,
// generated by graded symbols and the reflection R, with relations
//   R^2 = 1,    R x = x R   (x even),    R y = -y R   (y odd).
// Normal form: every term is  coeff * symbol-word * R^r  with r in {0,1},
// i.e. all R factors are commuted to the right and absorbed.  Equality of
// elements is exact equality of normal forms.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }
  static AlgebraElement one() { return scalar(ExactCoefficient::one()); }
  static AlgebraElement scalar(const ExactCoefficient& c);
  static AlgebraElement reflection();  // the generator R
  static AlgebraElement symbol(const std::string& name, ReflectionParity p);
  static AlgebraElement term(const ExactCoefficient& c, const Word& w,
                             int r_power);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(const ExactCoefficient& c) const;

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // R * (*this) * R : flips the sign of odd-parity terms.
  AlgebraElement reflected() const;

  // True when every term's symbol word has even (resp. odd) parity, so the
  // element commutes (resp. anticommutes) with R.  Explicit R factors in a
  // term are irrelevant to either test.  Zero satisfies both.
  bool commutes_with_reflection() const;
  bool anticommutes_with_reflection() const;

  // True if any term carries an explicit R factor.
  bool has_reflection_factor() const;

  // Split into (even part, odd part) under conjugation by R:
  //   even = (h + R h R)/2,   odd = (h - R h R)/2.
  // Throws Error if the element carries explicit R factors, which have no
  // place in the inputs this decomposition is meant for.
  std::pair<AlgebraElement, AlgebraElement> grade_split() const;

  // Hermitian adjoint, defined only for numeric elements (empty symbol
  // words): conjugate the coefficient, keep R (R is self-adjoint).
  // Throws FormalAdjoint if any term has a non-empty symbol word.
  AlgebraElement adjoint() const;

  std::string to_string() const;

  // Iteration over normal-form terms in deterministic (sorted) order.
  struct Term {
    Word word;
    int r_power = 0;  // 0 or 1
    bool operator==(const Term& o) const {
      return r_power == o.r_power && word == o.word;
    }
    bool operator<(const Term& o) const {
      if (word != o.word) return word < o.word;
      return r_power < o.r_power;
    }
  };
  const std::map<Term, ExactCoefficient>& terms() const { return terms_; }

 private:
  void add_term(const Term& t, const ExactCoefficient& c);
  std::map<Term, ExactCoefficient> terms_;
};

AlgebraElement operator*(const ExactCoefficient& c, const AlgebraElement& e);

}  // namespace drabi
