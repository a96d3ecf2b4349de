#include "drabi/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace drabi {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kInt64Max = __int128(INT64_MAX);

}  // namespace

Rational Rational::make(__int128 num, __int128 den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  const __int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  __int128 mag = num < 0 ? -num : num;
  if (mag > kInt64Max || den > kInt64Max)
    throw Error("exact rational overflow (value exceeds 64-bit range)");
  Rational r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Rational::Rational(long long num, long long den) {
  *this = make(__int128(num), __int128(den));
}

Rational Rational::operator-() const { return make(-__int128(num_), den_); }

Rational Rational::operator+(const Rational& o) const {
  return make(__int128(num_) * o.den_ + __int128(o.num_) * den_,
              __int128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return make(__int128(num_) * o.num_, __int128(den_) * o.den_);
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error("reciprocal of zero rational");
  return make(__int128(den_), __int128(num_));
}

bool Rational::operator<(const Rational& o) const {
  return __int128(num_) * o.den_ < __int128(o.num_) * den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  if (im.is_zero()) return re.to_string();
  std::string imag = im == Rational(1)    ? "i"
                     : im == Rational(-1) ? "-i"
                                          : im.to_string() + "i";
  if (re.is_zero()) return imag;
  return re.to_string() + (im.is_negative() ? "" : "+") + imag;
}

double ExactCoefficient::to_double() const {
  if (!is_real()) throw Error("to_double on coefficient with imaginary part");
  return whole_.re.to_double() + root_half_.re.to_double() / std::sqrt(2.0);
}

std::string ExactCoefficient::to_string() const {
  if (is_zero()) return "0";
  const std::string a = whole_.to_string();
  if (root_half_.is_zero()) return a;
  std::string b = root_half_.to_string();
  if (b.find('+') != std::string::npos ||
      b.find('-', 1) != std::string::npos || b == "-i")
    b = "(" + b + ")";
  b += "/sqrt2";
  if (whole_.is_zero()) return b;
  return a + " + " + b;
}

int word_parity(const Word& w) {
  int p = 0;
  for (const auto& s : w)
    if (s.parity == ReflectionParity::odd) p ^= 1;
  return p;
}

AlgebraElement AlgebraElement::scalar(const ExactCoefficient& c) {
  return term(c, {}, 0);
}

AlgebraElement AlgebraElement::reflection() {
  return term(ExactCoefficient::one(), {}, 1);
}

AlgebraElement AlgebraElement::symbol(const std::string& name,
                                      ReflectionParity p) {
  return term(ExactCoefficient::one(), {GradedSymbol{name, p}}, 0);
}

AlgebraElement AlgebraElement::term(const ExactCoefficient& c, const Word& w,
                                    int r_power) {
  AlgebraElement e;
  e.add_term(Term{w, ((r_power % 2) + 2) % 2}, c);
  return e;
}

void AlgebraElement::add_term(const Term& t, const ExactCoefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r;
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + (-o);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  AlgebraElement r;
  for (const auto& [t1, c1] : terms_) {
    for (const auto& [t2, c2] : o.terms_) {
      // Commute the left factor's R past the right factor's word:
      //   R w = (-1)^parity(w) w R.
      const bool flip = t1.r_power == 1 && word_parity(t2.word) == 1;
      Term t;
      t.word = t1.word;
      t.word.insert(t.word.end(), t2.word.begin(), t2.word.end());
      t.r_power = t1.r_power ^ t2.r_power;
      ExactCoefficient c = c1 * c2;
      r.add_term(t, flip ? -c : c);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::scaled(const ExactCoefficient& c) const {
  AlgebraElement r;
  for (const auto& [t, tc] : terms_) r.add_term(t, c * tc);
  return r;
}

AlgebraElement operator*(const ExactCoefficient& c, const AlgebraElement& e) {
  return e.scaled(c);
}

AlgebraElement AlgebraElement::reflected() const {
  AlgebraElement r;
  for (const auto& [t, c] : terms_)
    r.add_term(t, word_parity(t.word) == 1 ? -c : c);
  return r;
}

bool AlgebraElement::commutes_with_reflection() const {
  for (const auto& [t, c] : terms_)
    if (word_parity(t.word) == 1) return false;
  return true;
}

bool AlgebraElement::anticommutes_with_reflection() const {
  for (const auto& [t, c] : terms_)
    if (word_parity(t.word) == 0) return false;
  return true;
}

bool AlgebraElement::has_reflection_factor() const {
  for (const auto& [t, c] : terms_)
    if (t.r_power == 1) return true;
  return false;
}

std::pair<AlgebraElement, AlgebraElement> AlgebraElement::grade_split() const {
  if (has_reflection_factor())
    throw Error(
        "grade_split requires an element free of explicit reflection factors");
  AlgebraElement even, odd;
  for (const auto& [t, c] : terms_) {
    if (word_parity(t.word) == 0)
      even.add_term(t, c);
    else
      odd.add_term(t, c);
  }
  return {even, odd};
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement r;
  for (const auto& [t, c] : terms_) {
    if (!t.word.empty())
      throw FormalAdjoint(
          "adjoint is defined only for numeric elements; term has formal "
          "symbols: " +
          to_string());
    r.add_term(t, c.conj());
  }
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    const bool unit = cs == "1" && !(t.word.empty() && t.r_power == 0);
    if (!unit) {
      if (cs.find(' ') != std::string::npos || (cs.find('+') != std::string::npos) ||
          cs.find('-', 1) != std::string::npos)
        cs = "(" + cs + ")";
      os << cs;
    }
    bool dot = !unit;
    for (const auto& s : t.word) {
      if (dot) os << "*";
      os << s.name;
      dot = true;
    }
    if (t.r_power == 1) {
      if (dot) os << "*";
      os << "R";
    }
  }
  return os.str();
}

}  // namespace drabi
