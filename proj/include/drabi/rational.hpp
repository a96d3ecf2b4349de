#pragma once

#include <cstdint>
#include <string>

#include "drabi/errors.hpp"

namespace drabi {

// Exact rational number with 64-bit numerator/denominator.  Intermediate
// products are taken in 128-bit arithmetic and reduced before narrowing; if
// the reduced value still does not fit, an Error is thrown rather than
// silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den);
  Rational(long long num) : Rational(num, 1) {}  // NOLINT: implicit by design

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational reciprocal() const;

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  double to_double() const;
  std::string to_string() const;

 private:
  static Rational make(__int128 num, __int128 den);
  long long num_ = 0;
  long long den_ = 1;
};

// Gaussian rational a + b*i with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational conj() const { return {re, -im}; }

  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string to_string() const;
};

// Exact scalar of the form  a + b/sqrt(2)  with Gaussian-rational a, b.
// This field is closed under the arithmetic generated by rationals, i, and
// 1/sqrt(2), which is everything the projected unitaries
// (sigma_j + sigma_k)/sqrt(2) and (1 +- i*sigma_l)/sqrt(2) produce.
class ExactCoefficient {
 public:
  ExactCoefficient() = default;
  explicit ExactCoefficient(GaussianRational whole)
      : whole_(whole) {}
  ExactCoefficient(GaussianRational whole, GaussianRational root_half)
      : whole_(whole), root_half_(root_half) {}

  static ExactCoefficient zero() { return {}; }
  static ExactCoefficient one() { return from_rational(1); }
  static ExactCoefficient i() {
    return ExactCoefficient{GaussianRational{0, 1}};
  }
  static ExactCoefficient from_rational(Rational r) {
    return ExactCoefficient{GaussianRational{r, 0}};
  }
  static ExactCoefficient from_rational(long long num, long long den = 1) {
    return from_rational(Rational(num, den));
  }
  // 1/sqrt(2)
  static ExactCoefficient inv_root2() {
    return ExactCoefficient{GaussianRational{0, 0}, GaussianRational{1, 0}};
  }

  const GaussianRational& whole() const { return whole_; }
  const GaussianRational& root_half() const { return root_half_; }

  bool is_zero() const { return whole_.is_zero() && root_half_.is_zero(); }
  bool is_real() const { return whole_.is_real() && root_half_.is_real(); }

  ExactCoefficient operator-() const { return {-whole_, -root_half_}; }
  ExactCoefficient operator+(const ExactCoefficient& o) const {
    return {whole_ + o.whole_, root_half_ + o.root_half_};
  }
  ExactCoefficient operator-(const ExactCoefficient& o) const {
    return {whole_ - o.whole_, root_half_ - o.root_half_};
  }
  // (a1 + b1/s)(a2 + b2/s) = (a1 a2 + b1 b2 / 2) + (a1 b2 + b1 a2)/s,  s = sqrt(2)
  ExactCoefficient operator*(const ExactCoefficient& o) const {
    const GaussianRational half{Rational(1, 2), 0};
    return {whole_ * o.whole_ + root_half_ * o.root_half_ * half,
            whole_ * o.root_half_ + root_half_ * o.whole_};
  }
  ExactCoefficient conj() const { return {whole_.conj(), root_half_.conj()}; }
  ExactCoefficient half() const {
    const ExactCoefficient h = from_rational(1, 2);
    return *this * h;
  }

  bool operator==(const ExactCoefficient& o) const {
    return whole_ == o.whole_ && root_half_ == o.root_half_;
  }
  bool operator!=(const ExactCoefficient& o) const { return !(*this == o); }

  double to_double() const;
  std::string to_string() const;

 private:
  GaussianRational whole_{};      // coefficient of (sqrt 2)^0
  GaussianRational root_half_{};  // coefficient of (sqrt 2)^-1
};

}  // namespace drabi
