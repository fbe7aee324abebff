#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace bv {

// Exact rational with machine-word components. Always reduced, den > 0.
// All arithmetic goes through 128-bit intermediates and throws
// std::overflow_error instead of wrapping.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d);

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  // Canonical text form: "p" when integral, otherwise "p/q".
  std::string str() const;
  static Rational parse(const std::string& s);

  friend Rational operator-(const Rational& a);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

Rational abs(const Rational& a);

// Gaussian rational a = re + im*i. Ordering is lexicographic (re, im); it is
// used only for canonical forms, never for analytic comparisons.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(r) {}
  Gaussian(long long r) : re(r) {}
  Gaussian(Rational r, Rational i) : re(r), im(i) {}

  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  // "p/q" for real values, "p/q+r/s i" or "p/q-r/s i" otherwise.
  std::string str() const;
  static Gaussian parse(const std::string& s);

  friend Gaussian operator-(const Gaussian& a);
  friend Gaussian operator+(const Gaussian& a, const Gaussian& b);
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b);
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::strong_ordering operator<=>(const Gaussian& a, const Gaussian& b);
};

std::ostream& operator<<(std::ostream& os, const Rational& a);
std::ostream& operator<<(std::ostream& os, const Gaussian& a);

}  // namespace bv
