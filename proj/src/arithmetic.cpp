#include "bv/arithmetic.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace bv {

namespace {

using I128 = __int128;

long long checked_narrow(I128 v) {
  if (v > I128(INT64_MAX) || v < I128(INT64_MIN))
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

Rational make_reduced(I128 num, I128 den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  I128 a = num < 0 ? -num : num;
  I128 b = den;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  Rational r;
  r.num = checked_narrow(num / a);
  r.den = checked_narrow(den / a);
  return r;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make_reduced(n, d); }

Rational operator-(const Rational& a) { return make_reduced(-I128(a.num), a.den); }

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(I128(a.num) * b.den + I128(b.num) * a.den,
                      I128(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(I128(a.num) * b.num, I128(a.den) * b.den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  I128 lhs = I128(a.num) * b.den;
  I128 rhs = I128(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& a) { return a.num < 0 ? -a : a; }

std::string Rational::str() const {
  std::string s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t slash = s.find('/');
  size_t pos = 0;
  long long n = 0, d = 1;
  try {
    n = std::stoll(s.substr(0, slash), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + s);
  }
  if (pos != (slash == std::string::npos ? s.size() : slash))
    throw std::invalid_argument("bad rational: " + s);
  if (slash != std::string::npos) {
    try {
      d = std::stoll(s.substr(slash + 1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational: " + s);
    }
    if (pos != s.size() - slash - 1 || d <= 0)
      throw std::invalid_argument("bad rational: " + s);
  }
  return Rational(n, d);
}

Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }

Gaussian operator+(const Gaussian& a, const Gaussian& b) {
  return {a.re + b.re, a.im + b.im};
}

Gaussian operator-(const Gaussian& a, const Gaussian& b) {
  return {a.re - b.re, a.im - b.im};
}

std::strong_ordering operator<=>(const Gaussian& a, const Gaussian& b) {
  auto c = a.re <=> b.re;
  if (c != std::strong_ordering::equal) return c;
  return a.im <=> b.im;
}

std::string Gaussian::str() const {
  if (im.is_zero()) return re.str();
  std::string s = re.str();
  s += (im.num < 0) ? "-" : "+";
  s += abs(im).str();
  s += " i";
  return s;
}

Gaussian Gaussian::parse(const std::string& s) {
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, " i") == 0) {
    std::string body = s.substr(0, s.size() - 2);
    // Split at the sign separating the real and imaginary components; both
    // components are plain rationals, so only a leading '-' can precede it.
    size_t split = std::string::npos;
    for (size_t i = 1; i < body.size(); ++i) {
      if (body[i] == '+' || body[i] == '-') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos)
      throw std::invalid_argument("bad gaussian: " + s);
    Rational re = Rational::parse(body.substr(0, split));
    Rational im = Rational::parse(body.substr(body[split] == '+' ? split + 1 : split));
    return {re, im};
  }
  return {Rational::parse(s), Rational(0)};
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }
std::ostream& operator<<(std::ostream& os, const Gaussian& a) { return os << a.str(); }

}  // namespace bv
