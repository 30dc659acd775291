#include "zeroscope/xnum.hpp"

#include <limits>
#include <stdexcept>

namespace zeroscope::xnum {

namespace {

constexpr long double kLn2L = 0.69314718055994530941723212145817657L;

// Swamping threshold for addition: one double mantissa of precision.
constexpr xexp kAlignCutoff = 54;

}  // namespace

bool xexp_fits_int64(xexp e) {
  return e >= static_cast<xexp>(INT64_MIN) && e <= static_cast<xexp>(INT64_MAX);
}

std::string xexp_to_string(xexp e) {
  if (e == 0) return "0";
  bool neg = e < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(e + 1)) + 1
                            : static_cast<unsigned __int128>(e);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

xexp xexp_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("xexp_from_string: empty string");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = (s[0] == '-');
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("xexp_from_string: no digits");
  xexp v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("xexp_from_string: bad digit");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

void ExtScalar::normalize() {
  if (m == 0.0) {
    m = 0.0;  // clears a possible -0
    e = 0;
    return;
  }
  if (!std::isfinite(m)) throw std::invalid_argument("ExtScalar: non-finite mantissa");
  int k = 0;
  double f = std::frexp(m, &k);  // |f| in [0.5, 1)
  m = 2.0 * f;                   // |m| in [1, 2)
  e += k - 1;
}

ExtScalar ExtScalar::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("ExtScalar::from_double: non-finite value");
  ExtScalar r;
  r.m = x;
  r.e = 0;
  r.normalize();
  return r;
}

ExtScalar ExtScalar::from_ln(double natural_log, int sign) {
  if (!std::isfinite(natural_log))
    throw std::invalid_argument("ExtScalar::from_ln: non-finite log");
  long double t = std::floor(static_cast<long double>(natural_log) / kLn2L);
  xexp e2 = static_cast<xexp>(t);
  long double rem = static_cast<long double>(natural_log) - t * kLn2L;
  // Beyond ~1e19 the subtraction above loses the residual; clamp and let
  // the exponent carry the value (log_abs stays relatively accurate).
  if (rem < 0.0L) rem = 0.0L;
  if (rem >= kLn2L) rem = kLn2L;
  double mant = static_cast<double>(std::exp(rem));
  if (mant < 1.0) mant = 1.0;
  if (mant >= 2.0) mant = std::nextafter(2.0, 1.0);
  ExtScalar r;
  r.m = sign < 0 ? -mant : mant;
  r.e = e2;
  r.normalize();
  return r;
}

double ExtScalar::log_abs() const {
  if (is_zero()) throw std::domain_error("ExtScalar::log_abs: log of zero");
  long double le = static_cast<long double>(e);
  return static_cast<double>(le * kLn2L + std::log(std::fabs(static_cast<long double>(m))));
}

double ExtScalar::log2_abs() const {
  if (is_zero()) throw std::domain_error("ExtScalar::log2_abs: log of zero");
  return static_cast<double>(static_cast<long double>(e) +
                             std::log2(std::fabs(static_cast<long double>(m))));
}

double ExtScalar::to_double() const {
  if (is_zero()) return 0.0;
  if (e > 1100) return m > 0 ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity();
  if (e < -1130) return m > 0 ? 0.0 : -0.0;
  return std::ldexp(m, static_cast<int>(e));
}

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExtScalar();
  ExtScalar r;
  r.m = a.m * b.m;  // |r.m| in [1,4)
  r.e = a.e + b.e;
  if (std::fabs(r.m) >= 2.0) {
    r.m *= 0.5;
    r.e += 1;
  }
  return r;
}

ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) {
  if (b.is_zero()) throw std::domain_error("ExtScalar: division by zero");
  if (a.is_zero()) return ExtScalar();
  ExtScalar r;
  r.m = a.m / b.m;  // |r.m| in (0.5, 2)
  r.e = a.e - b.e;
  if (std::fabs(r.m) < 1.0) {
    r.m *= 2.0;
    r.e -= 1;
  }
  return r;
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  xexp d = a.e - b.e;
  if (d >= kAlignCutoff) return a;
  if (d <= -kAlignCutoff) return b;
  // Align to the larger exponent; ldexp by |d| <= 53 is exact.
  ExtScalar r;
  if (d >= 0) {
    r.m = a.m + std::ldexp(b.m, -static_cast<int>(d));
    r.e = a.e;
  } else {
    r.m = b.m + std::ldexp(a.m, static_cast<int>(d));
    r.e = b.e;
  }
  r.normalize();
  return r;
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }

bool abs_less(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  if (a.e != b.e) return a.e < b.e;
  return std::fabs(a.m) < std::fabs(b.m);
}

ExtComplex::ExtComplex(const std::complex<double>& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("ExtComplex: non-finite component");
  re_m = z.real();
  im_m = z.imag();
  e = 0;
  normalize();
}

ExtComplex::ExtComplex(const ExtScalar& re, const ExtScalar& im) {
  if (re.is_zero() && im.is_zero()) return;
  if (im.is_zero()) {
    re_m = re.m; im_m = 0.0; e = re.e;
    return;
  }
  if (re.is_zero()) {
    re_m = 0.0; im_m = im.m; e = im.e;
    return;
  }
  // Align the smaller component to the larger exponent.
  if (re.e >= im.e) {
    e = re.e;
    re_m = re.m;
    xexp d = re.e - im.e;
    im_m = d > 1100 ? 0.0 : std::ldexp(im.m, -static_cast<int>(d));
  } else {
    e = im.e;
    im_m = im.m;
    xexp d = im.e - re.e;
    re_m = d > 1100 ? 0.0 : std::ldexp(re.m, -static_cast<int>(d));
  }
  normalize();
}

void ExtComplex::normalize() {
  if (re_m == 0.0 && im_m == 0.0) {
    re_m = im_m = 0.0;
    e = 0;
    return;
  }
  if (!std::isfinite(re_m) || !std::isfinite(im_m))
    throw std::invalid_argument("ExtComplex: non-finite component");
  double mx = std::fmax(std::fabs(re_m), std::fabs(im_m));
  int k = 0;
  std::frexp(mx, &k);  // mx in [2^(k-1), 2^k)
  int shift = k - 1;
  if (shift != 0) {
    re_m = std::ldexp(re_m, -shift);
    im_m = std::ldexp(im_m, -shift);
    e += shift;
  }
}

ExtComplex ExtComplex::from_scaled(const std::complex<double>& w, double log_scale) {
  ExtComplex z(w);
  return z * ExtScalar::from_ln(log_scale);
}

ExtScalar ExtComplex::abs() const {
  if (is_zero()) return ExtScalar();
  return ExtScalar(std::hypot(re_m, im_m), e);
}

double ExtComplex::log_abs() const {
  if (is_zero()) throw std::domain_error("ExtComplex::log_abs: log of zero");
  return static_cast<double>(static_cast<long double>(e) * kLn2L +
                             std::log(std::hypot(re_m, im_m)));
}

std::complex<double> ExtComplex::to_std() const {
  if (is_zero()) return {0.0, 0.0};
  if (e > 1100) {
    double inf = std::numeric_limits<double>::infinity();
    return {re_m == 0.0 ? 0.0 : std::copysign(inf, re_m),
            im_m == 0.0 ? 0.0 : std::copysign(inf, im_m)};
  }
  if (e < -1130) return {std::copysign(0.0, re_m), std::copysign(0.0, im_m)};
  int k = static_cast<int>(e);
  return {std::ldexp(re_m, k), std::ldexp(im_m, k)};
}

ExtComplex operator*(const ExtComplex& a, const ExtComplex& b) {
  if (a.is_zero() || b.is_zero()) return ExtComplex();
  ExtComplex r;
  r.re_m = a.re_m * b.re_m - a.im_m * b.im_m;
  r.im_m = a.re_m * b.im_m + a.im_m * b.re_m;
  r.e = a.e + b.e;
  if (r.re_m == 0.0 && r.im_m == 0.0) return ExtComplex();
  r.normalize();
  return r;
}

ExtComplex operator*(const ExtComplex& a, const ExtScalar& s) {
  if (a.is_zero() || s.is_zero()) return ExtComplex();
  ExtComplex r;
  r.re_m = a.re_m * s.m;
  r.im_m = a.im_m * s.m;
  r.e = a.e + s.e;
  r.normalize();
  return r;
}

ExtComplex operator/(const ExtComplex& a, const ExtComplex& b) {
  if (b.is_zero()) throw std::domain_error("ExtComplex: division by zero");
  if (a.is_zero()) return ExtComplex();
  double den = b.re_m * b.re_m + b.im_m * b.im_m;  // in [1, 8)
  ExtComplex r;
  r.re_m = (a.re_m * b.re_m + a.im_m * b.im_m) / den;
  r.im_m = (a.im_m * b.re_m - a.re_m * b.im_m) / den;
  r.e = a.e - b.e;
  if (r.re_m == 0.0 && r.im_m == 0.0) return ExtComplex();
  r.normalize();
  return r;
}

ExtComplex operator+(const ExtComplex& a, const ExtComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  xexp d = a.e - b.e;
  if (d > 1100) return a;
  if (d < -1100) return b;
  ExtComplex r;
  if (d >= 0) {
    int s = -static_cast<int>(d);
    r.re_m = a.re_m + std::ldexp(b.re_m, s);
    r.im_m = a.im_m + std::ldexp(b.im_m, s);
    r.e = a.e;
  } else {
    int s = static_cast<int>(d);
    r.re_m = b.re_m + std::ldexp(a.re_m, s);
    r.im_m = b.im_m + std::ldexp(a.im_m, s);
    r.e = b.e;
  }
  if (r.re_m == 0.0 && r.im_m == 0.0) return ExtComplex();
  r.normalize();
  return r;
}

ExtComplex operator-(const ExtComplex& a, const ExtComplex& b) { return a + (-b); }

ExtComplex horner(std::span<const ExtComplex> coeffs, const ExtComplex& z) {
  if (coeffs.empty()) return ExtComplex();
  ExtComplex acc = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = acc * z + coeffs[i];
  }
  return acc;
}

HornerPair horner_with_derivative(std::span<const ExtComplex> coeffs, const ExtComplex& z) {
  HornerPair r;
  if (coeffs.empty()) return r;
  r.value = coeffs.back();
  r.derivative = ExtComplex();
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    r.derivative = r.derivative * z + r.value;
    r.value = r.value * z + coeffs[i];
  }
  return r;
}

}  // namespace zeroscope::xnum
