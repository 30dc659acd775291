#pragma once

// Extended-exponent real and complex arithmetic.
//
// An ExtScalar is a signed mantissa m with |m| in [1,2) (or exactly 0)
// together with a separate base-2 exponent e, representing m * 2^e.
// The exponent is a 128-bit integer, so quantities like a^(2^k) with
// k ~ 120 or products of doubly-exponentially growing iterates stay
// representable; exponent arithmetic is exact integer arithmetic.
//
// ExtComplex uses a rectangular representation with a single shared
// exponent: z = (re_m + i*im_m) * 2^e with max(|re_m|,|im_m|) in [1,2).
// Rectangular-with-shared-exponent was chosen over magnitude/phase
// because addition needs additive alignment of components. The shared
// exponent quantizes the component ratio at the double range (~2^1074),
// which is irrelevant for the coefficient families handled here.
//
// Addition aligns operands by exponent difference; when the difference
// exceeds the 53-bit mantissa precision the larger operand is returned
// unchanged (deterministic swamping, threshold |d| >= 54).

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>

namespace zeroscope::xnum {

// 128-bit exponent of 2.
using xexp = __int128;

bool xexp_fits_int64(xexp e);
std::string xexp_to_string(xexp e);
xexp xexp_from_string(const std::string& s);

struct ExtScalar {
  double m = 0.0;  // signed mantissa, |m| in [1,2) or exactly 0
  xexp e = 0;      // power-of-two exponent; 0 when the value is 0

  ExtScalar() = default;
  ExtScalar(double mantissa, xexp exponent) : m(mantissa), e(exponent) { normalize(); }

  void normalize();

  static ExtScalar from_double(double x);  // throws on non-finite x
  // Builds e^L (times sign). For |L| beyond ~1e15 the mantissa carries
  // only the residual phase information; log_abs() round-trips to L with
  // relative error at double precision, which is the contract callers rely on.
  static ExtScalar from_ln(double natural_log, int sign = +1);

  bool is_zero() const { return m == 0.0; }
  int sign() const { return m < 0.0 ? -1 : +1; }
  double log_abs() const;   // natural log of |value|; throws on zero
  double log2_abs() const;  // e + log2|m|
  double to_double() const; // saturates to +-inf / 0 outside double range

  ExtScalar operator-() const { ExtScalar r = *this; r.m = -r.m; return r; }
  ExtScalar abs() const { ExtScalar r = *this; r.m = std::fabs(r.m); return r; }
};

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
ExtScalar operator/(const ExtScalar& a, const ExtScalar& b);
ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);

// Magnitude comparison, |a| < |b|.
bool abs_less(const ExtScalar& a, const ExtScalar& b);

struct ExtComplex {
  double re_m = 0.0;  // scaled real part
  double im_m = 0.0;  // scaled imaginary part
  xexp e = 0;         // shared exponent; value = (re_m + i im_m) * 2^e

  ExtComplex() = default;
  ExtComplex(double re, double im, xexp exponent) : re_m(re), im_m(im), e(exponent) { normalize(); }
  explicit ExtComplex(const std::complex<double>& z);
  explicit ExtComplex(const ExtScalar& x) : re_m(x.m), im_m(0.0), e(x.e) {}
  ExtComplex(const ExtScalar& re, const ExtScalar& im);

  void normalize();

  // z = w * e^{log_scale}: the scaled-frame constructor used by the root solver.
  static ExtComplex from_scaled(const std::complex<double>& w, double log_scale);

  bool is_zero() const { return re_m == 0.0 && im_m == 0.0; }
  ExtScalar re() const { return ExtScalar(re_m, e); }
  ExtScalar im() const { return ExtScalar(im_m, e); }
  ExtScalar abs() const;
  double log_abs() const;  // throws on zero
  double arg() const { return std::atan2(im_m, re_m); }
  ExtComplex conj() const { ExtComplex r = *this; r.im_m = -r.im_m; return r; }
  std::complex<double> to_std() const;  // saturating

  ExtComplex operator-() const { ExtComplex r = *this; r.re_m = -r.re_m; r.im_m = -r.im_m; return r; }
};

ExtComplex operator*(const ExtComplex& a, const ExtComplex& b);
ExtComplex operator*(const ExtComplex& a, const ExtScalar& s);
ExtComplex operator/(const ExtComplex& a, const ExtComplex& b);
ExtComplex operator+(const ExtComplex& a, const ExtComplex& b);
ExtComplex operator-(const ExtComplex& a, const ExtComplex& b);

// Evaluates sum_k coeffs[k] z^k, coefficients indexed low to high.
// All intermediates are extended, so any finite input is safe.
ExtComplex horner(std::span<const ExtComplex> coeffs, const ExtComplex& z);

struct HornerPair {
  ExtComplex value;
  ExtComplex derivative;
};
HornerPair horner_with_derivative(std::span<const ExtComplex> coeffs, const ExtComplex& z);

}  // namespace zeroscope::xnum
