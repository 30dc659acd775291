#pragma once

// Coefficient-sequence generators: family members f_n(z) = sum a_{n,k} z^k
// together with their normalization V_n, plus the exact integer
// combinatorics behind the connected-graph polynomials.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zeroscope/xnum.hpp"

namespace zeroscope::series {

using xnum::ExtComplex;
using xnum::ExtScalar;

// One family member: coefficients in extended form plus the normalization V.
struct CoeffSeq {
  std::string label;
  int n = 0;          // family index
  double V = 1.0;     // normalization, > 0
  std::vector<ExtComplex> coeffs;  // a_k at index k
  bool truncated = false;          // true when this is a truncation of an entire function

  int degree() const;          // largest k with a_k != 0; -1 if all zero
  int lowest_nonzero() const;  // smallest k with a_k != 0; -1 if all zero
};

// Throws std::invalid_argument if V <= 0 or all coefficients vanish.
void validate(const CoeffSeq& f);

// Natural logs of |a_k|; zero coefficients get +infinity.
std::vector<double> log_magnitudes(const CoeffSeq& f);

// Partial sum S_n of a power series given by a coefficient rule; V = n.
CoeffSeq partial_sums(const std::function<ExtComplex(int)>& coeff_rule, int n);

// Exact integer polynomial (in the monomial basis).
struct BigIntPoly {
  std::vector<mpz_class> coeffs;  // coefficient of y^k at index k
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Connected-graph polynomial C_n(y): monic of degree n(n-1)/2 with
// constant term (-1)^(n-1) (n-1)!. Computed by the exact recurrence
//   C_n = F_n - sum_{k=1}^{n-1} binom(n-1, k-1) C_k F_{n-k},
// F_m(y) = y^{m(m-1)/2}, which is equivalent to the log relation between
// the all-graphs and connected-graphs exponential generating functions.
// Practical bound n <= 16 (degree <= 120).
BigIntPoly tutte_connected(int n);

// Normalizes C_n by n! and sets V = n(n-1)/2. Requires n >= 2 so that V > 0.
CoeffSeq tutte_coeffseq(const BigIntPoly& p, int n);

// Smallest n with p_c^{*(n+1)}(0) / p_c^{*n}(0) >= 36, iterating z -> z^2 + c
// from 0. The ratio is evaluated at the origin orbit. Requires c < -2.
int v_of_c(double c);

// Truncated zeta function 1 + sum_{k>=1} z^k / (p_c(0) ... p_c^{*k}(0)),
// truncated at K; V = v_of_c(c).
CoeffSeq ruelle_zeta(double c, int K);

// Smallest K such that log|a_K| + K log(target_radius) < log|a_0| - log_margin:
// past this index the tail cannot move any root of modulus <= target_radius
// by more than e^{-log_margin + O(1)}.
int ruelle_suggest_truncation(double c, double target_radius = 4.0, double log_margin = 700.0);

// Truncation of (1/a) sum a^{2^k} z^k: coeffs[k] = a^{2^k - 1}, built from the
// log-magnitude (2^k - 1) ln a, never from a plain double power. 0 < a < 1.
// No normalization is defined for this family; V is left at 1.
CoeffSeq hardy(double a, int K);

// coeffs[k] <- coeffs[k] * r^k (exponent arithmetic), V replaced.
CoeffSeq rescale(const CoeffSeq& f, double r, double V);

// Monic polynomial with the given roots, expanded in extended arithmetic.
CoeffSeq from_roots(std::span<const std::complex<double>> roots, std::string label, double V);

// Deterministic i.i.d. uniform samples from the closed unit disk.
// mt19937_64 seeded as given; unit doubles are (x >> 11) * 2^-53 and points
// are drawn by rejection from [-1,1]^2, so the stream is platform-independent.
std::vector<std::complex<double>> random_disk_roots(int n, std::uint64_t seed);

}  // namespace zeroscope::series
