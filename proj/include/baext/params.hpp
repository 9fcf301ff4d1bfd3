#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "baext/auh.hpp"

namespace baext {

// Exact rational, used for epsilon/sigma and the graph-lemma fraction so the
// derived thresholds never touch floating point.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long a = num < 0 ? -num : num, b = den;
    while (b) {
      long long r = a % b;
      a = b;
      b = r;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }

  bool operator==(const Rational&) const = default;
  bool less_than(long long v) const { return num < v * den; }
  double to_double() const { return double(num) / double(den); }
};

inline Rational rational_min(const Rational& a, const Rational& b) {
  return (a.num * b.den <= b.num * a.den) ? a : b;
}

// ceil(a / b) for a >= 0, b > 0.
inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// ceil(r * m) for r >= 0, m >= 0.
inline long long ceil_mul(const Rational& r, long long m) { return ceil_div(r.num * m, r.den); }

struct ProtocolParams {
  int n = 0;
  int t = 0;
  Rational epsilon{1, 1};
  int lambda = 32;
  uint64_t ell = 0;

  Rational sigma() const { return rational_min(Rational{1, 1}, epsilon); }

  bool t_below_n_over_3() const { return 3 * t < n; }
  // t <= n / (3 + epsilon)
  bool t_within_eps() const {
    if (epsilon.num <= 0) return false;
    return (long long)t * (3 * epsilon.den + epsilon.num) <= (long long)n * epsilon.den;
  }

  int rec_k() const { return n - 2 * t; }
  int pra_k() const { return n - 3 * t; }
  // ceil(sigma * (n - 3t) / 5) and /16; the code dimensions of KCA and of the
  // symbol exchange inside the perfect crusader-agreement protocol.
  int delta_kca() const { return int(ceil_div(sigma().num * (n - 3 * t), 5 * sigma().den)); }
  int delta_ca2() const { return int(ceil_div(sigma().num * (n - 3 * t), 16 * sigma().den)); }

  int kappa() const { return auh::kappa_bits(lambda, ell, n); }
};

}  // namespace baext
