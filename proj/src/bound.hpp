#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbclab {

// Exact rational on int64, always normalized with a positive denominator.
// The quantities in this module are integers and halves, so the component
// magnitudes stay tiny.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long v) : num(v) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  long long ceil() const {
    if (num >= 0) return (num + den - 1) / den;
    return -((-num) / den);
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  // "11/2", or just the numerator when integral.
  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

enum class Regime { repetition_optimal, penalty_active };

struct BoundResult {
  Rational lower_bound;        // exact lower bound on the block length n
  long long lower_bound_int;   // its ceiling
  Regime regime;
  double threshold_r;          // see repetition_threshold()
};

// Lower bound n >= k(d+1) - max{0, d(r-1) - (k-r)^2 / 2}, evaluated in
// exact rational arithmetic. The regime flag is decided by the exact
// integer comparison 2d(r-1) <= (k-r)^2 (equality counts as
// repetition_optimal since the penalty term is then exactly 0).
BoundResult theorem_bound(long long k, long long r, long long d);

// k + d - sqrt((k+d)^2 - k^2): requests at or below this value certify the
// repetition regime. Display-oriented and conservative: because of the
// square-root form, flatness can extend one integer past this value when
// the exact comparison lands on equality.
double repetition_threshold(long long k, long long d);

struct FigureRow {
  long long d = 0;
  long long r = 0;
  Rational rate;  // k / lower_bound, an upper bound on the achievable rate
};

// One row per (d, r) over the given erasure budgets and the request range
// [r_lo, r_hi], ordered by d then r (duplicate d values are collapsed).
std::vector<FigureRow> figure_table(long long k,
                                    const std::vector<long long>& d_list,
                                    long long r_lo, long long r_hi);

// CSV with header "d,r,rate_upper_bound", LF line endings, rates rendered
// as decimals with 6 significant digits.
std::string figure_csv(long long k, const std::vector<long long>& d_list,
                       long long r_lo, long long r_hi);

// Deterministic decimal rendering with 6 significant digits for values in
// (0, 1]; computed by integer long division so the bytes are identical
// across platforms.
std::string decimal_6sig(const Rational& v);

std::string render_bound(long long k, long long r, long long d,
                         const BoundResult& b);

}  // namespace rbclab
