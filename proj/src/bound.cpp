#include "bound.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rbclab {

BoundResult theorem_bound(long long k, long long r, long long d) {
  if (k < 1 || r < 1 || r > k || d < 0)
    throw std::invalid_argument("need 1 <= r <= k and d >= 0");
  const Rational penalty(2 * d * (r - 1) - (k - r) * (k - r), 2);
  const Rational zero(0);
  BoundResult out;
  out.lower_bound =
      Rational(k * (d + 1)) - (penalty > zero ? penalty : zero);
  out.lower_bound_int = out.lower_bound.ceil();
  out.regime = 2 * d * (r - 1) <= (k - r) * (k - r)
                   ? Regime::repetition_optimal
                   : Regime::penalty_active;
  out.threshold_r = repetition_threshold(k, d);
  return out;
}

double repetition_threshold(long long k, long long d) {
  if (k < 1 || d < 0) throw std::invalid_argument("need k >= 1 and d >= 0");
  const double s = static_cast<double>((k + d) * (k + d) - k * k);
  return static_cast<double>(k + d) - std::sqrt(s);
}

std::vector<FigureRow> figure_table(long long k,
                                    const std::vector<long long>& d_list,
                                    long long r_lo, long long r_hi) {
  if (r_lo < 1 || r_lo > r_hi || r_hi > k)
    throw std::invalid_argument("need 1 <= r_lo <= r_hi <= k");
  std::vector<long long> ds = d_list;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::vector<FigureRow> rows;
  rows.reserve(ds.size() * static_cast<size_t>(r_hi - r_lo + 1));
  for (long long d : ds)
    for (long long r = r_lo; r <= r_hi; ++r)
      rows.push_back({d, r, Rational(k) / theorem_bound(k, r, d).lower_bound});
  return rows;
}

std::string decimal_6sig(const Rational& v) {
  if (v.num <= 0 || v > Rational(1))
    throw std::invalid_argument("decimal_6sig expects a value in (0, 1]");
  if (v.num == v.den) return "1.00000";

  // Position of the first significant digit after the decimal point.
  int first = 1;
  long long scale = 10;
  while (v.num * scale < v.den) {
    ++first;
    scale *= 10;
  }
  const int decimals = first - 1 + 6;
  long long pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  // Round half up: floor(v * 10^decimals + 1/2).
  long long scaled = (2 * v.num * pow10 + v.den) / (2 * v.den);
  if (scaled >= pow10) return "1.00000";  // rounding carried all the way up

  std::string digits = std::to_string(scaled);
  digits.insert(digits.begin(), decimals - digits.size(), '0');
  return "0." + digits;
}

std::string figure_csv(long long k, const std::vector<long long>& d_list,
                       long long r_lo, long long r_hi) {
  std::ostringstream out;
  out << "d,r,rate_upper_bound\n";
  for (const FigureRow& row : figure_table(k, d_list, r_lo, r_hi))
    out << row.d << ',' << row.r << ',' << decimal_6sig(row.rate) << '\n';
  return out.str();
}

std::string render_bound(long long k, long long r, long long d,
                         const BoundResult& b) {
  char threshold[64];
  std::snprintf(threshold, sizeof(threshold), "%.6f", b.threshold_r);
  std::ostringstream out;
  out << "k: " << k << '\n'
      << "r: " << r << '\n'
      << "d: " << d << '\n'
      << "lower_bound: " << b.lower_bound.str() << '\n'
      << "lower_bound_int: " << b.lower_bound_int << '\n'
      << "regime: "
      << (b.regime == Regime::repetition_optimal ? "repetition_optimal"
                                                 : "penalty_active")
      << '\n'
      << "threshold_r: " << threshold << '\n';
  return out.str();
}

}  // namespace rbclab
