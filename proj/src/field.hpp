#pragma once

#include <memory>
#include <vector>

namespace rbclab {

// Exact arithmetic in GF(p^e) for small orders (q = p^e <= 256).
//
// Elements are canonical integers in [0, q): the base-p digits of the
// encoding are the coefficients of the residue polynomial, least
// significant digit first (for e = 1 the encoding is the residue itself).
// Two equal elements always have the same encoding.
//
// All operation tables are precomputed at construction, so arithmetic is
// table lookups. Instances are immutable and safe to share across threads.
class Field {
 public:
  // Builds GF(p^e). For e > 1 the reduction polynomial is given in
  // descending coefficient order c_e ... c_0 (the same order as the matrix
  // text format); it must be monic and irreducible over GF(p). Pass an
  // empty list to use the library default, or for e = 1 where no
  // polynomial applies.
  Field(int p, int e, std::vector<int> poly_desc = {});

  static std::shared_ptr<const Field> make(int p, int e,
                                           std::vector<int> poly_desc = {});

  // Field of order q with the default reduction polynomial. Results are
  // cached, so repeated calls share one instance per order.
  static std::shared_ptr<const Field> of_order(int q);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return q_; }

  // Descending coefficients c_e ... c_0; empty for prime fields.
  const std::vector<int>& reduction_poly() const { return poly_desc_; }

  bool valid(int a) const { return 0 <= a && a < q_; }

  int add(int a, int b) const { check(a); check(b); return add_[a * q_ + b]; }
  int sub(int a, int b) const { check(a); check(b); return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { check(a); return neg_[a]; }
  int mul(int a, int b) const { check(a); check(b); return mul_[a * q_ + b]; }
  int inv(int a) const;          // throws std::domain_error when a == 0
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, int n) const;   // n >= 0; pow(a, 0) == 1

  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && poly_desc_ == o.poly_desc_;
  }

 private:
  void check(int a) const;
  void build_tables();

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> poly_desc_;
  std::vector<int> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

// The default reduction polynomial for GF(p^e), e >= 2: the monic
// irreducible polynomial of degree e whose canonical base-p encoding is
// smallest. Deterministic across runs and platforms; for GF(4) this is
// x^2 + x + 1. Returned in descending coefficient order.
std::vector<int> default_reduction_poly(int p, int e);

bool is_prime(int p);

// Splits a prime power q into (p, e); throws std::invalid_argument when q
// is not a prime power in [2, 256].
std::pair<int, int> factor_prime_power(int q);

}  // namespace rbclab
