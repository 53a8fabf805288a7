#include "field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace rbclab {

namespace {

// Polynomials over GF(p) as coefficient vectors in ascending degree order.
// Leading zeros are allowed; deg() looks past them.

int poly_deg(const std::vector<int>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// Remainder of a modulo the monic polynomial m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                          int p) {
  const int dm = poly_deg(m);
  for (int da = poly_deg(a); da >= dm; da = poly_deg(a)) {
    const int c = a[da];
    for (int t = 0; t <= dm; ++t) {
      int& x = a[da - dm + t];
      x = ((x - c * m[t]) % p + p) % p;
    }
  }
  a.resize(dm > 0 ? dm : 1, 0);
  return a;
}

bool poly_is_zero(const std::vector<int>& a) { return poly_deg(a) < 0; }

std::vector<int> decode_digits(int v, int p, int len) {
  std::vector<int> out(len, 0);
  for (int i = 0; i < len; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

int encode_digits(const std::vector<int>& digits, int p) {
  int v = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
    v = v * p + digits[i];
  return v;
}

// Trial division against every monic polynomial of degree 1 .. e/2.
bool poly_irreducible(const std::vector<int>& f_asc, int p) {
  const int e = poly_deg(f_asc);
  for (int d = 1; 2 * d <= e; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      std::vector<int> g = decode_digits(low, p, d);
      g.push_back(1);  // monic
      if (poly_is_zero(poly_mod(f_asc, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

std::pair<int, int> factor_prime_power(int q) {
  if (q < 2 || q > 256)
    throw std::invalid_argument("field order must be in [2, 256], got " +
                                std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " is not a prime power");
  return {p, e};
}

std::vector<int> default_reduction_poly(int p, int e) {
  if (e < 2) throw std::invalid_argument("default polynomial needs e >= 2");
  int count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (int low = 0; low < count; ++low) {
    std::vector<int> f = decode_digits(low, p, e);
    f.push_back(1);
    if (poly_irreducible(f, p)) {
      std::vector<int> desc(f.rbegin(), f.rend());
      return desc;
    }
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(int p, int e, std::vector<int> poly_desc) : p_(p), e_(e) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic must be prime, got " +
                                std::to_string(p));
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 256)
      throw std::invalid_argument("field order p^e exceeds 256 (p=" +
                                  std::to_string(p) +
                                  ", e=" + std::to_string(e) + ")");
  }
  q_ = static_cast<int>(q);

  if (e_ == 1) {
    if (!poly_desc.empty())
      throw std::invalid_argument(
          "reduction polynomial applies only to extension fields (e > 1)");
  } else {
    if (poly_desc.empty()) poly_desc = default_reduction_poly(p_, e_);
    if (static_cast<int>(poly_desc.size()) != e_ + 1)
      throw std::invalid_argument("reduction polynomial must have degree e = " +
                                  std::to_string(e_) + " (" +
                                  std::to_string(e_ + 1) + " coefficients)");
    for (int c : poly_desc)
      if (c < 0 || c >= p_)
        throw std::invalid_argument(
            "reduction polynomial coefficients must lie in [0, p)");
    if (poly_desc.front() != 1)
      throw std::invalid_argument("reduction polynomial must be monic");
    std::vector<int> asc(poly_desc.rbegin(), poly_desc.rend());
    if (!poly_irreducible(asc, p_))
      throw std::invalid_argument(
          "reduction polynomial is reducible over GF(" + std::to_string(p_) +
          ")");
  }
  poly_desc_ = std::move(poly_desc);
  build_tables();
}

void Field::build_tables() {
  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, -1);

  if (e_ == 1) {
    for (int a = 0; a < q_; ++a) {
      neg_[a] = (q_ - a) % q_;
      for (int b = 0; b < q_; ++b) {
        add_[a * q_ + b] = (a + b) % q_;
        mul_[a * q_ + b] = (a * b) % q_;
      }
    }
  } else {
    const std::vector<int> mod_asc(poly_desc_.rbegin(), poly_desc_.rend());
    for (int a = 0; a < q_; ++a) {
      const std::vector<int> da = decode_digits(a, p_, e_);
      std::vector<int> nd(e_);
      for (int i = 0; i < e_; ++i) nd[i] = (p_ - da[i]) % p_;
      neg_[a] = encode_digits(nd, p_);
      for (int b = 0; b < q_; ++b) {
        const std::vector<int> db = decode_digits(b, p_, e_);
        std::vector<int> s(e_);
        for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = encode_digits(s, p_);
        std::vector<int> m = poly_mod(poly_mul(da, db, p_), mod_asc, p_);
        m.resize(e_, 0);
        mul_[a * q_ + b] = encode_digits(m, p_);
      }
    }
  }

  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
}

void Field::check(int a) const {
  if (!valid(a))
    throw std::invalid_argument("element " + std::to_string(a) +
                                " outside GF(" + std::to_string(q_) + ")");
}

int Field::inv(int a) const {
  check(a);
  if (a == 0)
    throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) +
                            ")");
  return inv_[a];
}

int Field::pow(int a, int n) const {
  check(a);
  if (n < 0) throw std::invalid_argument("negative exponent");
  int r = 1;
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::shared_ptr<const Field> Field::make(int p, int e,
                                         std::vector<int> poly_desc) {
  return std::make_shared<const Field>(p, e, std::move(poly_desc));
}

std::shared_ptr<const Field> Field::of_order(int q) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto [p, e] = factor_prime_power(q);
  auto field = make(p, e);
  cache.emplace(q, field);
  return field;
}

}  // namespace rbclab
