#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rbclab {

// C(n, k) saturated at `cap` so callers can compare against budgets without
// overflow.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1 > cap ? cap + 1 : cap;
  }
  return static_cast<std::uint64_t>(r);
}

// q^k saturated at `cap`.
inline std::uint64_t pow_capped(std::uint64_t q, std::uint64_t k,
                                std::uint64_t cap) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= q;
    if (r > cap) return cap + 1 > cap ? cap + 1 : cap;
  }
  return static_cast<std::uint64_t>(r);
}

// Lexicographic k-subsets of {0, ..., n-1}. first_combination() yields
// {0..k-1}; next_combination() advances in place and returns false after
// the last subset.
inline std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Non-decreasing length-n sequences over {0, ..., sym-1} (combinations with
// repetition), in lexicographic order.
inline bool next_multiset(std::vector<int>& c, int sym) {
  const int n = static_cast<int>(c.size());
  for (int i = n - 1; i >= 0; --i) {
    if (c[i] < sym - 1) {
      const int v = c[i] + 1;
      for (int j = i; j < n; ++j) c[j] = v;
      return true;
    }
  }
  return false;
}

// Sorted complement of `set` (ascending, 0-based) within {0, ..., n-1}.
inline std::vector<int> complement_set(const std::vector<int>& set, int n) {
  std::vector<int> out;
  out.reserve(n - set.size());
  size_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (s < set.size() && set[s] == i)
      ++s;
    else
      out.push_back(i);
  }
  return out;
}

// Unbiased uniform draw from [0, bound) using rejection sampling; portable
// across platforms for a fixed mt19937_64 seed.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

inline std::vector<int> to_one_based(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

}  // namespace rbclab
