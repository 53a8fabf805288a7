#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace rbclab {

// A linear code given by its k x n generator matrix; encoding is the
// vector-matrix product x G. Degenerate shapes (k > n, rank < k) are
// permitted so search and reduction tooling can pass arbitrary matrices
// through; the constructions in this module always produce rank-k
// generators.
struct LinearCode {
  FieldPtr field;
  int k = 0;
  int n = 0;
  Matrix gen;

  explicit LinearCode(Matrix g)
      : field(g.field()), k(g.rows()), n(g.cols()), gen(std::move(g)) {}
};

inline constexpr std::uint64_t kDefaultEnumBudget = 1ull << 24;

std::vector<int> encode(const LinearCode& code, const std::vector<int>& x);

// Minimum Hamming weight of x G over nonzero messages x, by exhaustive
// enumeration of all q^k messages. Equals the minimum distance when
// rank(G) = k; may be 0 otherwise. Throws budget_error when q^k exceeds
// the budget.
int min_distance(const LinearCode& code,
                 std::uint64_t budget = kDefaultEnumBudget);

// True when every k x k column submatrix of G is invertible. Requires
// rank(G) = k; C(n, k) must fit in the budget.
bool is_mds(const LinearCode& code, std::uint64_t budget = kDefaultEnumBudget);

// Each message symbol copied d+1 times, copies grouped by message index:
// n = k(d+1), column j of group i is the standard basis vector e_i.
LinearCode construct_repetition(FieldPtr field, int k, int d);

// k x (k+d) Vandermonde generator on the first n = k+d field elements in
// canonical encoding order starting at 0 (row i holds the (i-1)-th powers).
// Every k columns are independent. Requires q >= k+d.
LinearCode construct_mds(FieldPtr field, int k, int d);

// Block-diagonal generator: k/lambda message blocks of size lambda, each
// encoded with the lambda x (lambda+d) Vandermonde generator; blocks are
// contiguous in both rows and columns. Requires lambda | k and
// q >= lambda+d. lambda = 1 reproduces the repetition layout; lambda = k
// is a single full-width block.
LinearCode construct_block_rs(FieldPtr field, int k, int d, int lambda);

LinearCode parse_code(const std::string& text);
LinearCode read_code_file(const std::string& path);
std::string format_code(const LinearCode& code);
void write_code_file(const LinearCode& code, const std::string& path);

}  // namespace rbclab
