#include "codes.hpp"

#include <stdexcept>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace rbclab {

std::vector<int> encode(const LinearCode& code, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != code.k)
    throw std::invalid_argument("message length " + std::to_string(x.size()) +
                                " does not match k = " +
                                std::to_string(code.k));
  const Field& f = *code.field;
  for (int v : x)
    if (!f.valid(v))
      throw std::invalid_argument("message entry outside the field");
  std::vector<int> out(code.n, 0);
  for (int i = 0; i < code.k; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < code.n; ++j)
      out[j] = f.add(out[j], f.mul(x[i], code.gen.at(i, j)));
  }
  return out;
}

int min_distance(const LinearCode& code, std::uint64_t budget) {
  const Field& f = *code.field;
  const std::uint64_t q = f.order();
  const std::uint64_t total = pow_capped(q, code.k, budget);
  if (total > budget)
    throw budget_error("q^k = " + std::to_string(q) + "^" +
                       std::to_string(code.k) +
                       " messages: too large for brute force (budget " +
                       std::to_string(budget) + ")");

  int best = code.n + 1;
  std::vector<int> x(code.k, 0);
  std::vector<int> word(code.n, 0);
  // Odometer over all messages, skipping x = 0. The codeword is kept
  // incrementally: changing digit i from a to b adds (b - a) times row i.
  for (std::uint64_t step = 1; step < total; ++step) {
    int i = 0;
    while (true) {
      const int old = x[i];
      x[i] = (x[i] + 1) % static_cast<int>(q);
      const int delta = f.sub(x[i], old);
      for (int j = 0; j < code.n; ++j) {
        const int g = code.gen.at(i, j);
        if (g != 0) word[j] = f.add(word[j], f.mul(delta, g));
      }
      if (x[i] != 0) break;
      ++i;
    }
    int weight = 0;
    for (int j = 0; j < code.n; ++j) weight += word[j] != 0;
    if (weight < best) best = weight;
  }
  return code.k == 0 ? 0 : best;
}

bool is_mds(const LinearCode& code, std::uint64_t budget) {
  if (code.gen.rank() != code.k)
    throw std::invalid_argument("generator must have full row rank " +
                                std::to_string(code.k));
  if (binomial_capped(code.n, code.k, budget) > budget)
    throw budget_error("C(n, k) column subsets exceed budget " +
                       std::to_string(budget));
  if (code.k == 0) return true;
  const std::vector<int> all_rows = first_combination(code.k);
  std::vector<int> cols = first_combination(code.k);
  do {
    if (code.gen.restricted(all_rows, cols).rank() != code.k) return false;
  } while (next_combination(cols, code.n));
  return true;
}

LinearCode construct_repetition(FieldPtr field, int k, int d) {
  if (k < 1 || d < 0)
    throw std::invalid_argument("repetition needs k >= 1 and d >= 0");
  Matrix g(field, k, k * (d + 1));
  for (int i = 0; i < k; ++i)
    for (int copy = 0; copy <= d; ++copy) g.set(i, i * (d + 1) + copy, 1);
  return LinearCode(std::move(g));
}

LinearCode construct_mds(FieldPtr field, int k, int d) {
  if (k < 1 || d < 0)
    throw std::invalid_argument("mds needs k >= 1 and d >= 0");
  const int n = k + d;
  if (field->order() < n)
    throw std::invalid_argument(
        "field too small for mds: need q >= k+d = " + std::to_string(n) +
        ", got q = " + std::to_string(field->order()));
  Matrix g(field, k, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < k; ++i) g.set(i, j, field->pow(j, i));
  return LinearCode(std::move(g));
}

LinearCode construct_block_rs(FieldPtr field, int k, int d, int lambda) {
  if (k < 1 || d < 0 || lambda < 1)
    throw std::invalid_argument("block-rs needs k >= 1, d >= 0, lambda >= 1");
  if (k % lambda != 0)
    throw std::invalid_argument("lambda = " + std::to_string(lambda) +
                                " does not divide k = " + std::to_string(k));
  const LinearCode block = construct_mds(field, lambda, d);
  const int blocks = k / lambda;
  Matrix g(field, k, blocks * block.n);
  for (int b = 0; b < blocks; ++b)
    for (int i = 0; i < lambda; ++i)
      for (int j = 0; j < block.n; ++j)
        g.set(b * lambda + i, b * block.n + j, block.gen.at(i, j));
  return LinearCode(std::move(g));
}

LinearCode parse_code(const std::string& text) {
  return LinearCode(parse_matrix(text));
}

LinearCode read_code_file(const std::string& path) {
  return LinearCode(read_matrix_file(path));
}

std::string format_code(const LinearCode& code) {
  return format_matrix(code.gen);
}

void write_code_file(const LinearCode& code, const std::string& path) {
  write_matrix_file(code.gen, path);
}

}  // namespace rbclab
