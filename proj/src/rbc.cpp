#include "rbc.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace rbclab {

namespace {

std::vector<int> basis_vector(int dim, int i) {
  std::vector<int> e(dim, 0);
  e[i] = 1;
  return e;
}

// Per-code context shared by all find_repair_set calls of one verify run.
struct RepairContext {
  const LinearCode* code;
  std::vector<std::vector<int>> col_support;  // nonzero rows per column

  explicit RepairContext(const LinearCode& c) : code(&c) {
    col_support.resize(c.n);
    for (int j = 0; j < c.n; ++j)
      for (int i = 0; i < c.k; ++i)
        if (c.gen.at(i, j) != 0) col_support[j].push_back(i);
  }
};

bool determines_unchecked(const LinearCode& code, const std::vector<int>& I,
                          const std::vector<int>& J) {
  SpanBasis span(*code.field, code.k);
  for (int j : J) span.absorb(code.gen.col(j));
  for (int i : I)
    if (!span.contains(basis_vector(code.k, i))) return false;
  return true;
}

std::optional<std::vector<int>> find_repair_impl(
    const RepairContext& ctx, const std::vector<int>& I,
    const std::vector<int>& D, int m, Strategy strategy,
    std::uint64_t& candidates) {
  const LinearCode& code = *ctx.code;

  if (strategy == Strategy::lemma1) {
    // Any exact-size repair set consists of columns supported inside I that
    // are independent on the rows I, so a greedy scan over that candidate
    // pool finds the lexicographically smallest one.
    const int r = static_cast<int>(I.size());
    SpanBasis span(*code.field, r);
    std::vector<int> J;
    size_t d_pos = 0;
    for (int j = 0; j < code.n && static_cast<int>(J.size()) < r; ++j) {
      while (d_pos < D.size() && D[d_pos] < j) ++d_pos;
      if (d_pos < D.size() && D[d_pos] == j) continue;
      const std::vector<int>& support = ctx.col_support[j];
      if (!std::includes(I.begin(), I.end(), support.begin(), support.end()))
        continue;
      std::vector<int> restricted(r);
      for (int t = 0; t < r; ++t) restricted[t] = code.gen.at(I[t], j);
      if (span.absorb(std::move(restricted))) J.push_back(j);
    }
    if (static_cast<int>(J.size()) != r) return std::nullopt;
    ++candidates;
    if (!determines_unchecked(code, I, J)) return std::nullopt;
    return J;
  }

  const std::vector<int> avail = complement_set(D, code.n);
  const int max_size = std::min<int>(m, static_cast<int>(avail.size()));
  for (int s = 0; s <= max_size; ++s) {
    std::vector<int> pick = first_combination(s);
    do {
      std::vector<int> J(s);
      for (int t = 0; t < s; ++t) J[t] = avail[pick[t]];
      ++candidates;
      if (determines_unchecked(code, I, J)) return J;
    } while (next_combination(pick, static_cast<int>(avail.size())));
  }
  return std::nullopt;
}

struct PairOutcome {
  bool ok = false;
  std::vector<int> I, D, J;
  std::uint64_t candidates = 0;
};

}  // namespace

const char* strategy_name(Strategy s) {
  return s == Strategy::naive ? "naive" : "lemma1";
}

bool determines(const LinearCode& code, const std::vector<int>& I,
                const std::vector<int>& J) {
  validate_index_set(I, code.k, "request set I");
  validate_index_set(J, code.n, "query set J");
  return determines_unchecked(code, I, J);
}

bool lemma1_check(const LinearCode& code, const std::vector<int>& I,
                  const std::vector<int>& J) {
  validate_index_set(I, code.k, "request set I");
  validate_index_set(J, code.n, "query set J");
  if (I.size() != J.size())
    throw std::invalid_argument(
        "lemma1_check needs |I| = |J|, got " + std::to_string(I.size()) +
        " and " + std::to_string(J.size()));
  if (code.gen.restricted(I, J).rank() != static_cast<int>(I.size()))
    return false;
  return code.gen.restricted(complement_set(I, code.k), J).is_zero();
}

std::optional<std::vector<int>> find_repair_set(
    const LinearCode& code, const std::vector<int>& I,
    const std::vector<int>& D, int m, Strategy strategy,
    std::uint64_t* candidates_examined) {
  validate_index_set(I, code.k, "request set I");
  validate_index_set(D, code.n, "erasure set D");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (strategy == Strategy::lemma1 && m != static_cast<int>(I.size()))
    throw std::invalid_argument("strategy lemma1 requires m = |I|");
  RepairContext ctx(code);
  std::uint64_t candidates = 0;
  auto result = find_repair_impl(ctx, I, D, m, strategy, candidates);
  if (candidates_examined) *candidates_examined = candidates;
  return result;
}

VerdictReport verify_rbc(const LinearCode& code, RbcParams params,
                         const VerifyOptions& opts) {
  if (params.r < 1 || params.m < 1 || params.d < 0)
    throw std::invalid_argument("params need r >= 1, m >= 1, d >= 0");
  if (params.r > code.k)
    throw std::invalid_argument("r = " + std::to_string(params.r) +
                                " exceeds message length k = " +
                                std::to_string(code.k));
  if (params.d > code.n)
    throw std::invalid_argument("d = " + std::to_string(params.d) +
                                " exceeds block length n = " +
                                std::to_string(code.n));
  if (opts.strategy == Strategy::lemma1 && params.m != params.r)
    throw std::invalid_argument("strategy lemma1 requires m = r");

  const unsigned __int128 pair_count =
      static_cast<unsigned __int128>(
          binomial_capped(code.k, params.r, UINT64_MAX)) *
      binomial_capped(code.n, params.d, UINT64_MAX);
  if (pair_count > opts.pair_budget) {
    const std::uint64_t shown =
        pair_count > UINT64_MAX ? UINT64_MAX
                                : static_cast<std::uint64_t>(pair_count);
    throw budget_error("C(k,r)*C(n,d) = " + std::to_string(shown) +
                       " (I, D) pairs exceed budget " +
                       std::to_string(opts.pair_budget));
  }

  VerdictReport report;
  report.params = params;
  report.strategy = opts.strategy;
  report.witnesses_collected = opts.collect_witnesses;
  report.q = code.field->order();
  report.k = code.k;
  report.n = code.n;

  RepairContext ctx(code);
  const int threads = std::max(1, opts.threads);

  // Pairs are consumed in blocks: a block is generated in lexicographic
  // order, evaluated (possibly in parallel), then scanned in order so the
  // first failure and all statistics are independent of the thread count.
  std::vector<int> I = first_combination(params.r);
  std::vector<int> D = first_combination(params.d);
  bool exhausted = false;
  bool failed = false;

  const size_t block_size = static_cast<size_t>(threads) * 64;
  std::vector<PairOutcome> block;
  block.reserve(block_size);

  while (!exhausted && !failed) {
    block.clear();
    while (block.size() < block_size && !exhausted) {
      PairOutcome p;
      p.I = I;
      p.D = D;
      block.push_back(std::move(p));
      if (!next_combination(D, code.n)) {
        D = first_combination(params.d);
        if (!next_combination(I, code.k)) exhausted = true;
      }
    }

    auto evaluate = [&](PairOutcome& p) {
      auto J = find_repair_impl(ctx, p.I, p.D, params.m, opts.strategy,
                                p.candidates);
      p.ok = J.has_value();
      if (p.ok) p.J = std::move(*J);
    };
    if (threads == 1 || block.size() <= 1) {
      for (PairOutcome& p : block) evaluate(p);
    } else {
      std::vector<std::thread> pool;
      const size_t stride = (block.size() + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        const size_t lo = t * stride;
        const size_t hi = std::min(block.size(), lo + stride);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (size_t i = lo; i < hi; ++i) evaluate(block[i]);
        });
      }
      for (std::thread& th : pool) th.join();
    }

    for (PairOutcome& p : block) {
      ++report.stats.pairs_checked;
      report.stats.j_candidates_examined += p.candidates;
      if (!p.ok) {
        failed = true;
        report.counterexample = {p.I, p.D};
        break;
      }
      if (opts.collect_witnesses)
        report.witnesses.push_back(
            {std::move(p.I), std::move(p.D), std::move(p.J)});
    }
  }

  report.holds = !failed;
  return report;
}

std::string render_verdict(const VerdictReport& v) {
  nlohmann::ordered_json j;
  j["holds"] = v.holds;
  j["code"]["q"] = v.q;
  j["code"]["k"] = v.k;
  j["code"]["n"] = v.n;
  j["params"]["r"] = v.params.r;
  j["params"]["m"] = v.params.m;
  j["params"]["d"] = v.params.d;
  j["strategy"] = strategy_name(v.strategy);
  if (v.counterexample) {
    j["counterexample"]["I"] = to_one_based(v.counterexample->first);
    j["counterexample"]["D"] = to_one_based(v.counterexample->second);
  } else {
    j["counterexample"] = nullptr;
  }
  j["stats"]["pairs_checked"] = v.stats.pairs_checked;
  j["stats"]["j_candidates_examined"] = v.stats.j_candidates_examined;
  if (v.witnesses_collected) {
    auto arr = nlohmann::ordered_json::array();
    for (const WitnessEntry& w : v.witnesses) {
      nlohmann::ordered_json entry;
      entry["I"] = to_one_based(w.request);
      entry["D"] = to_one_based(w.erased);
      entry["J"] = to_one_based(w.repair);
      arr.push_back(std::move(entry));
    }
    j["witnesses"] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

}  // namespace rbclab
