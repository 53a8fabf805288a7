#include "search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace rbclab {

namespace {

// Canonical column representatives: the zero column plus one scaled copy of
// each projective point (first nonzero entry 1), sorted by (support,
// entries). Enumerating non-decreasing sequences over these covers every
// code up to column permutation and per-column scaling.
std::vector<std::vector<int>> column_representatives(const Field& f, int k) {
  const int q = f.order();
  std::vector<std::vector<int>> reps;
  std::vector<int> v(k, 0);
  auto support_of = [&](const std::vector<int>& c) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (c[i] != 0) s.push_back(i);
    return s;
  };
  while (true) {
    int first_nonzero = -1;
    for (int i = 0; i < k; ++i)
      if (v[i] != 0) {
        first_nonzero = i;
        break;
      }
    if (first_nonzero < 0 || v[first_nonzero] == 1) reps.push_back(v);
    int i = 0;
    while (i < k && v[i] == q - 1) v[i++] = 0;
    if (i == k) break;
    ++v[i];
  }
  std::sort(reps.begin(), reps.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              const std::vector<int> sa = support_of(a), sb = support_of(b);
              if (sa != sb) return sa < sb;
              return a < b;
            });
  return reps;
}

struct CacheKey {
  int q, k, n, r, m, d;
  SearchMode mode;
  std::uint64_t seed, samples;
};

std::string cache_key_prefix(const CacheKey& key) {
  std::ostringstream out;
  out << key.q << ' ' << key.k << ' ' << key.n << ' ' << key.r << ' ' << key.m
      << ' ' << key.d << ' '
      << (key.mode == SearchMode::exhaustive ? "exhaustive" : "random") << ' '
      << key.seed << ' ' << key.samples;
  return out.str();
}

// Cache lines: "<key> <status> <enumerated> <pruned> [<k*n entries>]".
// Witness entries are canonical encodings and assume the default reduction
// polynomial for extension fields.
std::optional<SearchOutcome> cache_lookup(const std::string& path,
                                          const CacheKey& key,
                                          const FieldPtr& field) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const std::string prefix = cache_key_prefix(key) + " ";
  std::optional<SearchOutcome> hit;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind(prefix, 0) != 0) continue;
    std::istringstream rest(line.substr(prefix.size()));
    std::string status;
    SearchOutcome out;
    if (!(rest >> status >> out.matrices_enumerated >>
          out.matrices_after_pruning))
      continue;
    if (status == "found") {
      out.status = SearchStatus::found;
      try {
        Matrix g(field, key.k, key.n);
        bool ok = true;
        for (int i = 0; i < key.k && ok; ++i)
          for (int j = 0; j < key.n && ok; ++j) {
            int v;
            if (rest >> v)
              g.set(i, j, v);
            else
              ok = false;
          }
        if (!ok) continue;
        out.witness = LinearCode(std::move(g));
      } catch (const std::exception&) {
        continue;  // corrupt cache line; recompute instead
      }
    } else if (status == "exhausted-none") {
      out.status = SearchStatus::exhausted_none;
    } else if (status == "inconclusive") {
      out.status = SearchStatus::inconclusive;
    } else {
      continue;
    }
    hit = std::move(out);  // last entry wins
  }
  return hit;
}

void cache_append(const std::string& path, const CacheKey& key,
                  const SearchOutcome& outcome) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw io_error("cannot open cache '" + path + "' for append");
  out << cache_key_prefix(key) << ' ' << search_status_name(outcome.status)
      << ' ' << outcome.matrices_enumerated << ' '
      << outcome.matrices_after_pruning;
  if (outcome.witness) {
    const LinearCode& w = *outcome.witness;
    for (int i = 0; i < w.k; ++i)
      for (int j = 0; j < w.n; ++j) out << ' ' << w.gen.at(i, j);
  }
  out << '\n';
}

// Every row must be read by more than d columns, or some message symbol
// can be wiped out by d erasures. Sound for any r >= 1.
bool survives_pruning(const Matrix& g, int d) {
  for (int i = 0; i < g.rows(); ++i) {
    int reads = 0;
    for (int j = 0; j < g.cols(); ++j)
      if (g.at(i, j) != 0 && ++reads > d) break;
    if (reads <= d) return false;
  }
  return true;
}

bool verify_candidate(const LinearCode& code, RbcParams params) {
  VerifyOptions opts;
  opts.strategy =
      params.m == params.r ? Strategy::lemma1 : Strategy::naive;
  opts.pair_budget = UINT64_MAX;
  if (!verify_rbc(code, params, opts).holds) return false;
  if (opts.strategy == Strategy::naive) return true;
  VerifyOptions naive;
  naive.pair_budget = UINT64_MAX;
  return verify_rbc(code, params, naive).holds;  // confirm every hit
}

struct CandidateResult {
  Matrix g;
  bool pruned = false;
  bool holds = false;
};

}  // namespace

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::exhausted_none:
      return "exhausted-none";
    default:
      return "inconclusive";
  }
}

SearchOutcome exists_rbc(const FieldPtr& field, int k, int n, RbcParams params,
                         const SearchOptions& opts) {
  if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
  if (params.r < 1 || params.m < 1 || params.d < 0)
    throw std::invalid_argument("params need r >= 1, m >= 1, d >= 0");
  if (params.r > k)
    throw std::invalid_argument("r exceeds message length k");
  if (params.d > n)
    throw std::invalid_argument("d exceeds block length n");
  const int q = field->order();
  if (opts.mode == SearchMode::exhaustive && (q > 4 || k * n > 36))
    throw std::invalid_argument(
        "exhaustive search is limited to q <= 4 and k*n <= 36");
  if (opts.mode == SearchMode::random && opts.samples < 1)
    throw std::invalid_argument("random mode needs samples >= 1");

  CacheKey key{q,           k,
               n,           params.r,
               params.m,    params.d,
               opts.mode,   opts.mode == SearchMode::random ? opts.seed : 0,
               opts.mode == SearchMode::random ? opts.samples : 0};
  if (!opts.cache_path.empty())
    if (auto hit = cache_lookup(opts.cache_path, key, field)) {
      hit->q = q;
      hit->k = k;
      hit->n = n;
      hit->params = params;
      hit->mode = opts.mode;
      return *hit;
    }

  const auto start = std::chrono::steady_clock::now();
  SearchOutcome outcome;
  outcome.q = q;
  outcome.k = k;
  outcome.n = n;
  outcome.params = params;
  outcome.mode = opts.mode;

  const int threads = std::max(1, opts.threads);
  const size_t block_size = static_cast<size_t>(threads) * 32;

  // Candidate producer: fills `g` with the next matrix, or returns false.
  std::vector<std::vector<int>> reps;
  std::vector<int> pick;
  bool exhausted_source = false;
  std::mt19937_64 rng(opts.seed);
  std::uint64_t produced = 0;

  if (opts.mode == SearchMode::exhaustive) {
    // The column table itself must stay buildable before the candidate
    // count is even known.
    const std::uint64_t column_cap =
        std::min<std::uint64_t>(opts.budget, 1ull << 22);
    const bool feasible =
        pow_capped(q, k, column_cap) <= column_cap;
    if (feasible) reps = column_representatives(*field, k);
    if (!feasible ||
        binomial_capped(reps.size() + n - 1, n, opts.budget) > opts.budget) {
      outcome.status = SearchStatus::inconclusive;
      if (!opts.cache_path.empty()) cache_append(opts.cache_path, key, outcome);
      return outcome;
    }
    pick.assign(n, 0);
  }

  auto produce = [&](Matrix& g) -> bool {
    if (exhausted_source) return false;
    if (opts.mode == SearchMode::exhaustive) {
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) g.set(i, j, reps[pick[j]][i]);
      if (!next_multiset(pick, static_cast<int>(reps.size())))
        exhausted_source = true;
      return true;
    }
    if (produced >= opts.samples) return false;
    ++produced;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j)
        g.set(i, j, static_cast<int>(uniform_below(rng, q)));
    return true;
  };

  bool done = false;
  std::vector<CandidateResult> block;
  while (!done) {
    block.clear();
    while (block.size() < block_size) {
      CandidateResult c{Matrix(field, k, n), false, false};
      if (!produce(c.g)) break;
      block.push_back(std::move(c));
    }
    if (block.empty()) break;

    auto evaluate = [&](CandidateResult& c) {
      c.pruned = !survives_pruning(c.g, params.d);
      if (!c.pruned) c.holds = verify_candidate(LinearCode(c.g), params);
    };
    if (threads == 1 || block.size() <= 1) {
      for (CandidateResult& c : block) evaluate(c);
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

    // Ordered reduction: the first hit in enumeration order wins and the
    // counters only cover candidates up to and including it.
    for (CandidateResult& c : block) {
      ++outcome.matrices_enumerated;
      if (!c.pruned) ++outcome.matrices_after_pruning;
      if (c.holds) {
        outcome.status = SearchStatus::found;
        outcome.witness = LinearCode(std::move(c.g));
        done = true;
        break;
      }
    }
  }

  if (outcome.status != SearchStatus::found)
    outcome.status = opts.mode == SearchMode::exhaustive
                         ? SearchStatus::exhausted_none
                         : SearchStatus::inconclusive;
  outcome.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!opts.cache_path.empty()) cache_append(opts.cache_path, key, outcome);
  return outcome;
}

std::optional<int> min_blocklength(const FieldPtr& field, int k,
                                   RbcParams params, int n_max,
                                   const SearchOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
  for (int n = std::max(1, params.d); n <= n_max; ++n) {
    const SearchOutcome outcome = exists_rbc(field, k, n, params, opts);
    if (outcome.status == SearchStatus::found) return n;
    if (outcome.status == SearchStatus::inconclusive)
      throw budget_error("search undecided at n = " + std::to_string(n) +
                         "; cannot certify a minimum block length");
  }
  return std::nullopt;
}

std::string render_outcome(const SearchOutcome& outcome) {
  std::ostringstream out;
  out << "status: " << search_status_name(outcome.status) << '\n'
      << "field: GF(" << outcome.q << ")\n"
      << "k: " << outcome.k << '\n'
      << "n: " << outcome.n << '\n'
      << "params: r=" << outcome.params.r << " m=" << outcome.params.m
      << " d=" << outcome.params.d << '\n'
      << "mode: "
      << (outcome.mode == SearchMode::exhaustive ? "exhaustive" : "random")
      << '\n'
      << "matrices_enumerated: " << outcome.matrices_enumerated << '\n'
      << "matrices_after_pruning: " << outcome.matrices_after_pruning << '\n';
  if (outcome.witness)
    out << "witness:\n" << format_code(*outcome.witness);
  else
    out << "witness: none\n";
  return out.str();
}

}  // namespace rbclab
