#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbc.hpp"

namespace rbclab {

enum class SearchStatus { found, exhausted_none, inconclusive };
enum class SearchMode { exhaustive, random };

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;      // random mode only; always explicit
  std::uint64_t samples = 0;   // random mode only
  std::uint64_t budget = 1ull << 28;  // cap on candidate matrices
  int threads = 1;
  std::string cache_path;      // optional append-only result cache
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<LinearCode> witness;
  std::uint64_t matrices_enumerated = 0;
  std::uint64_t matrices_after_pruning = 0;
  double wall_seconds = 0;  // informational; excluded from rendering
  // Echo of the query, for rendering.
  int q = 0, k = 0, n = 0;
  RbcParams params;
  SearchMode mode = SearchMode::exhaustive;
};

// Decides whether an (r,m,d)-robust batch code with the given shape exists
// over the field.
//
// Exhaustive mode enumerates generator matrices up to column permutation
// and per-column nonzero scaling (both preserve the property): columns are
// drawn from canonical representatives (first nonzero entry 1) and listed
// in non-decreasing (support, entries) order. Candidates where some row i
// is read by at most d columns are rejected without full verification; the
// rest are verified, and every hit is confirmed with the naive verifier
// before being reported. exhausted_none is only ever reported by a
// completed exhaustive enumeration; a blown budget yields inconclusive.
// Exhaustive mode is limited to q <= 4 and k*n <= 36.
//
// Random mode draws `samples` uniform matrices from the explicit seed and
// reports found or inconclusive; identical (seed, samples) give identical
// outcomes.
SearchOutcome exists_rbc(const FieldPtr& field, int k, int n, RbcParams params,
                         const SearchOptions& opts = {});

// Smallest n <= n_max for which exists_rbc reports found, scanning n
// upward (from d, since fewer symbols cannot host d erasures). Every
// negative step must be exhausted_none; an inconclusive step throws
// instead of being skipped. nullopt when nothing is found up to n_max.
std::optional<int> min_blocklength(const FieldPtr& field, int k,
                                   RbcParams params, int n_max,
                                   const SearchOptions& opts = {});

// Structured text: status, field, shape, counters, and the witness in the
// matrix text format when present.
std::string render_outcome(const SearchOutcome& outcome);

const char* search_status_name(SearchStatus s);

}  // namespace rbclab
