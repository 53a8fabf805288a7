#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbc.hpp"

namespace rbclab {

// One application of the message-row removal step: row i is deleted
// together with every column that reads it, and the result is padded with
// zero columns to the exact target length n - (d+1) - (k-r).
struct ShrinkStep {
  int removed_row = 0;          // 0-based
  std::vector<int> t_set;       // columns that are nonzero multiples of e_i
  std::vector<int> s_set;       // columns with a nonzero entry in row i
  int k_before = 0, k_after = 0;
  int n_before = 0, n_after = 0;
  int pad_count = 0;
  bool degenerate = false;      // k_after < r
};

struct ShrinkTrace {
  std::vector<ShrinkStep> steps;
  std::vector<int> n_sequence;        // n_0, n_1, ..., one per step applied
  bool singleton_check = false;       // final n >= r + d
  bool degenerate = false;
  bool reduction_applicable = false;  // n < k(d+1) held at entry
  int r = 0, d = 0;
  std::optional<LinearCode> final_code;
};

// Removes the smallest row index i whose standard-basis column copies
// number at most d (such a row exists whenever n < k(d+1)), drops the
// columns reading row i, and pads back up to length n - (d+1) - (k-r).
// Requires m = r and n < k(d+1). Throws when row i's support is smaller
// than d+1+k-r, since no (r,r,d)-robust batch code can have such a row;
// a result with k-1 < r is returned with the degenerate flag set instead.
std::pair<LinearCode, ShrinkStep> shrink_once(const LinearCode& code,
                                              RbcParams params);

// Applies shrink_once k - r times, recording the n_lambda sequence and the
// final length check n >= r + d. When the entry hypothesis n < k(d+1)
// fails, returns an empty trace (nothing to reduce). With verify_each set,
// the input and every intermediate code are verified and a failure aborts
// with a diagnostic naming the step.
ShrinkTrace shrink_chain(const LinearCode& code, RbcParams params,
                         bool verify_each);

// One line per step, then the n_sequence and the final-length verdict;
// indices 1-based.
std::string render_step(const ShrinkStep& step, int index);
std::string render_trace(const ShrinkTrace& trace);

}  // namespace rbclab
