#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"

namespace rbclab {

// The verification triple: recover any r message symbols from at most m
// codeword symbols despite d adversarial erasures. Bounds against a
// concrete code (r <= k, d <= n) are checked at verification time.
struct RbcParams {
  int r = 1;
  int m = 1;
  int d = 0;
};

enum class Strategy { naive, lemma1 };

struct WitnessEntry {
  std::vector<int> request;  // I, 0-based
  std::vector<int> erased;   // D
  std::vector<int> repair;   // J
};

struct VerdictStats {
  std::uint64_t pairs_checked = 0;
  std::uint64_t j_candidates_examined = 0;
};

struct VerdictReport {
  bool holds = false;
  // First (I, D) in lexicographic order with no repair set; present iff
  // holds is false.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> counterexample;
  std::vector<WitnessEntry> witnesses;  // filled only when requested
  bool witnesses_collected = false;
  VerdictStats stats;
  // Echo of the run, for rendering.
  RbcParams params;
  Strategy strategy = Strategy::naive;
  int q = 0, k = 0, n = 0;
};

struct VerifyOptions {
  Strategy strategy = Strategy::naive;
  bool collect_witnesses = false;
  int threads = 1;
  std::uint64_t pair_budget = kDefaultEnumBudget;  // cap on C(k,r)*C(n,d)
};

// True iff the codeword restriction to J pins down the message restriction
// to I: for all x, y with xG|_J = yG|_J also x|_I = y|_I. Equivalently,
// every standard basis column e_i (i in I) lies in the column space of
// G|_{[k],J}. Empty I always determines; empty J determines only empty I.
bool determines(const LinearCode& code, const std::vector<int>& I,
                const std::vector<int>& J);

// The structural certificate behind the size-matched case (|I| = |J|):
// true iff G|_{I,J} has full rank |I| and G restricted to the complement
// rows and J is all zero. For |I| = |J| this is equivalent to determines();
// the equal-size requirement is enforced.
bool lemma1_check(const LinearCode& code, const std::vector<int>& I,
                  const std::vector<int>& J);

// Smallest repair set J (minimal size first, then lexicographic) with
// |J| <= m, J disjoint from D, and determines(code, I, J); absent when no
// such J exists. Strategy lemma1 requires m = |I| and restricts candidates
// to columns supported inside I, re-validating its answer with
// determines(). When candidates_examined is non-null it receives the
// number of candidate sets tested.
std::optional<std::vector<int>> find_repair_set(
    const LinearCode& code, const std::vector<int>& I,
    const std::vector<int>& D, int m, Strategy strategy = Strategy::naive,
    std::uint64_t* candidates_examined = nullptr);

// Exhaustive check of the recovery property over every size-r request set I
// and size-d erasure set D, in lexicographic order. Deterministic for any
// thread count: the reported counterexample is always the lexicographically
// first failing pair and the statistics count pairs up to that failure.
VerdictReport verify_rbc(const LinearCode& code, RbcParams params,
                         const VerifyOptions& opts = {});

// JSON rendering with stable field order; all index sets 1-based.
std::string render_verdict(const VerdictReport& v);

const char* strategy_name(Strategy s);

}  // namespace rbclab
