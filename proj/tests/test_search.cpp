#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "bound.hpp"
#include "errors.hpp"
#include "search.hpp"
#include "test_util.hpp"

using namespace rbclab;
using namespace rbclab::testing;

namespace {

// Column permutation plus per-column nonzero scaling: the symmetries the
// canonical enumeration quotients away.
LinearCode shuffled_scaled(const LinearCode& code, std::mt19937_64& rng) {
  const Field& f = *code.field;
  std::vector<int> perm(code.n);
  for (int j = 0; j < code.n; ++j) perm[j] = j;
  for (int j = code.n - 1; j > 0; --j)
    std::swap(perm[j], perm[uniform_below(rng, j + 1)]);
  Matrix g(code.field, code.k, code.n);
  for (int j = 0; j < code.n; ++j) {
    const int scale = 1 + static_cast<int>(uniform_below(rng, f.order() - 1));
    for (int i = 0; i < code.k; ++i)
      g.set(i, perm[j], f.mul(scale, code.gen.at(i, j)));
  }
  return LinearCode{std::move(g)};
}

}  // namespace

TEST_CASE("the recovery property is invariant under the quotient symmetries") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    const int q = trial % 2 == 0 ? 2 : 3;
    auto f = Field::of_order(q);
    const int k = 1 + static_cast<int>(uniform_below(rng, 3));
    const int n = 1 + static_cast<int>(uniform_below(rng, 6));
    const LinearCode code{random_matrix(f, k, n, rng)};
    const LinearCode other = shuffled_scaled(code, rng);
    const int r = 1 + static_cast<int>(uniform_below(rng, k));
    const int d = static_cast<int>(uniform_below(rng, n + 1));
    CHECK(verify_rbc(code, {r, r, d}).holds ==
          verify_rbc(other, {r, r, d}).holds);
  }
}

TEST_CASE("small exhaustive searches") {
  auto f2 = Field::of_order(2);

  SUBCASE("repetition shape is found") {
    const SearchOutcome out = exists_rbc(f2, 2, 4, {1, 1, 1});
    CHECK(out.status == SearchStatus::found);
    REQUIRE(out.witness.has_value());
    CHECK(verify_rbc(*out.witness, {1, 1, 1}).holds);
  }

  SUBCASE("the Singleton point k + d is reachable at r = k") {
    const SearchOutcome out = exists_rbc(f2, 3, 4, {3, 3, 1});
    CHECK(out.status == SearchStatus::found);
    REQUIRE(out.witness.has_value());
    CHECK(verify_rbc(*out.witness, {3, 3, 1}).holds);
    CHECK(out.witness->n == 4);
  }

  SUBCASE("nothing below the bound at (3, 5, r=2, d=1)") {
    const SearchOutcome out = exists_rbc(f2, 3, 5, {2, 2, 1});
    CHECK(out.status == SearchStatus::exhausted_none);
    CHECK_FALSE(out.witness.has_value());
    CHECK(out.matrices_enumerated == 792);  // C(8 + 5 - 1, 5) multisets
  }

  SUBCASE("query budgets above r are accepted and can beat the r = m sizes") {
    // With two queries per request, k = 2 fits in n = 3 despite one
    // erasure, below the (1,1,1) repetition size k(d+1) = 4.
    const SearchOutcome out = exists_rbc(f2, 2, 3, {1, 2, 1});
    CHECK(out.status == SearchStatus::found);
    REQUIRE(out.witness.has_value());
    CHECK(verify_rbc(*out.witness, {1, 2, 1}).holds);
  }
}

TEST_CASE("found witnesses never violate the block length bound") {
  auto f2 = Field::of_order(2);
  int found = 0, distance_exactly_d = 0;
  for (int k = 2; k <= 3; ++k)
    for (int r = 1; r <= k; ++r)
      for (int d = 0; d <= 2; ++d)
        for (int n = std::max(1, d); n <= 6; ++n) {
          if (k * n > 18) continue;
          const SearchOutcome out = exists_rbc(f2, k, n, {r, r, d});
          if (out.status != SearchStatus::found) continue;
          ++found;
          CHECK(Rational(n) >= theorem_bound(k, r, d).lower_bound);
          // Verified codes also meet the distance the definition implies.
          const int dist = min_distance(*out.witness);
          CHECK(dist >= d);
          if (dist == d) ++distance_exactly_d;
        }
  CHECK(found > 10);
  // Observation only: every witness so far has had distance >= d + 1, a
  // notch above the asserted floor.
  MESSAGE("witnesses with distance exactly d: ", distance_exactly_d, " of ",
          found);
}

TEST_CASE("minimum block length scans") {
  auto f2 = Field::of_order(2);
  CHECK(min_blocklength(f2, 2, {1, 1, 1}, 5) == 4);
  CHECK(min_blocklength(f2, 3, {3, 3, 1}, 5) == 4);
  CHECK_FALSE(min_blocklength(f2, 2, {1, 1, 2}, 5).has_value());  // needs 6

  SearchOptions tiny;
  tiny.budget = 4;  // forces an undecided step
  CHECK_THROWS_AS(min_blocklength(f2, 3, {2, 2, 1}, 6, tiny), budget_error);
}

TEST_CASE("random mode is reproducible and validated") {
  auto f2 = Field::of_order(2);
  SearchOptions opts;
  opts.mode = SearchMode::random;
  opts.seed = 7;
  opts.samples = 200;
  const SearchOutcome a = exists_rbc(f2, 2, 4, {1, 1, 1}, opts);
  const SearchOutcome b = exists_rbc(f2, 2, 4, {1, 1, 1}, opts);
  CHECK(a.status == b.status);
  CHECK(a.matrices_enumerated == b.matrices_enumerated);
  if (a.witness) {
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->gen == b.witness->gen);
    CHECK(verify_rbc(*a.witness, {1, 1, 1}).holds);
  }
  // Random mode never claims exhaustion.
  SearchOptions hopeless = opts;
  hopeless.samples = 5;
  const SearchOutcome c = exists_rbc(f2, 3, 5, {2, 2, 1}, hopeless);
  CHECK(c.status == SearchStatus::inconclusive);

  CHECK_THROWS_AS(exists_rbc(f2, 2, 4, {1, 1, 1}, SearchOptions{
                                 SearchMode::random, 0, 0, 1 << 20, 1, ""}),
                  std::invalid_argument);  // samples required
}

TEST_CASE("scope limits and budgets") {
  auto f2 = Field::of_order(2);
  CHECK_THROWS_AS(exists_rbc(Field::of_order(5), 2, 4, {1, 1, 1}),
                  std::invalid_argument);  // q > 4 exhaustive
  CHECK_THROWS_AS(exists_rbc(f2, 6, 7, {1, 1, 1}), std::invalid_argument);

  SearchOptions small;
  small.budget = 10;
  const SearchOutcome out = exists_rbc(f2, 3, 5, {2, 2, 1}, small);
  CHECK(out.status == SearchStatus::inconclusive);  // never a false negative
}

TEST_CASE("multithreaded search finds the same first witness") {
  auto f2 = Field::of_order(2);
  SearchOptions par;
  par.threads = 4;
  const SearchOutcome a = exists_rbc(f2, 3, 4, {3, 3, 1});
  const SearchOutcome b = exists_rbc(f2, 3, 4, {3, 3, 1}, par);
  CHECK(a.status == b.status);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->gen == b.witness->gen);
  CHECK(a.matrices_enumerated == b.matrices_enumerated);
}

TEST_CASE("the result cache replays outcomes and only accelerates") {
  auto f2 = Field::of_order(2);
  const std::string path =
      (std::filesystem::temp_directory_path() / "rbclab_cache_test.txt")
          .string();
  std::remove(path.c_str());
  SearchOptions opts;
  opts.cache_path = path;

  const SearchOutcome first = exists_rbc(f2, 3, 4, {3, 3, 1}, opts);
  const SearchOutcome replay = exists_rbc(f2, 3, 4, {3, 3, 1}, opts);
  CHECK(first.status == replay.status);
  REQUIRE(replay.witness.has_value());
  CHECK(first.witness->gen == replay.witness->gen);
  CHECK(first.matrices_enumerated == replay.matrices_enumerated);

  // The file is append-only, line per result, and distinct keys coexist.
  const SearchOutcome other = exists_rbc(f2, 2, 3, {1, 1, 1}, opts);
  const SearchOutcome other_replay = exists_rbc(f2, 2, 3, {1, 1, 1}, opts);
  CHECK(other.status == other_replay.status);
  std::ifstream in(path);
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 2);  // cache hits do not re-append
  std::remove(path.c_str());
}

TEST_CASE("search report names field, counters, and witness") {
  auto f2 = Field::of_order(2);
  const std::string found = render_outcome(exists_rbc(f2, 3, 4, {3, 3, 1}));
  CHECK(found.find("status: found") != std::string::npos);
  CHECK(found.find("field: GF(2)") != std::string::npos);
  CHECK(found.find("witness:\n2 3 4\n") != std::string::npos);

  const std::string none = render_outcome(exists_rbc(f2, 3, 5, {2, 2, 1}));
  CHECK(none.find("status: exhausted-none") != std::string::npos);
  CHECK(none.find("matrices_enumerated: 792") != std::string::npos);
  CHECK(none.find("witness: none") != std::string::npos);
}
