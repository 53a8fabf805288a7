// Exercises the shared-library surface only: everything here goes through
// rbclab.h, with no access to the C++ internals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "rbclab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rbclab_string_free(s);
  return out;
}

struct Field {
  rbclab_field* h = nullptr;
  explicit Field(int q) { REQUIRE(rbclab_field_from_order(q, &h) == RBCLAB_OK); }
  ~Field() { rbclab_field_free(h); }
};

struct Code {
  rbclab_code* h = nullptr;
  Code() = default;
  explicit Code(rbclab_code* c) : h(c) {}
  ~Code() { rbclab_code_free(h); }
};

}  // namespace

TEST_CASE("field handles and arithmetic") {
  Field f5(5);
  CHECK(rbclab_field_order(f5.h) == 5);
  CHECK(rbclab_field_characteristic(f5.h) == 5);
  CHECK(rbclab_field_degree(f5.h) == 1);
  int out = -1;
  CHECK(rbclab_field_add(f5.h, 3, 4, &out) == RBCLAB_OK);
  CHECK(out == 2);
  CHECK(rbclab_field_inv(f5.h, 2, &out) == RBCLAB_OK);
  CHECK(out == 3);
  CHECK(rbclab_field_inv(f5.h, 0, &out) == RBCLAB_E_INVALID);
  CHECK(std::string(rbclab_last_error()).find("zero") != std::string::npos);

  Field f4(4);
  CHECK(rbclab_field_mul(f4.h, 2, 2, &out) == RBCLAB_OK);
  CHECK(out == 3);

  rbclab_field* custom = nullptr;
  const int poly[] = {1, 1, 1};
  CHECK(rbclab_field_new(2, 2, poly, 3, &custom) == RBCLAB_OK);
  rbclab_field_free(custom);

  rbclab_field* bad = nullptr;
  CHECK(rbclab_field_from_order(6, &bad) == RBCLAB_E_INVALID);
  CHECK(rbclab_field_new(4, 1, nullptr, 0, &bad) == RBCLAB_E_INVALID);
}

TEST_CASE("codes round trip through text and files") {
  Field f2(2);
  const int entries[] = {1, 0, 1, 0, 1, 1};
  rbclab_code* raw = nullptr;
  REQUIRE(rbclab_code_new(f2.h, 2, 3, entries, &raw) == RBCLAB_OK);
  Code code(raw);
  CHECK(rbclab_code_k(code.h) == 2);
  CHECK(rbclab_code_n(code.h) == 3);
  CHECK(rbclab_code_field_order(code.h) == 2);

  int v = -1;
  CHECK(rbclab_code_entry(code.h, 1, 3, &v) == RBCLAB_OK);  // 1-based
  CHECK(v == 1);
  CHECK(rbclab_code_entry(code.h, 0, 1, &v) == RBCLAB_E_INVALID);

  char* text = nullptr;
  REQUIRE(rbclab_code_format(code.h, &text) == RBCLAB_OK);
  const std::string formatted = take(text);
  CHECK(formatted == "2 2 3\n1 0 1\n0 1 1\n");

  rbclab_code* reparsed = nullptr;
  REQUIRE(rbclab_code_parse(formatted.c_str(), &reparsed) == RBCLAB_OK);
  Code copy(reparsed);
  char* again = nullptr;
  REQUIRE(rbclab_code_format(copy.h, &again) == RBCLAB_OK);
  CHECK(take(again) == formatted);

  const std::string path =
      (std::filesystem::temp_directory_path() / "rbclab_capi_code.txt")
          .string();
  CHECK(rbclab_code_write(code.h, path.c_str()) == RBCLAB_OK);
  rbclab_code* from_file = nullptr;
  REQUIRE(rbclab_code_read(path.c_str(), &from_file) == RBCLAB_OK);
  Code file_code(from_file);
  char* third = nullptr;
  REQUIRE(rbclab_code_format(file_code.h, &third) == RBCLAB_OK);
  CHECK(take(third) == formatted);
  std::remove(path.c_str());

  rbclab_code* broken = nullptr;
  CHECK(rbclab_code_parse("2 2 2\n1 0\n", &broken) == RBCLAB_E_PARSE);
  CHECK(rbclab_code_read("/nonexistent/code.txt", &broken) == RBCLAB_E_IO);

  int word[3] = {-1, -1, -1};
  const int msg[] = {1, 1};
  CHECK(rbclab_encode(code.h, msg, word) == RBCLAB_OK);
  CHECK(word[0] == 1);
  CHECK(word[1] == 1);
  CHECK(word[2] == 0);

  int rank = 0, dist = 0, mds = -1;
  CHECK(rbclab_code_rank(code.h, &rank) == RBCLAB_OK);
  CHECK(rank == 2);
  CHECK(rbclab_code_min_distance(code.h, 0, &dist) == RBCLAB_OK);
  CHECK(dist == 2);
  CHECK(rbclab_code_is_mds(code.h, 0, &mds) == RBCLAB_OK);
  CHECK(mds == 1);
}

TEST_CASE("constructions, determination, and verification") {
  Field f2(2);
  rbclab_code* raw = nullptr;
  REQUIRE(rbclab_construct_repetition(f2.h, 2, 1, &raw) == RBCLAB_OK);
  Code rep(raw);

  const int I[] = {1};
  const int D[] = {1};
  const int J[] = {2};
  int yes = 0;
  CHECK(rbclab_determines(rep.h, I, 1, J, 1, &yes) == RBCLAB_OK);
  CHECK(yes == 1);
  CHECK(rbclab_lemma1_check(rep.h, I, 1, J, 1, &yes) == RBCLAB_OK);
  CHECK(yes == 1);

  int repair[4] = {0};
  int rlen = 0, found = 0;
  CHECK(rbclab_find_repair_set(rep.h, I, 1, D, 1, 1, RBCLAB_STRATEGY_NAIVE,
                               repair, &rlen, &found) == RBCLAB_OK);
  CHECK(found == 1);
  CHECK(rlen == 1);
  CHECK(repair[0] == 2);

  rbclab_verdict* verdict = nullptr;
  REQUIRE(rbclab_verify(rep.h, 1, 1, 1, nullptr, &verdict) == RBCLAB_OK);
  CHECK(rbclab_verdict_holds(verdict) == 1);
  uint64_t pairs = 0, cands = 0;
  CHECK(rbclab_verdict_stats(verdict, &pairs, &cands) == RBCLAB_OK);
  CHECK(pairs == 8);  // C(2,1) * C(4,1)
  rbclab_verdict_free(verdict);

  // A failing verification exposes the 1-based counterexample.
  const int id_entries[] = {1, 0, 0, 1};
  rbclab_code* raw_id = nullptr;
  REQUIRE(rbclab_code_new(f2.h, 2, 2, id_entries, &raw_id) == RBCLAB_OK);
  Code id(raw_id);
  rbclab_verdict* bad = nullptr;
  REQUIRE(rbclab_verify(id.h, 1, 1, 1, nullptr, &bad) == RBCLAB_OK);
  CHECK(rbclab_verdict_holds(bad) == 0);
  int ce_i[2], ce_d[2], ilen = 0, dlen = 0, present = 0;
  CHECK(rbclab_verdict_counterexample(bad, ce_i, &ilen, ce_d, &dlen,
                                      &present) == RBCLAB_OK);
  CHECK(present == 1);
  CHECK(ilen == 1);
  CHECK(ce_i[0] == 1);
  CHECK(ce_d[0] == 1);
  char* report = nullptr;
  REQUIRE(rbclab_verdict_render(bad, &report) == RBCLAB_OK);
  CHECK(take(report).find("\"holds\": false") != std::string::npos);
  rbclab_verdict_free(bad);

  // lemma1 strategy demands m = r.
  rbclab_verify_options opts{};
  opts.strategy = RBCLAB_STRATEGY_LEMMA1;
  rbclab_verdict* nope = nullptr;
  CHECK(rbclab_verify(rep.h, 1, 2, 1, &opts, &nope) == RBCLAB_E_INVALID);

  rbclab_code* mds = nullptr;
  Field f5(5);
  REQUIRE(rbclab_construct_mds(f5.h, 2, 2, &mds) == RBCLAB_OK);
  Code mds_code(mds);
  rbclab_verdict* mds_verdict = nullptr;
  REQUIRE(rbclab_verify(mds_code.h, 2, 2, 2, nullptr, &mds_verdict) ==
          RBCLAB_OK);
  CHECK(rbclab_verdict_holds(mds_verdict) == 1);
  rbclab_verdict_free(mds_verdict);

  rbclab_code* blk = nullptr;
  CHECK(rbclab_construct_block_rs(f5.h, 4, 2, 2, &blk) == RBCLAB_OK);
  CHECK(rbclab_code_n(blk) == 8);
  rbclab_code_free(blk);
  CHECK(rbclab_construct_mds(f2.h, 2, 2, &blk) == RBCLAB_E_INVALID);
}

TEST_CASE("bound and figure emitter") {
  rbclab_bound_result b{};
  CHECK(rbclab_theorem_bound(3, 2, 1, &b) == RBCLAB_OK);
  CHECK(b.num == 11);
  CHECK(b.den == 2);
  CHECK(b.lower_bound_int == 6);
  CHECK(b.repetition_optimal == 0);

  CHECK(rbclab_theorem_bound(100, 100, 2, &b) == RBCLAB_OK);
  CHECK(b.num == 102);
  CHECK(b.den == 1);
  CHECK(b.repetition_optimal == 0);

  CHECK(rbclab_theorem_bound(100, 1, 2, &b) == RBCLAB_OK);
  CHECK(b.num == 300);
  CHECK(b.repetition_optimal == 1);

  CHECK(rbclab_theorem_bound(0, 1, 1, &b) == RBCLAB_E_INVALID);

  double threshold = 0;
  CHECK(rbclab_repetition_threshold(100, 0, &threshold) == RBCLAB_OK);
  CHECK(threshold == doctest::Approx(100.0));

  const long long ds[] = {2, 4};
  char* csv = nullptr;
  REQUIRE(rbclab_figure_csv(10, ds, 2, &csv) == RBCLAB_OK);
  const std::string table = take(csv);
  CHECK(table.rfind("d,r,rate_upper_bound\n", 0) == 0);
  CHECK(table.find("2,1,0.333333\n") != std::string::npos);
}

TEST_CASE("shrink through the C interface") {
  Field f2(2);
  const int entries[] = {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1};
  rbclab_code* raw = nullptr;
  REQUIRE(rbclab_code_new(f2.h, 3, 4, entries, &raw) == RBCLAB_OK);
  Code parity(raw);

  rbclab_code* reduced = nullptr;
  char* log = nullptr;
  REQUIRE(rbclab_shrink_once(parity.h, 3, 1, &reduced, &log) == RBCLAB_OK);
  Code reduced_code(reduced);
  CHECK(rbclab_code_k(reduced_code.h) == 2);
  CHECK(rbclab_code_n(reduced_code.h) == 2);
  CHECK(take(log).find("step 1: i=1") != std::string::npos);

  rbclab_code* final_code = nullptr;
  char* trace = nullptr;
  REQUIRE(rbclab_shrink_chain(parity.h, 3, 1, 1, &final_code, &trace) ==
          RBCLAB_OK);
  Code final_wrap(final_code);
  CHECK(take(trace).find("singleton_check: n_final=4 >= r+d=4: pass") !=
        std::string::npos);

  // The repetition code sits at n = k(d+1): nothing to reduce.
  rbclab_code* rep = nullptr;
  REQUIRE(rbclab_construct_repetition(f2.h, 2, 1, &rep) == RBCLAB_OK);
  Code rep_code(rep);
  CHECK(rbclab_shrink_once(rep_code.h, 2, 1, &reduced, &log) ==
        RBCLAB_E_INVALID);
}

TEST_CASE("search through the C interface") {
  Field f2(2);
  rbclab_search_result* result = nullptr;
  REQUIRE(rbclab_search_exists(f2.h, 3, 4, 3, 3, 1, nullptr, &result) ==
          RBCLAB_OK);
  CHECK(rbclab_search_result_status(result) == RBCLAB_SEARCH_FOUND);
  rbclab_code* witness = nullptr;
  REQUIRE(rbclab_search_result_witness(result, &witness) == RBCLAB_OK);
  Code w(witness);
  CHECK(rbclab_code_n(w.h) == 4);
  uint64_t enumerated = 0, pruned = 0;
  CHECK(rbclab_search_result_counters(result, &enumerated, &pruned) ==
        RBCLAB_OK);
  CHECK(enumerated > 0);
  char* text = nullptr;
  REQUIRE(rbclab_search_result_render(result, &text) == RBCLAB_OK);
  CHECK(take(text).find("status: found") != std::string::npos);
  rbclab_search_result_free(result);

  int found = -1, n_out = 0;
  REQUIRE(rbclab_min_blocklength(f2.h, 3, 2, 2, 1, 6, nullptr, &found,
                                 &n_out) == RBCLAB_OK);
  CHECK(found == 1);
  CHECK(n_out == 6);

  // Exhaustive scope guard surfaces as an invalid argument.
  Field f5(5);
  CHECK(rbclab_search_exists(f5.h, 2, 4, 1, 1, 1, nullptr, &result) ==
        RBCLAB_E_INVALID);
  CHECK(rbclab_status_name(RBCLAB_E_INVALID) ==
        std::string("invalid-argument"));
}
