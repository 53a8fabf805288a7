#include "rbclab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "bound.hpp"
#include "codes.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "rbc.hpp"
#include "search.hpp"
#include "shrink.hpp"

struct rbclab_field {
  rbclab::FieldPtr impl;
};

struct rbclab_code {
  rbclab::LinearCode impl;
};

struct rbclab_verdict {
  rbclab::VerdictReport impl;
};

struct rbclab_search_result {
  rbclab::SearchOutcome impl;
};

namespace {

thread_local std::string g_last_error = "no error";

rbclab_status fail(rbclab_status s, const char* what) {
  g_last_error = what;
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Converts a 1-based caller array to the sorted 0-based internal form.
std::vector<int> internal_set(const int* data, int len, const char* what) {
  if (len < 0) throw std::invalid_argument(std::string(what) + ": negative length");
  if (len > 0 && !data)
    throw std::invalid_argument(std::string(what) + ": null pointer");
  std::vector<int> out(data, data + len);
  for (int& v : out) --v;
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Fn>
rbclab_status wrap(Fn&& fn) {
  try {
    fn();
    return RBCLAB_OK;
  } catch (const rbclab::parse_error& e) {
    return fail(RBCLAB_E_PARSE, e.what());
  } catch (const rbclab::budget_error& e) {
    return fail(RBCLAB_E_BUDGET, e.what());
  } catch (const rbclab::io_error& e) {
    return fail(RBCLAB_E_IO, e.what());
  } catch (const std::domain_error& e) {
    return fail(RBCLAB_E_INVALID, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RBCLAB_E_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return fail(RBCLAB_E_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(RBCLAB_E_INTERNAL, e.what());
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

rbclab::VerifyOptions verify_options(const rbclab_verify_options* opts) {
  rbclab::VerifyOptions out;
  if (!opts) return out;
  require(opts->strategy == RBCLAB_STRATEGY_NAIVE ||
              opts->strategy == RBCLAB_STRATEGY_LEMMA1,
          "unknown strategy");
  out.strategy = opts->strategy == RBCLAB_STRATEGY_NAIVE
                     ? rbclab::Strategy::naive
                     : rbclab::Strategy::lemma1;
  out.collect_witnesses = opts->collect_witnesses != 0;
  out.threads = opts->threads;
  if (opts->pair_budget != 0) out.pair_budget = opts->pair_budget;
  return out;
}

rbclab::SearchOptions search_options(const rbclab_search_options* opts) {
  rbclab::SearchOptions out;
  if (!opts) return out;
  require(opts->mode == RBCLAB_SEARCH_EXHAUSTIVE ||
              opts->mode == RBCLAB_SEARCH_RANDOM,
          "unknown search mode");
  out.mode = opts->mode == RBCLAB_SEARCH_EXHAUSTIVE
                 ? rbclab::SearchMode::exhaustive
                 : rbclab::SearchMode::random;
  out.seed = opts->seed;
  out.samples = opts->samples;
  if (opts->budget != 0) out.budget = opts->budget;
  out.threads = opts->threads;
  if (opts->cache_path) out.cache_path = opts->cache_path;
  return out;
}

}  // namespace

extern "C" {

const char* rbclab_status_name(rbclab_status s) {
  switch (s) {
    case RBCLAB_OK: return "ok";
    case RBCLAB_E_INVALID: return "invalid-argument";
    case RBCLAB_E_PARSE: return "parse-error";
    case RBCLAB_E_BUDGET: return "budget-exceeded";
    case RBCLAB_E_IO: return "io-error";
    default: return "internal-error";
  }
}

const char* rbclab_last_error(void) { return g_last_error.c_str(); }

void rbclab_string_free(char* s) { std::free(s); }

/* ---------------- fields ---------------- */

rbclab_status rbclab_field_new(int p, int e, const int* poly, int poly_len,
                               rbclab_field** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    std::vector<int> coeffs;
    if (poly && poly_len > 0) coeffs.assign(poly, poly + poly_len);
    *out = new rbclab_field{rbclab::Field::make(p, e, std::move(coeffs))};
  });
}

rbclab_status rbclab_field_from_order(int q, rbclab_field** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = new rbclab_field{rbclab::Field::of_order(q)};
  });
}

void rbclab_field_free(rbclab_field* f) { delete f; }

int rbclab_field_order(const rbclab_field* f) {
  return f ? f->impl->order() : 0;
}
int rbclab_field_characteristic(const rbclab_field* f) {
  return f ? f->impl->characteristic() : 0;
}
int rbclab_field_degree(const rbclab_field* f) {
  return f ? f->impl->degree() : 0;
}

#define RBCLAB_FIELD_BINOP(name, method)                                      \
  rbclab_status name(const rbclab_field* f, int a, int b, int* out) {         \
    return wrap([&] {                                                         \
      require(f && out, "null pointer");                                      \
      *out = f->impl->method(a, b);                                           \
    });                                                                       \
  }

RBCLAB_FIELD_BINOP(rbclab_field_add, add)
RBCLAB_FIELD_BINOP(rbclab_field_sub, sub)
RBCLAB_FIELD_BINOP(rbclab_field_mul, mul)

#undef RBCLAB_FIELD_BINOP

rbclab_status rbclab_field_neg(const rbclab_field* f, int a, int* out) {
  return wrap([&] {
    require(f && out, "null pointer");
    *out = f->impl->neg(a);
  });
}

rbclab_status rbclab_field_inv(const rbclab_field* f, int a, int* out) {
  return wrap([&] {
    require(f && out, "null pointer");
    *out = f->impl->inv(a);
  });
}

/* ---------------- codes ---------------- */

rbclab_status rbclab_code_new(const rbclab_field* f, int k, int n,
                              const int* entries, rbclab_code** out) {
  return wrap([&] {
    require(f && out, "null pointer");
    require(k >= 0 && n >= 0, "negative dimensions");
    require(entries != nullptr || k * n == 0, "null entries");
    rbclab::Matrix g(f->impl, k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) g.set(i, j, entries[i * n + j]);
    *out = new rbclab_code{rbclab::LinearCode(std::move(g))};
  });
}

rbclab_status rbclab_code_parse(const char* text, rbclab_code** out) {
  return wrap([&] {
    require(text && out, "null pointer");
    *out = new rbclab_code{rbclab::parse_code(text)};
  });
}

rbclab_status rbclab_code_read(const char* path, rbclab_code** out) {
  return wrap([&] {
    require(path && out, "null pointer");
    *out = new rbclab_code{rbclab::read_code_file(path)};
  });
}

rbclab_status rbclab_code_format(const rbclab_code* c, char** out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = dup_string(rbclab::format_code(c->impl));
    require(*out != nullptr, "out of memory");
  });
}

rbclab_status rbclab_code_write(const rbclab_code* c, const char* path) {
  return wrap([&] {
    require(c && path, "null pointer");
    rbclab::write_code_file(c->impl, path);
  });
}

void rbclab_code_free(rbclab_code* c) { delete c; }

int rbclab_code_k(const rbclab_code* c) { return c ? c->impl.k : 0; }
int rbclab_code_n(const rbclab_code* c) { return c ? c->impl.n : 0; }
int rbclab_code_field_order(const rbclab_code* c) {
  return c ? c->impl.field->order() : 0;
}

rbclab_status rbclab_code_entry(const rbclab_code* c, int row, int col,
                                int* out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = c->impl.gen.at(row - 1, col - 1);
  });
}

rbclab_status rbclab_encode(const rbclab_code* c, const int* x, int* out) {
  return wrap([&] {
    require(c && out, "null pointer");
    require(x != nullptr || c->impl.k == 0, "null message");
    const std::vector<int> msg(x, x + c->impl.k);
    const std::vector<int> word = rbclab::encode(c->impl, msg);
    std::copy(word.begin(), word.end(), out);
  });
}

rbclab_status rbclab_code_rank(const rbclab_code* c, int* out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = c->impl.gen.rank();
  });
}

rbclab_status rbclab_code_min_distance(const rbclab_code* c, uint64_t budget,
                                       int* out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = rbclab::min_distance(c->impl,
                                budget ? budget : rbclab::kDefaultEnumBudget);
  });
}

rbclab_status rbclab_code_is_mds(const rbclab_code* c, uint64_t budget,
                                 int* out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = rbclab::is_mds(c->impl,
                          budget ? budget : rbclab::kDefaultEnumBudget)
               ? 1
               : 0;
  });
}

rbclab_status rbclab_construct_repetition(const rbclab_field* f, int k, int d,
                                          rbclab_code** out) {
  return wrap([&] {
    require(f && out, "null pointer");
    *out = new rbclab_code{rbclab::construct_repetition(f->impl, k, d)};
  });
}

rbclab_status rbclab_construct_mds(const rbclab_field* f, int k, int d,
                                   rbclab_code** out) {
  return wrap([&] {
    require(f && out, "null pointer");
    *out = new rbclab_code{rbclab::construct_mds(f->impl, k, d)};
  });
}

rbclab_status rbclab_construct_block_rs(const rbclab_field* f, int k, int d,
                                        int lambda, rbclab_code** out) {
  return wrap([&] {
    require(f && out, "null pointer");
    *out = new rbclab_code{rbclab::construct_block_rs(f->impl, k, d, lambda)};
  });
}

/* ---------------- verification ---------------- */

rbclab_status rbclab_determines(const rbclab_code* c, const int* I, int ilen,
                                const int* J, int jlen, int* out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = rbclab::determines(c->impl, internal_set(I, ilen, "I"),
                              internal_set(J, jlen, "J"))
               ? 1
               : 0;
  });
}

rbclab_status rbclab_lemma1_check(const rbclab_code* c, const int* I, int ilen,
                                  const int* J, int jlen, int* out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = rbclab::lemma1_check(c->impl, internal_set(I, ilen, "I"),
                                internal_set(J, jlen, "J"))
               ? 1
               : 0;
  });
}

rbclab_status rbclab_find_repair_set(const rbclab_code* c, const int* I,
                                     int ilen, const int* D, int dlen, int m,
                                     rbclab_strategy strategy, int* J_out,
                                     int* jlen, int* found) {
  return wrap([&] {
    require(c && jlen && found, "null pointer");
    require(J_out != nullptr || m == 0, "null repair buffer");
    require(strategy == RBCLAB_STRATEGY_NAIVE ||
                strategy == RBCLAB_STRATEGY_LEMMA1,
            "unknown strategy");
    auto J = rbclab::find_repair_set(
        c->impl, internal_set(I, ilen, "I"), internal_set(D, dlen, "D"), m,
        strategy == RBCLAB_STRATEGY_NAIVE ? rbclab::Strategy::naive
                                          : rbclab::Strategy::lemma1);
    if (J) {
      *found = 1;
      *jlen = static_cast<int>(J->size());
      for (size_t t = 0; t < J->size(); ++t) J_out[t] = (*J)[t] + 1;
    } else {
      *found = 0;
      *jlen = 0;
    }
  });
}

rbclab_status rbclab_verify(const rbclab_code* c, int r, int m, int d,
                            const rbclab_verify_options* opts,
                            rbclab_verdict** out) {
  return wrap([&] {
    require(c && out, "null pointer");
    *out = new rbclab_verdict{
        rbclab::verify_rbc(c->impl, {r, m, d}, verify_options(opts))};
  });
}

int rbclab_verdict_holds(const rbclab_verdict* v) {
  return v && v->impl.holds ? 1 : 0;
}

rbclab_status rbclab_verdict_counterexample(const rbclab_verdict* v,
                                            int* I_out, int* ilen, int* D_out,
                                            int* dlen, int* present) {
  return wrap([&] {
    require(v && present, "null pointer");
    if (!v->impl.counterexample) {
      *present = 0;
      if (ilen) *ilen = 0;
      if (dlen) *dlen = 0;
      return;
    }
    require(I_out && ilen && D_out && dlen, "null pointer");
    const auto& [I, D] = *v->impl.counterexample;
    *present = 1;
    *ilen = static_cast<int>(I.size());
    *dlen = static_cast<int>(D.size());
    for (size_t t = 0; t < I.size(); ++t) I_out[t] = I[t] + 1;
    for (size_t t = 0; t < D.size(); ++t) D_out[t] = D[t] + 1;
  });
}

rbclab_status rbclab_verdict_stats(const rbclab_verdict* v, uint64_t* pairs,
                                   uint64_t* candidates) {
  return wrap([&] {
    require(v, "null pointer");
    if (pairs) *pairs = v->impl.stats.pairs_checked;
    if (candidates) *candidates = v->impl.stats.j_candidates_examined;
  });
}

rbclab_status rbclab_verdict_render(const rbclab_verdict* v, char** out) {
  return wrap([&] {
    require(v && out, "null pointer");
    *out = dup_string(rbclab::render_verdict(v->impl));
    require(*out != nullptr, "out of memory");
  });
}

void rbclab_verdict_free(rbclab_verdict* v) { delete v; }

/* ---------------- bound ---------------- */

rbclab_status rbclab_theorem_bound(long long k, long long r, long long d,
                                   rbclab_bound_result* out) {
  return wrap([&] {
    require(out != nullptr, "null pointer");
    const rbclab::BoundResult b = rbclab::theorem_bound(k, r, d);
    out->num = b.lower_bound.num;
    out->den = b.lower_bound.den;
    out->lower_bound_int = b.lower_bound_int;
    out->repetition_optimal =
        b.regime == rbclab::Regime::repetition_optimal ? 1 : 0;
    out->threshold_r = b.threshold_r;
  });
}

rbclab_status rbclab_repetition_threshold(long long k, long long d,
                                          double* out) {
  return wrap([&] {
    require(out != nullptr, "null pointer");
    *out = rbclab::repetition_threshold(k, d);
  });
}

rbclab_status rbclab_figure_csv(long long k, const long long* d_list,
                                int d_count, char** out) {
  return wrap([&] {
    require(out != nullptr, "null pointer");
    require(d_list != nullptr && d_count > 0, "empty d list");
    const std::vector<long long> ds(d_list, d_list + d_count);
    *out = dup_string(rbclab::figure_csv(k, ds, 1, k));
    require(*out != nullptr, "out of memory");
  });
}

/* ---------------- shrink ---------------- */

rbclab_status rbclab_shrink_once(const rbclab_code* c, int r, int d,
                                 rbclab_code** reduced, char** log) {
  return wrap([&] {
    require(c, "null pointer");
    auto [code, step] = rbclab::shrink_once(c->impl, {r, r, d});
    if (log) {
      *log = dup_string(rbclab::render_step(step, 1) + "\n");
      require(*log != nullptr, "out of memory");
    }
    if (reduced) *reduced = new rbclab_code{std::move(code)};
  });
}

rbclab_status rbclab_shrink_chain(const rbclab_code* c, int r, int d,
                                  int verify_each, rbclab_code** final_code,
                                  char** log) {
  return wrap([&] {
    require(c, "null pointer");
    rbclab::ShrinkTrace trace =
        rbclab::shrink_chain(c->impl, {r, r, d}, verify_each != 0);
    if (log) {
      *log = dup_string(rbclab::render_trace(trace));
      require(*log != nullptr, "out of memory");
    }
    if (final_code) {
      require(trace.final_code.has_value(), "no final code produced");
      *final_code = new rbclab_code{std::move(*trace.final_code)};
    }
  });
}

/* ---------------- search ---------------- */

rbclab_status rbclab_search_exists(const rbclab_field* f, int k, int n, int r,
                                   int m, int d,
                                   const rbclab_search_options* opts,
                                   rbclab_search_result** out) {
  return wrap([&] {
    require(f && out, "null pointer");
    *out = new rbclab_search_result{
        rbclab::exists_rbc(f->impl, k, n, {r, m, d}, search_options(opts))};
  });
}

rbclab_search_status rbclab_search_result_status(
    const rbclab_search_result* s) {
  if (!s) return RBCLAB_SEARCH_INCONCLUSIVE;
  switch (s->impl.status) {
    case rbclab::SearchStatus::found:
      return RBCLAB_SEARCH_FOUND;
    case rbclab::SearchStatus::exhausted_none:
      return RBCLAB_SEARCH_EXHAUSTED_NONE;
    default:
      return RBCLAB_SEARCH_INCONCLUSIVE;
  }
}

rbclab_status rbclab_search_result_witness(const rbclab_search_result* s,
                                           rbclab_code** out) {
  return wrap([&] {
    require(s && out, "null pointer");
    require(s->impl.witness.has_value(), "search result has no witness");
    *out = new rbclab_code{*s->impl.witness};
  });
}

rbclab_status rbclab_search_result_counters(const rbclab_search_result* s,
                                            uint64_t* enumerated,
                                            uint64_t* after_pruning) {
  return wrap([&] {
    require(s, "null pointer");
    if (enumerated) *enumerated = s->impl.matrices_enumerated;
    if (after_pruning) *after_pruning = s->impl.matrices_after_pruning;
  });
}

rbclab_status rbclab_search_result_render(const rbclab_search_result* s,
                                          char** out) {
  return wrap([&] {
    require(s && out, "null pointer");
    *out = dup_string(rbclab::render_outcome(s->impl));
    require(*out != nullptr, "out of memory");
  });
}

void rbclab_search_result_free(rbclab_search_result* s) { delete s; }

rbclab_status rbclab_min_blocklength(const rbclab_field* f, int k, int r,
                                     int m, int d, int n_max,
                                     const rbclab_search_options* opts,
                                     int* found, int* n_out) {
  return wrap([&] {
    require(f && found, "null pointer");
    auto n = rbclab::min_blocklength(f->impl, k, {r, m, d}, n_max,
                                     search_options(opts));
    *found = n.has_value() ? 1 : 0;
    if (n && n_out) *n_out = *n;
  });
}

} /* extern "C" */
