// Command-line front end for the robust batch code laboratory. Talks to
// the shared library exclusively through the C API in rbclab.h.
//
// Exit codes: 0 success (for `verify`, the property holds); 1 the verified
// property does not hold; 2 operational error (bad flags, parse failures,
// violated preconditions, exceeded budgets, I/O).

#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbclab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "rbclab: " << message << '\n';
  std::exit(kExitError);
}

void check(rbclab_status status) {
  if (status != RBCLAB_OK) die(rbclab_last_error());
}

// Writes to the -o path when given, standard output otherwise.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) die("cannot open '" + out_path + "' for writing");
  out << text;
  if (!out) die("write to '" + out_path + "' failed");
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  rbclab_string_free(s);
  return out;
}

using FieldHandle = std::unique_ptr<rbclab_field, decltype(&rbclab_field_free)>;
using CodeHandle = std::unique_ptr<rbclab_code, decltype(&rbclab_code_free)>;

FieldHandle open_field(int q) {
  rbclab_field* f = nullptr;
  check(rbclab_field_from_order(q, &f));
  return {f, rbclab_field_free};
}

CodeHandle open_code(const std::string& path) {
  rbclab_code* c = nullptr;
  check(rbclab_code_read(path.c_str(), &c));
  return {c, rbclab_code_free};
}

rbclab_strategy parse_strategy(const std::string& name) {
  if (name == "naive") return RBCLAB_STRATEGY_NAIVE;
  if (name == "lemma1") return RBCLAB_STRATEGY_LEMMA1;
  die("unknown strategy '" + name + "' (expected naive or lemma1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust batch code laboratory"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check the recovery property of a generator matrix");
  std::string verify_code_path, verify_strategy = "naive", verify_out;
  int verify_r = 1, verify_m = 1, verify_d = 0, verify_threads = 1;
  std::uint64_t verify_budget = 0;
  bool verify_witnesses = false;
  verify->add_option("--code", verify_code_path, "matrix file")->required();
  verify->add_option("-r", verify_r, "requested message symbols")->required();
  verify->add_option("-m", verify_m, "query budget")->required();
  verify->add_option("-d", verify_d, "erasure budget")->required();
  verify->add_option("--strategy", verify_strategy, "naive|lemma1");
  verify->add_option("--threads", verify_threads, "worker threads");
  verify->add_option("--budget", verify_budget, "cap on C(k,r)*C(n,d)");
  verify->add_flag("--witnesses", verify_witnesses,
                   "include a repair set per (I, D) in the report");
  verify->add_option("-o", verify_out, "report file (default stdout)");

  // bound
  auto* bound = app.add_subcommand(
      "bound", "block length lower bound for an (r,r,d) code");
  long long bound_k = 1, bound_r = 1, bound_d = 0;
  std::string bound_out;
  bound->add_option("-k", bound_k, "message length")->required();
  bound->add_option("-r", bound_r, "requested message symbols")->required();
  bound->add_option("-d", bound_d, "erasure budget")->required();
  bound->add_option("-o", bound_out, "output file (default stdout)");

  // construct
  auto* construct =
      app.add_subcommand("construct", "emit a reference generator matrix");
  std::string construct_kind, construct_out;
  int construct_q = 2, construct_k = 1, construct_d = 0, construct_lambda = 1;
  construct->add_option("--kind", construct_kind, "repetition|mds|blockrs")
      ->required();
  construct->add_option("-q", construct_q, "field order")->required();
  construct->add_option("-k", construct_k, "message length")->required();
  construct->add_option("-d", construct_d, "erasure budget")->required();
  construct->add_option("--lambda", construct_lambda,
                        "block size (blockrs only)");
  construct->add_option("-o", construct_out, "matrix file (default stdout)");

  // shrink
  auto* shrink = app.add_subcommand(
      "shrink", "apply the message-row removal reduction");
  std::string shrink_code_path, shrink_out;
  int shrink_r = 1, shrink_d = 0;
  bool shrink_chain = false, shrink_verify_each = false;
  shrink->add_option("--code", shrink_code_path, "matrix file")->required();
  shrink->add_option("-r", shrink_r, "requested message symbols")->required();
  shrink->add_option("-d", shrink_d, "erasure budget")->required();
  shrink->add_flag("--chain", shrink_chain,
                   "apply k-r steps and report the full trace");
  shrink->add_flag("--verify-each", shrink_verify_each,
                   "verify every intermediate code (chain mode)");
  shrink->add_option("-o", shrink_out, "write the reduced matrix here");

  // search
  auto* search =
      app.add_subcommand("search", "look for a code with the given shape");
  int search_q = 2, search_k = 1, search_n = 1;
  int search_r = 1, search_m = 1, search_d = 0, search_threads = 1;
  std::string search_mode = "exhaustive", search_cache;
  std::uint64_t search_seed = 0, search_samples = 0, search_budget = 0;
  bool search_seed_given = false;
  search->add_option("-q", search_q, "field order")->required();
  search->add_option("-k", search_k, "message length")->required();
  search->add_option("-n", search_n, "block length")->required();
  search->add_option("-r", search_r, "requested message symbols")->required();
  search->add_option("-m", search_m, "query budget")->required();
  search->add_option("-d", search_d, "erasure budget")->required();
  search->add_option("--mode", search_mode, "exhaustive|random");
  auto* seed_opt = search->add_option("--seed", search_seed,
                                      "random mode seed (required there)");
  search->add_option("--samples", search_samples, "random mode sample count");
  search->add_option("--budget", search_budget, "cap on candidate matrices");
  search->add_option("--threads", search_threads, "worker threads");
  search->add_option("--cache", search_cache, "append-only result cache file");

  // figure
  auto* figure = app.add_subcommand(
      "figure", "rate upper bound table as CSV, one row per (d, r)");
  long long figure_k = 100;
  std::vector<long long> figure_d_list;
  std::string figure_out;
  figure->add_option("-k", figure_k, "message length")->required();
  figure->add_option("--d-list", figure_d_list, "erasure budgets")
      ->required()
      ->delimiter(',');
  figure->add_option("-o", figure_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "rbclab: " << e.what() << '\n';
    return kExitError;
  }
  search_seed_given = seed_opt->count() > 0;

  if (*verify) {
    CodeHandle code = open_code(verify_code_path);
    rbclab_verify_options opts{};
    opts.strategy = parse_strategy(verify_strategy);
    opts.collect_witnesses = verify_witnesses ? 1 : 0;
    opts.threads = verify_threads;
    opts.pair_budget = verify_budget;
    rbclab_verdict* verdict = nullptr;
    check(rbclab_verify(code.get(), verify_r, verify_m, verify_d, &opts,
                        &verdict));
    char* text = nullptr;
    check(rbclab_verdict_render(verdict, &text));
    emit(take_string(text), verify_out);
    const bool holds = rbclab_verdict_holds(verdict) != 0;
    rbclab_verdict_free(verdict);
    return holds ? kExitOk : kExitPropertyFails;
  }

  if (*bound) {
    rbclab_bound_result result{};
    check(rbclab_theorem_bound(bound_k, bound_r, bound_d, &result));
    std::string text;
    text += "k: " + std::to_string(bound_k) + "\n";
    text += "r: " + std::to_string(bound_r) + "\n";
    text += "d: " + std::to_string(bound_d) + "\n";
    text += "lower_bound: " + std::to_string(result.num);
    if (result.den != 1) text += "/" + std::to_string(result.den);
    text += "\n";
    text += "lower_bound_int: " + std::to_string(result.lower_bound_int) + "\n";
    text += std::string("regime: ") + (result.repetition_optimal
                                           ? "repetition_optimal"
                                           : "penalty_active") + "\n";
    char threshold[64];
    std::snprintf(threshold, sizeof(threshold), "%.6f", result.threshold_r);
    text += std::string("threshold_r: ") + threshold + "\n";
    emit(text, bound_out);
    return kExitOk;
  }

  if (*construct) {
    FieldHandle field = open_field(construct_q);
    rbclab_code* out = nullptr;
    if (construct_kind == "repetition") {
      check(rbclab_construct_repetition(field.get(), construct_k, construct_d,
                                        &out));
    } else if (construct_kind == "mds") {
      check(rbclab_construct_mds(field.get(), construct_k, construct_d, &out));
    } else if (construct_kind == "blockrs") {
      check(rbclab_construct_block_rs(field.get(), construct_k, construct_d,
                                      construct_lambda, &out));
    } else {
      die("unknown kind '" + construct_kind +
          "' (expected repetition, mds, or blockrs)");
    }
    CodeHandle code{out, rbclab_code_free};
    char* text = nullptr;
    check(rbclab_code_format(code.get(), &text));
    emit(take_string(text), construct_out);
    return kExitOk;
  }

  if (*shrink) {
    CodeHandle code = open_code(shrink_code_path);
    rbclab_code* reduced = nullptr;
    char* log = nullptr;
    if (shrink_chain) {
      check(rbclab_shrink_chain(code.get(), shrink_r, shrink_d,
                                shrink_verify_each ? 1 : 0, &reduced, &log));
    } else {
      if (shrink_verify_each)
        die("--verify-each applies to chain mode; add --chain");
      check(rbclab_shrink_once(code.get(), shrink_r, shrink_d, &reduced, &log));
    }
    CodeHandle reduced_code{reduced, rbclab_code_free};
    std::cout << take_string(log);
    if (!shrink_out.empty())
      check(rbclab_code_write(reduced_code.get(), shrink_out.c_str()));
    return kExitOk;
  }

  if (*search) {
    FieldHandle field = open_field(search_q);
    rbclab_search_options opts{};
    if (search_mode == "exhaustive") {
      opts.mode = RBCLAB_SEARCH_EXHAUSTIVE;
    } else if (search_mode == "random") {
      opts.mode = RBCLAB_SEARCH_RANDOM;
      if (!search_seed_given) die("random mode requires an explicit --seed");
    } else {
      die("unknown mode '" + search_mode + "' (expected exhaustive or random)");
    }
    opts.seed = search_seed;
    opts.samples = search_samples;
    opts.budget = search_budget;
    opts.threads = search_threads;
    opts.cache_path = search_cache.empty() ? nullptr : search_cache.c_str();
    rbclab_search_result* result = nullptr;
    check(rbclab_search_exists(field.get(), search_k, search_n, search_r,
                               search_m, search_d, &opts, &result));
    char* text = nullptr;
    check(rbclab_search_result_render(result, &text));
    std::cout << take_string(text);
    rbclab_search_result_free(result);
    return kExitOk;
  }

  if (*figure) {
    char* text = nullptr;
    check(rbclab_figure_csv(figure_k, figure_d_list.data(),
                            static_cast<int>(figure_d_list.size()), &text));
    emit(take_string(text), figure_out);
    return kExitOk;
  }

  die("no subcommand selected");
}
