#include "shrink.hpp"

#include <sstream>
#include <stdexcept>

#include "combinatorics.hpp"

namespace rbclab {

namespace {

void check_params(const RbcParams& params) {
  if (params.r < 1 || params.d < 0)
    throw std::invalid_argument("params need r >= 1 and d >= 0");
  if (params.m != params.r)
    throw std::invalid_argument("the reduction applies to m = r only");
}

std::string set_string(const std::vector<int>& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set[i] + 1);
  }
  return out + "}";
}

}  // namespace

std::pair<LinearCode, ShrinkStep> shrink_once(const LinearCode& code,
                                              RbcParams params) {
  check_params(params);
  const int k = code.k, n = code.n, d = params.d, r = params.r;
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (!(static_cast<long long>(n) < static_cast<long long>(k) * (d + 1)))
    throw std::invalid_argument(
        "n = " + std::to_string(n) + " is not below k(d+1) = " +
        std::to_string(static_cast<long long>(k) * (d + 1)) +
        "; nothing to reduce");

  // t_count[i]: columns that are nonzero multiples of e_i (support == {i});
  // s_count[i]: columns with a nonzero entry in row i.
  std::vector<std::vector<int>> t_cols(k), s_cols(k);
  for (int j = 0; j < n; ++j) {
    int support_row = -1, support_size = 0;
    for (int i = 0; i < k; ++i)
      if (code.gen.at(i, j) != 0) {
        s_cols[i].push_back(j);
        support_row = i;
        ++support_size;
      }
    if (support_size == 1) t_cols[support_row].push_back(j);
  }

  int row = -1;
  for (int i = 0; i < k; ++i)
    if (static_cast<int>(t_cols[i].size()) <= d) {
      row = i;
      break;
    }
  if (row < 0)
    throw std::logic_error(
        "no eligible row although n < k(d+1); this cannot happen");

  const int target_removed = (d + 1) + (k - r);
  const int s_size = static_cast<int>(s_cols[row].size());
  if (s_size < target_removed)
    throw std::invalid_argument(
        "row " + std::to_string(row + 1) + " is read by only " +
        std::to_string(s_size) + " columns, below the d+1+k-r = " +
        std::to_string(target_removed) +
        " that every (r,r,d)-robust batch code requires; the input does not "
        "have the property");

  ShrinkStep step;
  step.removed_row = row;
  step.t_set = t_cols[row];
  step.s_set = s_cols[row];
  step.k_before = k;
  step.k_after = k - 1;
  step.n_before = n;
  step.n_after = n - target_removed;
  step.pad_count = s_size - target_removed;
  step.degenerate = step.k_after < r;

  const Matrix kept = code.gen.restricted(complement_set({row}, k),
                                          complement_set(s_cols[row], n));
  Matrix out(code.field, step.k_after, step.n_after);
  for (int i = 0; i < kept.rows(); ++i)
    for (int j = 0; j < kept.cols(); ++j) out.set(i, j, kept.at(i, j));
  return {LinearCode(std::move(out)), std::move(step)};
}

ShrinkTrace shrink_chain(const LinearCode& code, RbcParams params,
                         bool verify_each) {
  check_params(params);
  ShrinkTrace trace;
  trace.r = params.r;
  trace.d = params.d;
  trace.n_sequence.push_back(code.n);

  const long long repetition_n =
      static_cast<long long>(code.k) * (params.d + 1);
  trace.reduction_applicable = code.n < repetition_n;
  if (!trace.reduction_applicable) {
    trace.singleton_check = code.n >= params.r + params.d;
    trace.final_code = code;
    return trace;
  }

  auto verify_or_abort = [&](const LinearCode& c, int step_index) {
    VerifyOptions opts;
    const VerdictReport verdict = verify_rbc(c, params, opts);
    if (!verdict.holds) {
      const auto& ce = *verdict.counterexample;
      throw std::runtime_error(
          "intermediate code after " + std::to_string(step_index) +
          " step(s) fails verification: no repair set for I=" +
          set_string(ce.first) + ", D=" + set_string(ce.second));
    }
  };

  if (verify_each) verify_or_abort(code, 0);

  LinearCode current = code;
  const int total_steps = code.k - params.r;
  for (int step_index = 1; step_index <= total_steps; ++step_index) {
    if (current.k <= params.r) {  // a step would drop k below r
      trace.degenerate = true;
      break;
    }
    auto [reduced, step] = shrink_once(current, params);
    current = std::move(reduced);
    trace.n_sequence.push_back(current.n);
    trace.degenerate = trace.degenerate || step.degenerate;
    trace.steps.push_back(std::move(step));
    if (verify_each) verify_or_abort(current, step_index);
  }
  if (total_steps < 0) trace.degenerate = true;  // r exceeds k: vacuous input

  trace.singleton_check = current.n >= params.r + params.d;
  trace.final_code = std::move(current);
  return trace;
}

std::string render_step(const ShrinkStep& step, int index) {
  std::ostringstream out;
  out << "step " << index << ": i=" << step.removed_row + 1
      << ", |T_i|=" << step.t_set.size() << ", S_i=" << set_string(step.s_set)
      << ", n: " << step.n_before << "->" << step.n_after
      << ", pad=" << step.pad_count;
  if (step.degenerate) out << " (degenerate: k drops below r)";
  return out.str();
}

std::string render_trace(const ShrinkTrace& trace) {
  std::ostringstream out;
  if (!trace.reduction_applicable) {
    out << "no reduction applied: n >= k(d+1), the repetition bound is "
           "already met\n";
  } else {
    for (size_t i = 0; i < trace.steps.size(); ++i)
      out << render_step(trace.steps[i], static_cast<int>(i) + 1) << '\n';
  }
  out << "n_sequence:";
  for (int n : trace.n_sequence) out << ' ' << n;
  out << '\n';
  out << "singleton_check: n_final=" << trace.n_sequence.back()
      << " >= r+d=" << trace.r + trace.d << ": "
      << (trace.singleton_check ? "pass" : "fail") << '\n';
  if (trace.degenerate) out << "degenerate: yes\n";
  return out.str();
}

}  // namespace rbclab
