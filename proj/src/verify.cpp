#include "jcd/verify.hpp"

#include <sstream>

#include "jcd/liealg.hpp"
#include "jcd/oracle.hpp"

namespace jcd {

bool VerifyReport::all_passed() const { return first_failure() == nullptr; }

const CheckOutcome* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string check_band_bookkeeping(const Mat& s, const Mat& n, const Mat& chosen) {
  const auto k0 = lowest_band(chosen);
  if (!k0 || *k0 == 0) return "chosen component is not strictly upper triangular";

  const GammaVector before = gamma(s, n);
  const Mat rest = n - chosen;
  const GammaVector same_s = gamma(s, rest);
  const GammaVector shifted_s = gamma(s + chosen, rest);

  std::ostringstream err;
  for (std::size_t k = 1; k <= *k0; ++k) {
    const std::size_t expect = k < *k0 ? before.counts[k - 1] : before.counts[k - 1] - 1;
    if (same_s.counts[k - 1] != expect)
      err << "c_" << k << "(S, N - N0) = " << same_s.counts[k - 1] << ", expected " << expect << "; ";
    if (shifted_s.counts[k - 1] != same_s.counts[k - 1])
      err << "c_" << k << "(S + N0, N - N0) = " << shifted_s.counts[k - 1] << " differs from c_" << k
          << "(S, N - N0) = " << same_s.counts[k - 1] << "; ";
  }
  return err.str();
}

VerifyReport verify_instance(const Mat& s, const Mat& n, const std::optional<ExpectedOutput>& expected) {
  VerifyReport report{jc_d(s, n), {}};
  const JcdResult& r = report.result;
  const std::size_t dim = s.dim();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
  };

  add("sum_conservation", r.s_prime + r.n_prime == s + n, "S' + N' != S + N");
  add("commutation", bracket(r.s_prime, r.n_prime).is_zero(), "[S', N'] != 0");
  add("semisimple_part", is_diagonalizable(r.s_prime), "S' is not diagonalizable");
  add("nilpotent_part", is_nilpotent(r.n_prime), "N' is not nilpotent");

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 1; i < r.trace.size(); ++i)
      if (!(r.trace[i].gamma < r.trace[i - 1].gamma)) {
        ok = false;
        detail = "gamma " + to_string(r.trace[i - 1].gamma) + " -> " + to_string(r.trace[i].gamma);
      }
    add("gamma_decrease", ok, detail);
  }
  {
    std::string detail;
    for (const auto& step : r.trace) {
      if (step.s + step.n != s + n) detail = "S + N not conserved along the trace";
      if (!step.chosen_matrix) continue;
      const std::string b = check_band_bookkeeping(step.s, step.n, *step.chosen_matrix);
      if (!b.empty()) detail = b;
    }
    add("band_bookkeeping", detail.empty(), detail);
  }
  {
    bool ok = true;
    for (const auto& step : r.trace)
      for (auto c : step.gamma.counts) ok = ok && c <= gamma_entry_bound(dim);
    add("gamma_entry_bound", ok, "some c_k exceeds n(n-1)/2");
  }
  add("loop_bound", r.loops() <= loop_bound(dim),
      "loops " + std::to_string(r.loops()) + " > " + std::to_string(loop_bound(dim)));

  {
    const std::vector<Mat> gens{s, n};
    const MatSubspace closure = lie_closure(gens, dim);
    add("closure_membership", closure.contains(r.s_prime) && closure.contains(r.n_prime),
        "S' or N' lies outside the Lie algebra generated by S and N");
  }
  {
    const ClassicalJcd o = chevalley_jcd(s + n);
    add("oracle_agreement", o.s_prime == r.s_prime && o.n_prime == r.n_prime,
        "classical decomposition differs");
  }
  {
    const JcdResult doubled = jc_d(direct_sum_rep(s, 2), direct_sum_rep(n, 2));
    add("representation_commutation",
        doubled.s_prime == direct_sum_rep(r.s_prime, 2) && doubled.n_prime == direct_sum_rep(r.n_prime, 2),
        "jc_d(pi(S), pi(N)) != pi(jc_d(S, N))");
  }
  {
    const JcdResult other = jc_d(s, n, pick_first);
    add("pick_independence", other.s_prime == r.s_prime && other.n_prime == r.n_prime,
        "pick strategies disagree");
  }
  {
    const JcdResult other = jc_d(s, n, pick_lowest_band, StepPath::decomp);
    add("via_independence", other.s_prime == r.s_prime && other.n_prime == r.n_prime,
        "neweigm and decomp paths disagree");
  }
  if (expected)
    add("expected_match", expected->s_prime == r.s_prime && expected->n_prime == r.n_prime,
        "result differs from the expected file");
  return report;
}

}  // namespace jcd
