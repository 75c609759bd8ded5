#include "jcd/driver.hpp"

#include <sstream>

#include "jcd/errors.hpp"
#include "jcd/neweigm.hpp"

namespace jcd {

bool GammaVector::all_zero() const {
  for (auto c : counts)
    if (c != 0) return false;
  return true;
}

GammaVector gamma_of(const EigSeq& decomposition, std::size_t n) {
  GammaVector g{std::vector<std::size_t>(n > 0 ? n - 1 : 0, 0)};
  for (const auto& [m, lambda] : decomposition) {
    if (lambda.is_zero()) continue;
    for (std::size_t k = 1; k < n; ++k)
      if (band_nonzero(m, k)) ++g.counts[k - 1];
  }
  return g;
}

GammaVector gamma(const Mat& s, const Mat& n) { return gamma_of(decomp(s, n), n.dim()); }

std::size_t pick_first(const EigSeq& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!seq[i].eigenvalue.is_zero()) return i;
  throw InvariantViolation("pick_first: no nonzero eigenvalue");
}

std::size_t pick_lowest_band(const EigSeq& seq) {
  std::optional<std::size_t> best;
  std::size_t best_band = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].eigenvalue.is_zero()) continue;
    const std::size_t band = lowest_band(seq[i].matrix).value_or(seq[i].matrix.dim());
    if (!best || band < best_band ||
        (band == best_band && seq[i].eigenvalue < seq[*best].eigenvalue)) {
      best = i;
      best_band = band;
    }
  }
  if (!best) throw InvariantViolation("pick_lowest_band: no nonzero eigenvalue");
  return *best;
}

PickStrategy strategy(PickRule rule) {
  switch (rule) {
    case PickRule::first:
      return pick_first;
    case PickRule::lowest_band:
      return pick_lowest_band;
  }
  return pick_lowest_band;
}

void check_jcd_preconditions(const Mat& s, const Mat& n) {
  if (s.dim() != n.dim()) throw StructuralError("jc_d: S and N differ in dimension");
  if (s.dim() == 0) throw StructuralError("jc_d: empty matrices");
  if (!is_upper_triangular(s))
    throw PreconditionError("is_upper_triangular(S)", "S is not upper triangular");
  if (!is_upper_triangular(n))
    throw PreconditionError("is_upper_triangular(N)", "N is not upper triangular");
  if (!is_diagonalizable(s)) throw PreconditionError("is_diagonalizable(S)", "S is not diagonalizable");
  if (!is_nilpotent(n)) throw PreconditionError("is_nilpotent(N)", "N is not nilpotent");
}

JcdResult jc_d(const Mat& s, const Mat& n, const PickStrategy& pick, StepPath via) {
  check_jcd_preconditions(s, n);
  const std::size_t dim = s.dim();
  const std::size_t max_loops = loop_bound(dim);

  JcdResult result{s, n, {}};
  EigSeq seq = decomp_unchecked(s, n);

  for (;;) {
    JcdStep step{result.s_prime, result.n_prime, gamma_of(seq, dim), seq, std::nullopt, std::nullopt};
    if (!result.trace.empty() && !(step.gamma < result.trace.back().gamma))
      throw InvariantViolation("jc_d: gamma did not decrease: " + to_string(result.trace.back().gamma) +
                               " -> " + to_string(step.gamma));

    bool done = true;
    for (const auto& p : seq)
      if (!p.eigenvalue.is_zero()) done = false;
    if (done) {
      result.trace.push_back(std::move(step));
      return result;
    }
    if (result.trace.size() >= max_loops)
      throw InvariantViolation("jc_d: exceeded loop bound " + std::to_string(max_loops));

    const std::size_t i0 = pick(seq);
    if (i0 >= seq.size() || seq[i0].eigenvalue.is_zero())
      throw InvariantViolation("jc_d: pick strategy returned a zero-eigenvalue or invalid index");
    const EigPair chosen = seq[i0];
    step.chosen_eigenvalue = chosen.eigenvalue;
    step.chosen_matrix = chosen.matrix;
    result.trace.push_back(std::move(step));

    EigSeq rest;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (i != i0) rest.push_back(seq[i]);

    const Mat old_s = result.s_prime;
    result.s_prime += chosen.matrix;
    result.n_prime -= chosen.matrix;

    if (via == StepPath::neweigm)
      seq = new_eig_m(rest, -chosen.matrix, chosen.eigenvalue, old_s);
    else
      seq = decomp_unchecked(result.s_prime, result.n_prime);
  }
}

std::size_t loop_bound(std::size_t n) { return n == 0 ? 0 : n * (n - 1) * (n - 1) / 2; }

std::size_t gamma_entry_bound(std::size_t n) { return n == 0 ? 0 : n * (n - 1) / 2; }

std::string to_string(const GammaVector& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < g.counts.size(); ++k) os << (k ? "," : "") << g.counts[k];
  os << ')';
  return os.str();
}

}  // namespace jcd
