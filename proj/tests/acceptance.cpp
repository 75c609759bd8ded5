#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "jcd/cli.hpp"
#include "jcd/driver.hpp"
#include "jcd/errors.hpp"
#include "jcd/io.hpp"
#include "jcd/liealg.hpp"
#include "jcd/neweigm.hpp"
#include "jcd/oracle.hpp"
#include "jcd/verify.hpp"
#include "support.hpp"

using namespace jcd;

namespace {

struct Criterion {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

std::string label(std::size_t n, std::uint64_t seed) {
  return "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

bool gamma_within(const GammaVector& g, std::size_t n) {
  for (std::size_t c : g.counts)
    if (c > gamma_entry_bound(n)) return false;
  return true;
}

/// Criteria 1-4 and 7 share the same instances.
void run_instances(Criterion& oracle, Criterion& closure, Criterion& bounds, Criterion& gamma, Criterion& paths) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::string where = label(n, seed);
      const Instance inst = test::mixed_instance(n, seed);
      try {
        const JcdResult r = jc_d(inst.s, inst.n);

        const ClassicalJcd c = chevalley_jcd(inst.s + inst.n);
        oracle.check(r.s_prime == c.s_prime && r.n_prime == c.n_prime, where);

        const std::vector<Mat> gens{inst.s, inst.n};
        const MatSubspace l = lie_closure(gens, n);
        closure.check(l.contains(r.s_prime) && l.contains(r.n_prime), where);

        bool within = r.loops() <= loop_bound(n);
        for (const auto& step : r.trace) within = within && gamma_within(step.gamma, n);
        bounds.check(within, where + " loops=" + std::to_string(r.loops()));

        std::string why;
        for (std::size_t i = 0; i + 1 < r.trace.size() && why.empty(); ++i) {
          const JcdStep& step = r.trace[i];
          if (!(r.trace[i + 1].gamma < step.gamma))
            why = "gamma " + to_string(step.gamma) + " -> " + to_string(r.trace[i + 1].gamma);
          else if (!step.chosen_matrix)
            why = "no component chosen at loop " + std::to_string(i);
          else
            why = check_band_bookkeeping(step.s, step.n, *step.chosen_matrix);
        }
        if (why.empty() && !r.trace.back().gamma.all_zero()) why = "final gamma is not zero";
        gamma.check(why.empty(), where + " " + why);

        bool same = true;
        for (const auto rule : {PickRule::first, PickRule::lowest_band})
          for (const auto via : {StepPath::neweigm, StepPath::decomp}) {
            if (rule == PickRule::lowest_band && via == StepPath::neweigm) continue;
            const JcdResult other = jc_d(inst.s, inst.n, strategy(rule), via);
            same = same && other.s_prime == r.s_prime && other.n_prime == r.n_prime;
          }
        paths.check(same, where);
      } catch (const std::exception& e) {
        const std::string what = where + " threw: " + e.what();
        for (Criterion* c : {&oracle, &closure, &bounds, &gamma, &paths}) c->check(false, what);
      }
    }
}

void run_exp_shift(Criterion& crit) {
  test::Rng rng(2024);
  for (std::uint64_t seed = 0; crit.cases < 500 && seed < 10000; ++seed) {
    const auto c = test::random_shift_case(rng, seed);
    if (!c) continue;
    const std::string where = "seed=" + std::to_string(seed);
    try {
      const EigPair out = exp_shift(c->x, c->mu, c->pair, c->s);
      bool ok = out.eigenvalue == c->pair.eigenvalue &&
                bracket(c->s - c->x, out.matrix) == out.eigenvalue * out.matrix;
      // Bands up to k0 are kept when M is strictly upper; below k0 in any case.
      const std::size_t k0 = *lowest_band(c->x);
      const std::size_t top = is_strictly_upper(c->pair.matrix) ? k0 : k0 - 1;
      for (std::size_t k = 0; k <= top && k < c->s.dim(); ++k)
        ok = ok && diagonal_band(out.matrix, k).band == diagonal_band(c->pair.matrix, k).band;
      crit.check(ok, where);
    } catch (const std::exception& e) {
      crit.check(false, where + " threw: " + e.what());
    }
  }
  if (crit.cases < 500) crit.check(false, "only " + std::to_string(crit.cases) + " triples generated");
}

EigSeq doubled(const EigSeq& seq) {
  EigSeq out;
  for (const auto& p : seq) out.push_back({direct_sum_rep(p.matrix, 2), p.eigenvalue});
  return out;
}

std::map<Rational, Mat> nonzero_map(const EigSeq& seq) {
  std::map<Rational, Mat> out;
  for (const auto& p : seq)
    if (!p.matrix.is_zero()) out.emplace(p.eigenvalue, p.matrix);
  return out;
}

void run_representation(Criterion& crit) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::string where = label(n, seed);
    const Instance inst = test::mixed_instance(n, seed);
    try {
      const JcdResult small = jc_d(inst.s, inst.n);
      const JcdResult big = jc_d(direct_sum_rep(inst.s, 2), direct_sum_rep(inst.n, 2));
      bool ok = big.s_prime == direct_sum_rep(small.s_prime, 2) && big.n_prime == direct_sum_rep(small.n_prime, 2);

      const EigSeq d = decomp(inst.s, inst.n);
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].eigenvalue.is_zero()) continue;
        EigSeq rest;
        for (std::size_t j = 0; j < d.size(); ++j)
          if (j != i) rest.push_back(d[j]);
        const Mat x = -d[i].matrix;
        const Rational& mu = d[i].eigenvalue;
        const EigSeq lifted = new_eig_m(doubled(rest), direct_sum_rep(x, 2), mu, direct_sum_rep(inst.s, 2));
        ok = ok && nonzero_map(lifted) == nonzero_map(doubled(new_eig_m(rest, x, mu, inst.s)));
      }
      crit.check(ok, where);
    } catch (const std::exception& e) {
      crit.check(false, where + " threw: " + e.what());
    }
  }
}

int run_cli(const std::string& input) {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("jcd_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  static int counter = 0;
  const auto path = dir / ("input_" + std::to_string(counter++) + ".json");
  std::ofstream(path) << input;
  const std::string file = path.string();
  const char* argv[] = {"jcd", "decompose", file.c_str()};
  std::ostringstream out, err;
  return cli::run(3, argv, out, err);
}

std::string instance_json(const Mat& s, const Mat& n) {
  return io::to_json(io::InstanceFile{s.dim(), s, n, nullptr}).dump();
}

void run_degenerate(Criterion& crit) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const std::string where = label(n, seed);
      try {
        const Instance c = gen_commuting_instance({n, seed, 2, true, 2});
        const JcdResult r = jc_d(c.s, c.n);
        crit.check(r.loops() == 0 && r.s_prime == c.s && r.n_prime == c.n, where + " commuting");

        const Instance inst = gen_instance({n, seed, 2, true, 2});
        const JcdResult z = jc_d(inst.s, Mat(n));
        crit.check(z.loops() == 0 && z.s_prime == inst.s && z.n_prime.is_zero(), where + " N=0");
      } catch (const std::exception& e) {
        crit.check(false, where + " threw: " + e.what());
      }
    }

  const JcdResult one = jc_d(Mat{{Rational(7, 3)}}, Mat(1));
  crit.check(one.loops() == 0 && one.s_prime == Mat{{Rational(7, 3)}} && one.n_prime.is_zero(), "n=1");
  crit.check(run_cli(R"({"n":1,"S":[["-2"]],"N":[["0"]]})") == cli::ok, "n=1 via the CLI");

  crit.check(run_cli(instance_json(Mat{{1, 1}, {0, 1}}, Mat(2))) == cli::precondition_failed,
             "Jordan block S not rejected with exit 3");
  crit.check(run_cli(instance_json(Mat{{1, 0}, {1, 2}}, Mat(2))) == cli::precondition_failed,
             "lower-triangular S not rejected with exit 3");
  crit.check(run_cli(instance_json(Mat::diag({1, 2}), Mat{{0, 0}, {1, 0}})) == cli::precondition_failed,
             "lower-triangular N not rejected with exit 3");
  crit.check(run_cli(instance_json(Mat{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, Mat(3))) == cli::precondition_failed,
             "nilpotent S not rejected with exit 3");
}

}  // namespace

int main() {
  std::vector<Criterion> crits{
      {"1 jc_d agrees with the Chevalley oracle"},
      {"2 S' and N' lie in the Lie closure of {S, N}"},
      {"3 loop and gamma entry bounds"},
      {"4 gamma decreases strictly with band bookkeeping"},
      {"5 exp_shift eigen-identity and low-band preservation"},
      {"6 commutation with the doubled representation"},
      {"7 pick strategies and step paths agree"},
      {"8 degenerate inputs"},
  };
  const auto start = std::chrono::steady_clock::now();

  run_instances(crits[0], crits[1], crits[2], crits[3], crits[6]);
  run_exp_shift(crits[4]);
  run_representation(crits[5]);
  run_degenerate(crits[7]);

  bool all = true;
  for (const auto& c : crits) {
    const bool ok = c.failures == 0 && c.cases > 0;
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.name << " (" << c.cases - c.failures << "/"
              << c.cases << ")";
    if (!ok) std::cout << "  first failure: " << c.first_failure;
    std::cout << '\n';
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::printf("elapsed %.1f s\n", elapsed.count());
  return all ? 0 : 1;
}
