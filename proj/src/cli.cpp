#include "jcd/cli.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jcd/errors.hpp"
#include "jcd/gen.hpp"
#include "jcd/io.hpp"
#include "jcd/oracle.hpp"
#include "jcd/verify.hpp"

namespace jcd::cli {

namespace {

using io::json;

json read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return io::parse_text(buf.str());
  }
  return io::read_file(path);
}

struct DecomposeOpts {
  std::string input;
  std::string trace = "none";
  std::string pick = "lowest-band";
  std::string via = "neweigm";
};

int cmd_decompose(const DecomposeOpts& o, std::ostream& out) {
  const auto inst = io::parse_instance(read_input(o.input));
  const PickStrategy pick = strategy(o.pick == "first" ? PickRule::first : PickRule::lowest_band);
  const StepPath via = o.via == "decomp" ? StepPath::decomp : StepPath::neweigm;
  const io::TraceLevel level = o.trace == "full"      ? io::TraceLevel::full
                               : o.trace == "summary" ? io::TraceLevel::summary
                                                      : io::TraceLevel::none;
  const JcdResult r = jc_d(inst.s, inst.n_mat, pick, via);
  out << io::to_json(io::make_result(r, level)).dump(2) << '\n';
  return ok;
}

int cmd_verify(const std::string& input, const std::string& expect_path, std::ostream& out, std::ostream& err) {
  const auto inst = io::parse_instance(read_input(input));
  std::optional<ExpectedOutput> expected;
  if (!expect_path.empty()) {
    const auto e = io::parse_result(read_input(expect_path));
    if (e.s_prime.dim() != inst.n) throw ParseError("expected result has the wrong dimension");
    expected = ExpectedOutput{e.s_prime, e.n_prime};
  }
  const VerifyReport report = verify_instance(inst.s, inst.n_mat, expected);
  io::ResultFile rf = io::make_result(report.result, io::TraceLevel::none);
  for (const auto& c : report.checks) rf.checks[c.name] = c.passed;
  out << io::to_json(rf).dump(2) << '\n';
  for (const auto& c : report.checks)
    if (!c.passed) err << "check failed: " << c.name << ": " << c.detail << '\n';
  return report.all_passed() ? ok : check_failed;
}

int cmd_oracle(const std::string& input, std::ostream& out) {
  const auto f = io::parse_matrix_file(read_input(input));
  const ClassicalJcd c = chevalley_jcd(f.a);
  io::ResultFile rf;
  rf.s_prime = c.s_prime;
  rf.n_prime = c.n_prime;
  out << io::to_json(rf).dump(2) << '\n';
  return ok;
}

struct GenOpts {
  GenConfig cfg;
  std::size_t count = 1;
  bool commuting = false;
  std::string out_dir;
};

io::InstanceFile generate(const GenConfig& cfg, bool commuting) {
  const Instance inst = commuting ? gen_commuting_instance(cfg) : gen_instance(cfg);
  return {cfg.n, inst.s, inst.n,
          json{{"seed", cfg.seed},
               {"generator", std::string(generator_id)},
               {"commuting", commuting},
               {"multiplicity", cfg.multiplicity},
               {"diag_range", cfg.diag_range},
               {"entry_range", cfg.entry_range}}};
}

int cmd_gen(const GenOpts& o, std::ostream& out) {
  validate(o.cfg);
  for (std::size_t i = 0; i < o.count; ++i) {
    GenConfig cfg = o.cfg;
    cfg.seed = o.cfg.seed + i;
    const json j = io::to_json(generate(cfg, o.commuting));
    if (!o.out_dir.empty()) {
      std::filesystem::create_directories(o.out_dir);
      std::ostringstream name;
      name << "instance_" << std::setw(4) << std::setfill('0') << i << ".json";
      std::ofstream f(std::filesystem::path(o.out_dir) / name.str());
      f << j.dump(2) << '\n';
    } else if (o.count == 1) {
      out << j.dump(2) << '\n';
    } else {
      out << j.dump() << '\n';
    }
  }
  return ok;
}

struct BatchOpts {
  std::size_t n = 4;
  std::string seeds = "0..99";
  bool distinct = false;
  long diag_range = 2;
  long entry_range = 2;
  unsigned jobs = 1;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("--seeds expects a..b, got \"" + text + "\"");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const auto lo = std::stoull(a, &used_a), hi = std::stoull(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("--seeds expects a..b, got \"" + text + "\"");
  }
}

struct BatchRow {
  std::uint64_t seed = 0;
  bool passed = false;
  std::size_t loops = 0;
  std::size_t gamma1 = 0;
  std::string failure;
};

BatchRow run_seed(const BatchOpts& o, std::uint64_t seed) {
  GenConfig cfg{o.n, seed, o.diag_range, !o.distinct, o.entry_range};
  const Instance inst = gen_instance(cfg);
  BatchRow row;
  row.seed = seed;
  try {
    const VerifyReport rep = verify_instance(inst.s, inst.n);
    row.passed = rep.all_passed();
    row.loops = rep.result.loops();
    for (const auto& step : rep.result.trace)
      if (!step.gamma.counts.empty()) row.gamma1 = std::max(row.gamma1, step.gamma.counts.front());
    if (const auto* f = rep.first_failure()) row.failure = f->name + ": " + f->detail;
  } catch (const Error& e) {
    row.failure = e.what();
  }
  return row;
}

int cmd_batch(const BatchOpts& o, std::ostream& out) {
  const auto [lo, hi] = parse_seed_range(o.seeds);
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = lo; hi >= lo && s <= hi; ++s) {
    seeds.push_back(s);
    if (s == hi) break;
  }

  // Results are gathered in seed order whatever the scheduling.
  std::vector<BatchRow> rows;
  const std::size_t jobs = std::max(1u, o.jobs);
  for (std::size_t i = 0; i < seeds.size(); i += jobs) {
    std::vector<std::future<BatchRow>> pending;
    for (std::size_t k = i; k < seeds.size() && k < i + jobs; ++k)
      pending.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                   [&o, seed = seeds[k]] { return run_seed(o, seed); }));
    for (auto& f : pending) rows.push_back(f.get());
  }

  std::size_t passed = 0, max_loops = 0, max_gamma1 = 0;
  for (const auto& r : rows) {
    passed += r.passed;
    max_loops = std::max(max_loops, r.loops);
    max_gamma1 = std::max(max_gamma1, r.gamma1);
    if (!r.passed) out << "seed " << r.seed << " FAILED: " << r.failure << '\n';
  }
  out << std::left << std::setw(4) << "n" << std::setw(8) << "seeds" << std::setw(8) << "passed"
      << std::setw(11) << "max_loops" << std::setw(12) << "loop_bound" << std::setw(12) << "max_gamma1"
      << "gamma_bound\n";
  out << std::setw(4) << o.n << std::setw(8) << rows.size() << std::setw(8) << passed << std::setw(11)
      << max_loops << std::setw(12) << loop_bound(o.n) << std::setw(12) << max_gamma1
      << gamma_entry_bound(o.n) << '\n';
  return passed == rows.size() ? ok : check_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jordan-Chevalley decomposition of upper-triangular S + N"};
  app.require_subcommand(1);

  DecomposeOpts dec;
  auto* decompose = app.add_subcommand("decompose", "Decompose S + N by eigenmatrix shifting");
  decompose->add_option("input", dec.input, "Instance file (- for stdin)")->required();
  decompose->add_option("--trace", dec.trace, "Trace detail: summary (gamma and eigenvalues) or full")
      ->expected(0, 1)
      ->default_str("summary")
      ->check(CLI::IsMember({"none", "summary", "full"}));
  decompose->add_option("--pick", dec.pick, "Pick strategy")->check(CLI::IsMember({"first", "lowest-band"}));
  decompose->add_option("--via", dec.via, "Refresh path after each step")
      ->check(CLI::IsMember({"neweigm", "decomp"}));

  std::string verify_input, expect_path;
  auto* verify = app.add_subcommand("verify", "Run jc_d and check every structural guarantee");
  verify->add_option("input", verify_input, "Instance file (- for stdin)")->required();
  verify->add_option("--expect", expect_path, "Result file the output must match");

  std::string oracle_input;
  auto* oracle = app.add_subcommand("oracle", "Classical decomposition of a single matrix A");
  oracle->add_option("input", oracle_input, "Matrix file (- for stdin)")->required();

  GenOpts gen;
  auto* genc = app.add_subcommand("gen", "Generate seeded instances");
  genc->add_option("--n", gen.cfg.n, "Dimension")->check(CLI::PositiveNumber);
  genc->add_option("--seed", gen.cfg.seed, "First seed");
  genc->add_option("--count", gen.count, "Number of instances (seeds seed..seed+count-1)");
  genc->add_flag("--commuting", gen.commuting, "Draw N from the centralizer of S");
  genc->add_flag("--multiplicity,!--distinct", gen.cfg.multiplicity, "Allow repeated spectrum values");
  genc->add_option("--diag-range", gen.cfg.diag_range, "Spectrum values in [-r, r]");
  genc->add_option("--entry-range", gen.cfg.entry_range, "Off-diagonal entries in [-r, r]");
  genc->add_option("--out-dir", gen.out_dir, "Write numbered files instead of JSON lines");

  BatchOpts batch;
  auto* batchc = app.add_subcommand("batch", "Verify a range of generated instances");
  batchc->add_option("--n", batch.n, "Dimension")->check(CLI::PositiveNumber);
  batchc->add_option("--seeds", batch.seeds, "Seed range a..b (inclusive; empty when b < a)");
  batchc->add_flag("--distinct", batch.distinct, "Draw pairwise distinct spectra");
  batchc->add_option("--diag-range", batch.diag_range, "Spectrum values in [-r, r]");
  batchc->add_option("--entry-range", batch.entry_range, "Off-diagonal entries in [-r, r]");
  batchc->add_option("--jobs", batch.jobs, "Instances verified concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_error;
  }

  try {
    if (*decompose) return cmd_decompose(dec, out);
    if (*verify) return cmd_verify(verify_input, expect_path, out, err);
    if (*oracle) return cmd_oracle(oracle_input, out);
    if (*genc) return cmd_gen(gen, out);
    if (*batchc) return cmd_batch(batch, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const StructuralError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.predicate() << ": " << e.what() << '\n';
    return precondition_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return check_failed;
  }
  return ok;
}

}  // namespace jcd::cli
