#include "jcd/gen.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "jcd/errors.hpp"

namespace jcd {

namespace {

/// Uniform integer in [lo, hi] from raw engine output. std::uniform_int_distribution
/// is implementation-defined, so it would break cross-platform reproducibility.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  long between(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

struct Frame {
  std::vector<Rational> d;
  Mat u;
  Mat u_inv;
};

Frame draw_frame(const GenConfig& cfg, Draw& rng) {
  const std::size_t n = cfg.n;
  Frame f{{}, Mat::identity(n), {}};
  if (cfg.multiplicity) {
    for (std::size_t i = 0; i < n; ++i) f.d.emplace_back(rng.between(-cfg.diag_range, cfg.diag_range));
  } else {
    const long range = std::max(cfg.diag_range, static_cast<long>(n));
    std::vector<long> pool;
    for (long v = -range; v <= range; ++v) pool.push_back(v);
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(rng.between(static_cast<long>(i), static_cast<long>(pool.size()) - 1));
      std::swap(pool[i], pool[j]);
      f.d.emplace_back(pool[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) f.u(i, j) = rng.between(-cfg.entry_range, cfg.entry_range);
  f.u_inv = inverse(f.u);
  return f;
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.n == 0) throw StructuralError("gen: n must be at least 1");
  if (cfg.diag_range < 1 || cfg.entry_range < 1) throw StructuralError("gen: ranges must be at least 1");
}

Instance gen_instance(const GenConfig& cfg) {
  validate(cfg);
  Draw rng(cfg.seed);
  const Frame f = draw_frame(cfg, rng);
  Instance out{f.u * Mat::diag(f.d) * f.u_inv, Mat(cfg.n)};
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = i + 1; j < cfg.n; ++j) out.n(i, j) = rng.between(-cfg.entry_range, cfg.entry_range);
  return out;
}

Instance gen_commuting_instance(const GenConfig& cfg) {
  validate(cfg);
  Draw rng(cfg.seed);
  const Frame f = draw_frame(cfg, rng);
  Mat c(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = i + 1; j < cfg.n; ++j)
      if (f.d[i] == f.d[j]) c(i, j) = rng.between(-cfg.entry_range, cfg.entry_range);
  return {f.u * Mat::diag(f.d) * f.u_inv, f.u * c * f.u_inv};
}

}  // namespace jcd
