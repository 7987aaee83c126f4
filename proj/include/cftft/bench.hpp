#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cftft/polymul.hpp"
#include "cftft/transform.hpp"
#include "cftft/verify.hpp"

namespace cftft {

/// Geometric sweep of product lengths: min, round(min*r), round(min*r^2), ...
/// with r = 1 + step_pct/100, deduplicated after rounding; both endpoints are
/// always present and the grid is strictly increasing.
inline std::vector<u64> sweep_grid(u64 min_n, u64 max_n, unsigned step_pct) {
  if (min_n < 1 || min_n > max_n || step_pct < 1)
    throw InvalidParams("sweep requires 1 <= min <= max and step-pct >= 1");
  std::vector<u64> grid;
  const double ratio = 1.0 + step_pct / 100.0;
  for (double exact = static_cast<double>(min_n);; exact *= ratio) {
    const u64 v = static_cast<u64>(std::llround(exact));
    if (v >= max_n) break;
    if (grid.empty() || v > grid.back()) grid.push_back(v);
  }
  grid.push_back(max_n);
  return grid;
}

struct BenchRecord {
  u64 product_length = 0;    // n
  u64 transform_length = 0;  // L chosen for the multiply
  SplitPolicy policy = SplitPolicy::balanced;
  u64 wall_ns = 0;      // median over the timed trials
  u64 butterflies = 0;  // base cases across the two forward and one inverse transform
};

inline bool bench_record_ok(const BenchRecord& r) {
  return r.butterflies <= 2 * tft_bound(r.transform_length, r.product_length) +
                              itft_bound(r.transform_length, r.product_length, 0);
}

inline u64 median_ns(std::vector<u64> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return (samples[mid - 1] + samples[mid]) / 2;
}

/// Two seeded random polynomials whose product has the requested length.
/// Leading coefficients are forced nonzero so the length is exact.
inline std::pair<Polynomial, Polynomial> bench_inputs(const RingCtx& ctx, u64 n,
                                                      u64 seed) {
  SeededRng rng(mix_seed(seed, n));
  const u64 zg = (n + 2) / 2;
  const u64 zh = n + 1 - zg;
  Polynomial g(zg), h(zh);
  for (auto& c : g) c = rng.field_element(ctx);
  for (auto& c : h) c = rng.field_element(ctx);
  g.back() = rng.nonzero_element(ctx);
  h.back() = rng.nonzero_element(ctx);
  return {std::move(g), std::move(h)};
}

/// Times poly_mul for one product length: one discarded warm-up run, then the
/// median of `trials` runs on a monotonic clock. Input generation is outside
/// the timed region; the butterfly total comes from the (deterministic)
/// warm-up run.
inline BenchRecord bench_point(const RingCtx& ctx, u64 n, SplitPolicy policy,
                               unsigned trials, u64 seed) {
  if (trials < 1) throw InvalidParams("bench requires trials >= 1");
  const auto [g, h] = bench_inputs(ctx, n, seed);

  MulStats stats;
  poly_mul(ctx, g, h, policy, &stats);

  std::vector<u64> times(trials);
  for (auto& t : times) {
    const auto start = std::chrono::steady_clock::now();
    poly_mul(ctx, g, h, policy);
    const auto stop = std::chrono::steady_clock::now();
    t = static_cast<u64>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }

  const BenchRecord record{
      .product_length = n,
      .transform_length = stats.transform_length,
      .policy = policy,
      .wall_ns = median_ns(std::move(times)),
      .butterflies = stats.butterflies.base_case_count,
  };
  if (!bench_record_ok(record))
    throw std::logic_error("butterfly count exceeded the theoretical bound");
  return record;
}

}  // namespace cftft
