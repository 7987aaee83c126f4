// Command-line workbench for the truncated-transform library: verification
// sweeps, butterfly-count tables, and timing benchmarks over a seeded grid.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cftft/cftft.hpp"

namespace {

using cftft::u64;

struct RingOptions {
  u64 modulus = cftft::RingCtx::kGoldilocks;
  unsigned two_adicity = cftft::RingCtx::kGoldilocksTwoAdicity;

  cftft::RingCtx build() const { return {modulus, two_adicity}; }
};

void add_ring_options(CLI::App* cmd, RingOptions* ring) {
  cmd->add_option("--modulus", ring->modulus, "prime modulus (decimal)")
      ->capture_default_str();
  cmd->add_option("--two-adicity", ring->two_adicity,
                  "largest m with 2^m dividing modulus - 1")
      ->capture_default_str();
}

const std::map<std::string, cftft::SplitPolicy> kPolicyNames{
    {"balanced", cftft::SplitPolicy::balanced},
    {"radix2", cftft::SplitPolicy::radix2},
};

int run_verify(const RingOptions& ring, unsigned max_ell, u64 seed, bool inject_fault) {
  const cftft::RingCtx ctx = ring.build();
  cftft::fault::corrupt_tft_base = inject_fault;

  using Runner = cftft::SuiteResult (*)(const cftft::RingCtx&, unsigned, u64);
  constexpr Runner runners[] = {
      [](const cftft::RingCtx& c, unsigned e, u64 s) {
        return cftft::tft_oracle_suite(c, e, s);
      },
      [](const cftft::RingCtx& c, unsigned e, u64 s) {
        return cftft::itft_inversion_suite(c, e, s);
      },
      [](const cftft::RingCtx& c, unsigned e, u64) {
        return cftft::tft_bound_suite(c, e);
      },
      [](const cftft::RingCtx& c, unsigned e, u64) {
        return cftft::itft_bound_suite(c, e);
      },
      [](const cftft::RingCtx& c, unsigned e, u64) {
        return cftft::tft_smoothness_suite(c, e);
      },
  };
  constexpr std::size_t total = std::size(runners);

  unsigned failed = 0;
  for (const Runner run : runners) {
    const auto suite = run(ctx, max_ell, seed);
    if (suite.ok()) {
      std::printf("%-16s PASS  %" PRIu64 " cases\n", suite.name.c_str(), suite.cases);
    } else {
      ++failed;
      std::printf("%-16s FAIL  %" PRIu64 " of %" PRIu64 " cases, first: %s\n",
                  suite.name.c_str(), suite.failures, suite.cases,
                  cftft::describe(*suite.first_failure).c_str());
    }
    std::fflush(stdout);
  }
  cftft::fault::corrupt_tft_base = false;

  if (failed == 0) {
    std::printf("all %zu suites passed (max L = %" PRIu64 ", seed %" PRIu64 ")\n", total,
                u64{1} << max_ell, seed);
    return 0;
  }
  std::printf("%u of %zu suites failed\n", failed, total);
  return 1;
}

int run_count(const RingOptions& ring, u64 length, cftft::SplitPolicy policy) {
  const cftft::RingCtx ctx = ring.build();
  if (length < 2 || !std::has_single_bit(length) || length > ctx.root_order() ||
      length > (u64{1} << 16))
    throw cftft::BadLength(length);

  std::printf("n,tft_count,tft_bound,itft_count,itft_bound\n");
  for (u64 n = 1; n <= length; ++n) {
    const u64 tft_count = cftft::measure_tft_count(ctx, length, n, n, policy);
    const u64 itft_count = cftft::measure_itft_count(ctx, length, n, n, 0, policy);
    std::printf("%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n", n,
                tft_count, cftft::tft_bound(length, n), itft_count,
                cftft::itft_bound(length, n, 0));
  }
  return 0;
}

struct SweepOptions {
  u64 min_n = 512;
  u64 max_n = 16384;
  unsigned step_pct = 5;
  unsigned trials = 3;
  u64 seed = 42;
};

void add_sweep_options(CLI::App* cmd, SweepOptions* sweep) {
  cmd->add_option("--min", sweep->min_n, "smallest product length")
      ->capture_default_str();
  cmd->add_option("--max", sweep->max_n, "largest product length")
      ->capture_default_str();
  cmd->add_option("--step-pct", sweep->step_pct, "geometric step in percent")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--trials", sweep->trials, "timed repetitions per length (median kept)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", sweep->seed, "seed for the random inputs")
      ->capture_default_str();
}

std::vector<u64> make_grid(const cftft::RingCtx& ctx, const SweepOptions& sweep) {
  if (sweep.min_n < 1 || sweep.min_n > sweep.max_n || sweep.max_n > ctx.root_order())
    throw cftft::InvalidParams("sweep requires 1 <= min <= max <= root order");
  return cftft::sweep_grid(sweep.min_n, sweep.max_n, sweep.step_pct);
}

int run_bench(const RingOptions& ring, const SweepOptions& sweep,
              cftft::SplitPolicy policy) {
  const cftft::RingCtx ctx = ring.build();
  std::printf("n,L,policy,wall_ns,butterflies\n");
  for (u64 n : make_grid(ctx, sweep)) {
    const auto rec = cftft::bench_point(ctx, n, policy, sweep.trials, sweep.seed);
    std::printf("%" PRIu64 ",%" PRIu64 ",%s,%" PRIu64 ",%" PRIu64 "\n",
                rec.product_length, rec.transform_length, cftft::to_string(rec.policy),
                rec.wall_ns, rec.butterflies);
  }
  return 0;
}

int run_compare(const RingOptions& ring, const SweepOptions& sweep) {
  const cftft::RingCtx ctx = ring.build();
  std::printf("n,wall_ns_balanced,wall_ns_radix2,ratio\n");
  for (u64 n : make_grid(ctx, sweep)) {
    const auto balanced =
        cftft::bench_point(ctx, n, cftft::SplitPolicy::balanced, sweep.trials, sweep.seed);
    const auto radix2 =
        cftft::bench_point(ctx, n, cftft::SplitPolicy::radix2, sweep.trials, sweep.seed);
    const double ratio = static_cast<double>(radix2.wall_ns) /
                         static_cast<double>(balanced.wall_ns);
    std::printf("%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%.4f\n", n, balanced.wall_ns,
                radix2.wall_ns, ratio);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncated Fourier transform workbench"};
  app.require_subcommand(1);

  RingOptions ring;
  cftft::SplitPolicy policy = cftft::SplitPolicy::balanced;
  unsigned max_ell = 6;
  u64 seed = 42;
  bool inject_fault = false;
  u64 length = 0;
  SweepOptions sweep;

  auto* verify = app.add_subcommand(
      "verify", "run the oracle, inversion, bound and smoothness sweeps");
  verify->add_option("--max-ell", max_ell, "sweep transform lengths up to 2^max-ell")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for the random sweeps")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault,
                   "corrupt the base case so the sweeps must fail (testing hook)");
  add_ring_options(verify, &ring);

  auto* count = app.add_subcommand(
      "count", "print measured base-case counts and bounds for every n up to L");
  count->add_option("--length", length, "transform length L (power of two, at most 2^16)")
      ->required();
  count->add_option("--policy", policy, "split policy")
      ->transform(CLI::CheckedTransformer(kPolicyNames, CLI::ignore_case))
      ->capture_default_str();
  add_ring_options(count, &ring);

  auto* bench = app.add_subcommand(
      "bench", "time random multiplies over a geometric grid of product lengths");
  add_sweep_options(bench, &sweep);
  bench->add_option("--policy", policy, "split policy")
      ->transform(CLI::CheckedTransformer(kPolicyNames, CLI::ignore_case))
      ->capture_default_str();
  add_ring_options(bench, &ring);

  auto* compare = app.add_subcommand(
      "compare", "run the bench sweep under both split policies and print the ratio");
  add_sweep_options(compare, &sweep);
  add_ring_options(compare, &ring);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(ring, max_ell, seed, inject_fault);
    if (count->parsed()) return run_count(ring, length, policy);
    if (bench->parsed()) return run_bench(ring, sweep, policy);
    return run_compare(ring, sweep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
