#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cftft/field.hpp"
#include "cftft/transform.hpp"
#include "cftft/view.hpp"

namespace cftft {

/// splitmix64-style mixer for deriving per-case seeds from a master seed.
inline u64 mix_seed(u64 a, u64 b) {
  u64 x = a + 0x9e3779b97f4a7c15ull * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

class SeededRng {
 public:
  explicit SeededRng(u64 seed) : eng_(seed) {}
  u64 next() { return eng_(); }
  u64 below(u64 bound) { return eng_() % bound; }
  Fp field_element(const RingCtx& ctx) { return Fp{eng_() % ctx.modulus()}; }
  Fp nonzero_element(const RingCtx& ctx) { return Fp{1 + eng_() % (ctx.modulus() - 1)}; }

 private:
  std::mt19937_64 eng_;
};

/// One transform configuration, printable when a sweep finds a mismatch.
struct CaseId {
  u64 length = 0;
  u64 input_count = 0;
  u64 output_count = 0;
  int want_next = 0;
  SplitPolicy policy = SplitPolicy::balanced;
  u64 seed = 0;
};

inline std::string describe(const CaseId& c) {
  return "L=" + std::to_string(c.length) + " z=" + std::to_string(c.input_count) +
         " n=" + std::to_string(c.output_count) + " f=" + std::to_string(c.want_next) +
         " policy=" + to_string(c.policy) + " seed=" + std::to_string(c.seed);
}

struct SuiteResult {
  std::string name;
  u64 cases = 0;
  u64 failures = 0;
  std::optional<CaseId> first_failure;

  bool ok() const { return failures == 0; }
};

namespace detail {

inline void record_failure(SuiteResult& res, const CaseId& id) {
  ++res.failures;
  if (!res.first_failure) res.first_failure = id;
}

inline void check_sweep_depth(const RingCtx& ctx, unsigned max_ell) {
  if (max_ell < 1 || max_ell > ctx.two_adicity())
    throw InvalidParams("sweep depth must satisfy 1 <= max_ell <= two-adicity");
}

constexpr SplitPolicy kPolicies[] = {SplitPolicy::balanced, SplitPolicy::radix2};

}  // namespace detail

/// Forward transforms against the quadratic evaluation, exact equality on the
/// requested prefix, for every length up to 2^max_ell, every (z, n), both
/// split policies, and `samples` random (coefficients, weight) draws each.
/// The reference spectrum depends only on (L, z, draw), so it is evaluated
/// once and compared against every n.
inline SuiteResult tft_oracle_suite(const RingCtx& ctx, unsigned max_ell, u64 seed,
                                    unsigned samples = 8) {
  detail::check_sweep_depth(ctx, max_ell);
  SuiteResult res;
  res.name = "tft-oracle";
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    const u64 L = u64{1} << ell;
    for (u64 z = 1; z <= L; ++z) {
      for (unsigned k = 0; k < samples; ++k) {
        const u64 case_seed = mix_seed(mix_seed(mix_seed(seed, L), z), k);
        SeededRng rng(case_seed);
        std::vector<Fp> coeffs(z);
        for (auto& c : coeffs) c = rng.field_element(ctx);
        const u64 s = rng.below(ctx.root_order());
        const auto want = dft_naive(ctx, L, s, coeffs);

        for (u64 n = 1; n <= L; ++n) {
          for (SplitPolicy policy : detail::kPolicies) {
            std::vector<Fp> buf(L);
            std::copy(coeffs.begin(), coeffs.end(), buf.begin());
            StridedView view{std::span<Fp>(buf)};
            poison_tail(view, z);
            cf_tft(ctx,
                   {.length = L, .twiddle_exp = s, .input_count = z, .output_count = n},
                   view, policy);
            ++res.cases;
            if (!std::equal(buf.begin(), buf.begin() + static_cast<std::size_t>(n),
                            want.begin()))
              detail::record_failure(res, {L, z, n, 0, policy, case_seed});
          }
        }
      }
    }
  }
  return res;
}

/// Inverse transforms: feed (transformed prefix, L x coefficient tail) built
/// from dft_naive and require exact recovery of L times the leading
/// coefficients, plus the next transformed value when f = 1.
inline SuiteResult itft_inversion_suite(const RingCtx& ctx, unsigned max_ell, u64 seed,
                                        unsigned samples = 3) {
  detail::check_sweep_depth(ctx, max_ell);
  SuiteResult res;
  res.name = "itft-inversion";
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    const u64 L = u64{1} << ell;
    const Fp length_factor = ctx.from_uint(L);
    for (u64 z = 1; z <= L; ++z) {
      for (unsigned k = 0; k < samples; ++k) {
        const u64 case_seed = mix_seed(mix_seed(mix_seed(seed, L), z), k);
        SeededRng rng(case_seed);
        std::vector<Fp> coeffs(z);
        for (auto& c : coeffs) c = rng.field_element(ctx);
        const u64 s = rng.below(ctx.root_order());
        const auto spectrum = dft_naive(ctx, L, s, coeffs);
        std::vector<Fp> scaled(z);
        for (u64 i = 0; i < z; ++i) scaled[i] = ctx.mul(length_factor, coeffs[i]);

        for (u64 n = 0; n <= z; ++n) {
          for (int f = 0; f <= 1; ++f) {
            const u64 nf = n + static_cast<u64>(f);
            if (nf < 1 || nf > L) continue;
            for (SplitPolicy policy : detail::kPolicies) {
              std::vector<Fp> buf(L);
              for (u64 i = 0; i < n; ++i) buf[i] = spectrum[i];
              for (u64 i = n; i < z; ++i) buf[i] = scaled[i];
              StridedView view{std::span<Fp>(buf)};
              poison_tail(view, z);
              cf_itft(ctx,
                      {.length = L,
                       .twiddle_exp = s,
                       .input_count = z,
                       .output_count = n,
                       .want_next = f},
                      view, policy);
              ++res.cases;
              bool good = true;
              for (u64 i = 0; i < n && good; ++i) good = (buf[i] == scaled[i]);
              if (good && f == 1) good = (buf[n] == spectrum[n]);
              if (!good) detail::record_failure(res, {L, z, n, f, policy, case_seed});
            }
          }
        }
      }
    }
  }
  return res;
}

/// Base-case count of one forward transform. Counts are data-independent, so
/// the buffer starts from zeros (with the tail poisoned in debug builds).
inline u64 measure_tft_count(const RingCtx& ctx, u64 L, u64 z, u64 n,
                             SplitPolicy policy) {
  std::vector<Fp> buf(L);
  StridedView view{std::span<Fp>(buf)};
  poison_tail(view, z);
  ButterflyStats stats;
  cf_tft(ctx, {.length = L, .twiddle_exp = 0, .input_count = z, .output_count = n}, view,
         policy, &stats);
  return stats.base_case_count;
}

inline u64 measure_itft_count(const RingCtx& ctx, u64 L, u64 z, u64 n, int f,
                              SplitPolicy policy) {
  std::vector<Fp> buf(L);
  StridedView view{std::span<Fp>(buf)};
  poison_tail(view, z);
  ButterflyStats stats;
  cf_itft(ctx,
          {.length = L, .twiddle_exp = 0, .input_count = z, .output_count = n,
           .want_next = f},
          view, policy, &stats);
  return stats.base_case_count;
}

template <typename CheckFn>  // CheckFn(L, ell, z, n, policy, count) -> bool
inline SuiteResult tft_count_sweep(const RingCtx& ctx, unsigned max_ell, std::string name,
                                   CheckFn check) {
  detail::check_sweep_depth(ctx, max_ell);
  SuiteResult res;
  res.name = std::move(name);
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    const u64 L = u64{1} << ell;
    for (u64 z = 1; z <= L; ++z) {
      for (u64 n = 1; n <= L; ++n) {
        for (SplitPolicy policy : detail::kPolicies) {
          const u64 count = measure_tft_count(ctx, L, z, n, policy);
          ++res.cases;
          if (!check(L, ell, z, n, policy, count))
            detail::record_failure(res, {L, z, n, 0, policy, 0});
        }
      }
    }
  }
  return res;
}

/// count <= min((n-1) ell/2 + L - 1, L ell/2), with equality L ell/2 at
/// n = z = L; compared as 2-scaled integers.
inline SuiteResult tft_bound_suite(const RingCtx& ctx, unsigned max_ell) {
  return tft_count_sweep(
      ctx, max_ell, "tft-bounds",
      [](u64 L, unsigned ell, u64 z, u64 n, SplitPolicy, u64 count) {
        if (2 * count > tft_bound_2x(L, n)) return false;
        if (n == L && z == L && 2 * count != L * ell) return false;
        return true;
      });
}

/// count / (L ell / 2) <= n/L + 2/ell, cleared of denominators:
/// 2 count <= n ell + 2 L.
inline SuiteResult tft_smoothness_suite(const RingCtx& ctx, unsigned max_ell) {
  return tft_count_sweep(ctx, max_ell, "tft-smoothness",
                         [](u64 L, unsigned ell, u64, u64 n, SplitPolicy, u64 count) {
                           return 2 * count <= n * ell + 2 * L;
                         });
}

/// count <= min((n+f-1) ell/2 + L - 1, L ell/2), with equality L ell/2 at
/// n = z = L, f = 0; compared as 2-scaled integers.
inline SuiteResult itft_bound_suite(const RingCtx& ctx, unsigned max_ell) {
  detail::check_sweep_depth(ctx, max_ell);
  SuiteResult res;
  res.name = "itft-bounds";
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    const u64 L = u64{1} << ell;
    for (u64 z = 1; z <= L; ++z) {
      for (u64 n = 0; n <= z; ++n) {
        for (int f = 0; f <= 1; ++f) {
          const u64 nf = n + static_cast<u64>(f);
          if (nf < 1 || nf > L) continue;
          for (SplitPolicy policy : detail::kPolicies) {
            const u64 count = measure_itft_count(ctx, L, z, n, f, policy);
            ++res.cases;
            bool good = (2 * count <= itft_bound_2x(L, n, f));
            if (good && n == L && z == L && f == 0) good = (2 * count == L * ell);
            if (!good) detail::record_failure(res, {L, z, n, f, policy, 0});
          }
        }
      }
    }
  }
  return res;
}

/// Everything cmd_verify runs: oracle equivalence, inversion, both count
/// bounds, and the smoothness ratio, all up to length 2^max_ell.
inline std::vector<SuiteResult> run_all_suites(const RingCtx& ctx, unsigned max_ell,
                                               u64 seed) {
  return {
      tft_oracle_suite(ctx, max_ell, seed),
      itft_inversion_suite(ctx, max_ell, seed),
      tft_bound_suite(ctx, max_ell),
      itft_bound_suite(ctx, max_ell),
      tft_smoothness_suite(ctx, max_ell),
  };
}

}  // namespace cftft
