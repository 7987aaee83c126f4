#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cftft/field.hpp"
#include "cftft/view.hpp"

namespace cftft {

struct BadLength : std::invalid_argument {
  explicit BadLength(u64 length)
      : std::invalid_argument("transform length " + std::to_string(length) +
                              " is not a power of two dividing the root order") {}
};

struct InvalidParams : std::invalid_argument {
  explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

/// How a transform of length 2^ell is factored into columns x rows.
enum class SplitPolicy {
  balanced,  // ell1 = floor(ell/2), ell2 = ceil(ell/2)
  radix2,    // ell1 = 1, ell2 = ell - 1: the divide-and-conquer baseline
};

inline const char* to_string(SplitPolicy policy) {
  return policy == SplitPolicy::balanced ? "balanced" : "radix2";
}

/// Parameters of one truncated transform. The weight is omega^twiddle_exp;
/// twiddles are carried as exponents so that deriving the weights of
/// subtransforms is exact integer arithmetic.
struct TransformParams {
  u64 length = 0;        // L = 2^ell, ell >= 1, divides the root order
  u64 twiddle_exp = 0;   // s, reduced mod 2^m on use
  u64 input_count = 0;   // z: leading coefficients present in the buffer
  u64 output_count = 0;  // n: leading results requested
  int want_next = 0;     // f: inverse transform also emits the next transformed value
};

/// Counts executions of the length-2 base case, the unit of the complexity
/// bounds. Every invocation counts, including branches that do no arithmetic.
struct ButterflyStats {
  u64 base_case_count = 0;
};

namespace fault {
// Test hook: perturbs the forward base case so verification sweeps must fail.
inline bool corrupt_tft_base = false;
}  // namespace fault

// Sentinel for cells whose contents are contractually arbitrary. It is not a
// canonical residue, so any arithmetic touching it trips the debug asserts in
// RingCtx. poison_tail is a no-op in release builds.
inline constexpr Fp kPoison{~u64{0}};

inline void poison_tail(StridedView x, u64 from) {
#ifndef NDEBUG
  for (u64 i = from; i < x.size(); ++i) x[i] = kPoison;
#else
  (void)x;
  (void)from;
#endif
}

/// Reverses the low ell bits of j.
inline u64 bit_reverse(u64 j, unsigned ell) {
  u64 r = 0;
  for (unsigned i = 0; i < ell; ++i) {
    r = (r << 1) | (j & 1);
    j >>= 1;
  }
  return r;
}

/// ell = ell1 + ell2 with ell1, ell2 >= 1.
inline std::pair<unsigned, unsigned> split(unsigned ell, SplitPolicy policy) {
  assert(ell >= 2);
  if (policy == SplitPolicy::radix2) return {1u, ell - 1};
  return {ell / 2, ell - ell / 2};
}

/// Length-2 truncated transform, in place:
///   n=2,z=2: (x0,x1) <- (x0+x1, zeta(x0-x1))
///   n=2,z=1: x1 <- zeta*x0
///   n=1,z=2: x0 <- x0+x1
///   n=1,z=1: nothing to do, x0 already holds the answer
inline void tft_base2(const RingCtx& ctx, u64 s, u64 z, u64 n, Fp& x0, Fp& x1,
                      ButterflyStats* stats = nullptr) {
  assert((z == 1 || z == 2) && (n == 1 || n == 2));
  if (stats) ++stats->base_case_count;
  if (n == 2) {
    if (z == 2) {
      const Fp diff = ctx.sub(x0, x1);
      x0 = ctx.add(x0, x1);
      x1 = ctx.mul(ctx.omega_pow(s), diff);
    } else {
      x1 = ctx.mul(ctx.omega_pow(s), x0);
    }
  } else if (z == 2) {
    x0 = ctx.add(x0, x1);
  }
  if (fault::corrupt_tft_base) x0 = ctx.add(x0, Fp{1});
}

/// Length-2 inverse truncated transform, in place:
///   n=2:           (x0,x1) <- (x0 + zeta^-1 x1, x0 - zeta^-1 x1)
///   n=1,f=1,z=2:   (x0,x1) <- (2x0 - x1, zeta(x0 - x1))
///   n=1,f=1,z=1:   (x0,x1) <- (2x0, zeta*x0)
///   n=1,f=0,z=2:   x0 <- 2x0 - x1
///   n=1,f=0,z=1:   x0 <- 2x0
///   n=0,z=2:       x0 <- (x0 + x1)/2
///   n=0,z=1:       x0 <- x0/2
inline void itft_base2(const RingCtx& ctx, u64 s, u64 z, u64 n, int f, Fp& x0, Fp& x1,
                       ButterflyStats* stats = nullptr) {
  assert((z == 1 || z == 2) && n <= 2 && (f == 0 || f == 1));
  assert(n + static_cast<u64>(f) >= 1 && n + static_cast<u64>(f) <= 2 && z >= n);
  if (stats) ++stats->base_case_count;
  if (n == 2) {
    const Fp t = ctx.mul(ctx.omega_pow(0 - s), x1);
    const Fp sum = ctx.add(x0, t);
    x1 = ctx.sub(x0, t);
    x0 = sum;
  } else if (n == 1) {
    if (f == 1) {
      if (z == 2) {
        const Fp diff = ctx.sub(x0, x1);
        x0 = ctx.add(x0, diff);
        x1 = ctx.mul(ctx.omega_pow(s), diff);
      } else {
        x1 = ctx.mul(ctx.omega_pow(s), x0);
        x0 = ctx.add(x0, x0);
      }
    } else {
      if (z == 2) {
        x0 = ctx.sub(ctx.add(x0, x0), x1);
      } else {
        x0 = ctx.add(x0, x0);
      }
    }
  } else {
    x0 = (z == 2) ? ctx.half(ctx.add(x0, x1)) : ctx.half(x0);
  }
}

namespace detail {

inline void tft_rec(const RingCtx& ctx, u64 L, u64 s, u64 z, u64 n, StridedView x,
                    SplitPolicy policy, ButterflyStats* stats) {
  assert(z >= 1 && z <= L && n >= 1 && n <= L);
  if (L == 2) {
    tft_base2(ctx, s, z, n, x[0], x[1], stats);
    return;
  }

  const auto ell = static_cast<unsigned>(std::countr_zero(L));
  const auto [ell1, ell2] = split(ell, policy);
  const u64 cols = u64{1} << ell2;  // L2: row width
  const u64 rows = u64{1} << ell1;  // L1: column height

  const u64 n2 = n & (cols - 1);
  const u64 n1 = n >> ell2;
  const u64 n1_ceil = n1 + (n2 ? 1 : 0);
  const u64 z2 = z & (cols - 1);
  const u64 z1 = z >> ell2;
  const u64 z2_ext = z1 ? cols : z2;  // columns holding any input at all

  const u64 col_step = ctx.root_order() >> ell;  // exponent of omega_L
  for (u64 u = 0; u < z2; ++u)
    tft_rec(ctx, rows, s + u * col_step, z1 + 1, n1_ceil, x.column(u, rows, cols), policy,
            stats);
  for (u64 u = z2; u < z2_ext; ++u)
    tft_rec(ctx, rows, s + u * col_step, z1, n1_ceil, x.column(u, rows, cols), policy,
            stats);

  const u64 s_row = s << ell1;  // zeta^{L1}
  for (u64 u = 0; u < n1; ++u)
    tft_rec(ctx, cols, s_row, z2_ext, cols, x.row(u, cols), policy, stats);
  if (n2 > 0) tft_rec(ctx, cols, s_row, z2_ext, n2, x.row(n1, cols), policy, stats);
}

inline void itft_rec(const RingCtx& ctx, u64 L, u64 s, u64 z, u64 n, int f, StridedView x,
                     SplitPolicy policy, ButterflyStats* stats) {
  assert(z >= 1 && z <= L && n <= z);
  assert(n + static_cast<u64>(f) >= 1 && n + static_cast<u64>(f) <= L);
  if (L == 2) {
    itft_base2(ctx, s, z, n, f, x[0], x[1], stats);
    return;
  }

  const auto ell = static_cast<unsigned>(std::countr_zero(L));
  const auto [ell1, ell2] = split(ell, policy);
  const u64 cols = u64{1} << ell2;
  const u64 rows = u64{1} << ell1;

  const u64 n2 = n & (cols - 1);
  const u64 n1 = n >> ell2;
  const u64 z2 = z & (cols - 1);
  const u64 z1 = z >> ell2;
  const int f_mid = (n2 + static_cast<u64>(f) > 0) ? 1 : 0;
  const u64 z2_ext = z1 ? cols : z2;
  const u64 lo = std::min(n2, z2);
  const u64 hi = std::max(n2, z2);

  const u64 col_step = ctx.root_order() >> ell;
  const u64 s_row = s << ell1;

  // Rows that already hold a complete transformed segment.
  for (u64 u = 0; u < n1; ++u)
    itft_rec(ctx, cols, s_row, cols, cols, 0, x.row(u, cols), policy, stats);

  // Rightmost columns: everything at and beyond column n2.
  for (u64 u = n2; u < hi; ++u)
    itft_rec(ctx, rows, s + u * col_step, z1 + 1, n1, f_mid, x.column(u, rows, cols),
             policy, stats);
  for (u64 u = hi; u < z2_ext; ++u)
    itft_rec(ctx, rows, s + u * col_step, z1, n1, f_mid, x.column(u, rows, cols), policy,
             stats);

  // The row that was blocked until those columns finished.
  if (f_mid) {
    assert(n1 < rows);
    itft_rec(ctx, cols, s_row, z2_ext, n2, f, x.row(n1, cols), policy, stats);
  }

  // Leftmost columns, now including the freshly completed row.
  for (u64 u = 0; u < lo; ++u)
    itft_rec(ctx, rows, s + u * col_step, z1 + 1, n1 + 1, 0, x.column(u, rows, cols),
             policy, stats);
  for (u64 u = lo; u < n2; ++u)
    itft_rec(ctx, rows, s + u * col_step, z1, n1 + 1, 0, x.column(u, rows, cols), policy,
             stats);
}

inline void check_length(const RingCtx& ctx, u64 L) {
  if (L < 2 || !std::has_single_bit(L) || L > ctx.root_order()) throw BadLength(L);
}

}  // namespace detail

/// Forward truncated transform, in place over the view.
///
/// On entry x[0..z) hold the coefficients (cells beyond are arbitrary and are
/// never read); on exit x[0..n) hold the first n transformed values in
/// bit-reversed order and x[n..L) hold unspecified data.
inline void cf_tft(const RingCtx& ctx, const TransformParams& params, StridedView x,
                   SplitPolicy policy, ButterflyStats* stats = nullptr) {
  detail::check_length(ctx, params.length);
  if (params.input_count < 1 || params.input_count > params.length ||
      params.output_count < 1 || params.output_count > params.length)
    throw InvalidParams("tft requires 1 <= z <= L and 1 <= n <= L");
  if (params.want_next != 0)
    throw InvalidParams("the forward transform takes no f flag");
  if (x.size() != params.length)
    throw InvalidParams("view length does not match the transform length");
  detail::tft_rec(ctx, params.length, params.twiddle_exp, params.input_count,
                  params.output_count, x, policy, stats);
}

/// Inverse truncated transform, in place over the view.
///
/// On entry x[0..n) hold transformed values and x[n..z) hold L times the
/// corresponding coefficients; coefficients z and beyond are taken to be zero
/// (those cells are arbitrary and never read). On exit x[0..n) hold L times
/// the leading coefficients, x[n] holds the next transformed value if f = 1,
/// and the remaining cells hold unspecified data.
inline void cf_itft(const RingCtx& ctx, const TransformParams& params, StridedView x,
                    SplitPolicy policy, ButterflyStats* stats = nullptr) {
  detail::check_length(ctx, params.length);
  const u64 nf = params.output_count + static_cast<u64>(params.want_next);
  if (params.want_next != 0 && params.want_next != 1)
    throw InvalidParams("f must be 0 or 1");
  if (params.input_count < 1 || params.input_count > params.length || nf < 1 ||
      nf > params.length || params.input_count < params.output_count)
    throw InvalidParams("itft requires 1 <= z <= L, 1 <= n+f <= L and z >= n");
  if (x.size() != params.length)
    throw InvalidParams("view length does not match the transform length");
  detail::itft_rec(ctx, params.length, params.twiddle_exp, params.input_count,
                   params.output_count, params.want_next, x, policy, stats);
}

/// Direct quadratic evaluation of the weighted transform: for each j < L,
/// out[j] = zeta^j' * sum_i omega_L^(i j') coeffs[i] with j' the bit-reversal
/// of j. Every power is recomputed from scratch, so this path shares nothing
/// with the recursive transforms beyond the ring itself.
inline std::vector<Fp> dft_naive(const RingCtx& ctx, u64 L, u64 s,
                                 std::span<const Fp> coeffs) {
  if (L < 1 || !std::has_single_bit(L) || L > ctx.root_order()) throw BadLength(L);
  const u64 z = coeffs.size();
  if (z < 1 || z > L) throw InvalidParams("dft_naive requires 1 <= z <= L");
  const auto ell = static_cast<unsigned>(std::countr_zero(L));
  const Fp zeta = ctx.omega_pow(s);
  const Fp omega_L = ctx.pow(ctx.omega(), ctx.root_order() / L);
  std::vector<Fp> out(L);
  for (u64 j = 0; j < L; ++j) {
    const u64 jr = bit_reverse(j, ell);
    Fp acc{0};
    for (u64 i = 0; i < z; ++i) {
      const u64 e = static_cast<u64>(static_cast<u128>(i) * jr % L);
      acc = ctx.add(acc, ctx.mul(ctx.pow(omega_L, e), coeffs[i]));
    }
    out[j] = ctx.mul(ctx.pow(zeta, jr), acc);
  }
  return out;
}

// Base-case count bounds, scaled by 2 so the half-integer expressions stay in
// exact integer arithmetic: compare 2*count against the *_2x value.

inline u64 tft_bound_2x(u64 L, u64 n) {
  assert(L >= 2 && std::has_single_bit(L) && n >= 1 && n <= L);
  const auto ell = static_cast<u64>(std::countr_zero(L));
  return std::min((n - 1) * ell + 2 * (L - 1), L * ell);
}

inline u64 itft_bound_2x(u64 L, u64 n, int f) {
  assert(L >= 2 && std::has_single_bit(L) && f >= 0 && f <= 1);
  assert(n + static_cast<u64>(f) >= 1 && n + static_cast<u64>(f) <= L);
  const auto ell = static_cast<u64>(std::countr_zero(L));
  return std::min((n + static_cast<u64>(f) - 1) * ell + 2 * (L - 1), L * ell);
}

/// Largest whole number of base cases permitted for a forward transform.
inline u64 tft_bound(u64 L, u64 n) { return tft_bound_2x(L, n) / 2; }

/// Largest whole number of base cases permitted for an inverse transform.
inline u64 itft_bound(u64 L, u64 n, int f) { return itft_bound_2x(L, n, f) / 2; }

}  // namespace cftft
