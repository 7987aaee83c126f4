#pragma once

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "cftft/field.hpp"
#include "cftft/transform.hpp"
#include "cftft/view.hpp"

namespace cftft {

struct TooLarge : std::length_error {
  TooLarge(u64 n, u64 root_order)
      : std::length_error("product length " + std::to_string(n) +
                          " exceeds the available root order " +
                          std::to_string(root_order)) {}
};

/// Coefficient i is the coefficient of X^i; trailing zeros are permitted.
/// The zero polynomial is the empty vector or any all-zero vector.
using Polynomial = std::vector<Fp>;

/// 1 + deg(a), ignoring trailing zeros; 0 for the zero polynomial.
inline u64 poly_support(const Polynomial& a) {
  std::size_t k = a.size();
  while (k > 0 && a[k - 1].v == 0) --k;
  return k;
}

/// Smallest power-of-two transform length >= max(n, 2) within the root order.
inline u64 choose_length(const RingCtx& ctx, u64 n) {
  if (n < 1) throw InvalidParams("choose_length requires n >= 1");
  if (n > ctx.root_order()) throw TooLarge(n, ctx.root_order());
  return std::bit_ceil(std::max<u64>(n, 2));
}

struct MulStats {
  u64 pointwise_mults = 0;   // exactly the product length, never the padded L
  u64 transform_length = 0;  // L, or 0 when a zero input short-circuits
  ButterflyStats butterflies;  // all three transforms combined
};

/// Product of two polynomials over the context prime: forward-transform both
/// inputs to n = deg g + deg h + 1 points, multiply pointwise, inverse-
/// transform, and divide out the factor of L in one final pass.
inline Polynomial poly_mul(const RingCtx& ctx, const Polynomial& g, const Polynomial& h,
                           SplitPolicy policy = SplitPolicy::balanced,
                           MulStats* stats = nullptr) {
  if (stats) *stats = MulStats{};
  const u64 zg = poly_support(g);
  const u64 zh = poly_support(h);
  if (zg == 0 || zh == 0) return {};

  const u64 n = zg + zh - 1;
  const u64 L = choose_length(ctx, n);

  std::vector<Fp> gbuf(L), hbuf(L);
  std::copy_n(g.begin(), zg, gbuf.begin());
  std::copy_n(h.begin(), zh, hbuf.begin());
  StridedView gview{std::span<Fp>(gbuf)};
  StridedView hview{std::span<Fp>(hbuf)};
  poison_tail(gview, zg);
  poison_tail(hview, zh);

  ButterflyStats counts;
  cf_tft(ctx, {.length = L, .twiddle_exp = 0, .input_count = zg, .output_count = n},
         gview, policy, &counts);
  cf_tft(ctx, {.length = L, .twiddle_exp = 0, .input_count = zh, .output_count = n},
         hview, policy, &counts);

  u64 products = 0;
  for (u64 i = 0; i < n; ++i) {
    gbuf[i] = ctx.mul(gbuf[i], hbuf[i]);
    ++products;
  }

  cf_itft(ctx, {.length = L, .twiddle_exp = 0, .input_count = n, .output_count = n},
          gview, policy, &counts);

  const Fp scale = ctx.inv(ctx.from_uint(L));
  Polynomial out(n);
  for (u64 i = 0; i < n; ++i) {
    assert(gbuf[i] != kPoison);
    out[i] = ctx.mul(scale, gbuf[i]);
  }

  if (stats) {
    stats->pointwise_mults = products;
    stats->transform_length = L;
    stats->butterflies = counts;
  }
  return out;
}

}  // namespace cftft
