#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cftft {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct ZeroInverse : std::domain_error {
  ZeroInverse() : std::domain_error("zero has no multiplicative inverse") {}
};

struct NotPrime : std::invalid_argument {
  explicit NotPrime(u64 p)
      : std::invalid_argument("modulus " + std::to_string(p) +
                              " failed the primality check") {}
};

struct NoRootOfUnity : std::invalid_argument {
  NoRootOfUnity(u64 p, unsigned m)
      : std::invalid_argument("no principal 2^" + std::to_string(m) +
                              "-th root of unity modulo " + std::to_string(p)) {}
};

/// Residue modulo the context prime, kept canonical: 0 <= v < p.
struct Fp {
  u64 v = 0;
  friend bool operator==(Fp, Fp) = default;
};

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, valid over the whole 64-bit range.
inline bool is_prime_u64(u64 n) {
  constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 q : kBases) {
    if (n % q == 0) return n == q;
  }
  const int r = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> r;
  for (u64 a : kBases) {
    u64 x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Prime field Z/p with a principal 2^m-th root of unity omega.
///
/// The context is immutable after construction and may be shared freely
/// across threads; every operation is a pure function of its arguments.
class RingCtx {
 public:
  // 2^64 - 2^32 + 1, two-adicity 32; has a dedicated reduction path.
  static constexpr u64 kGoldilocks = 0xffffffff00000001ull;
  static constexpr unsigned kGoldilocksTwoAdicity = 32;

  RingCtx(u64 modulus, unsigned two_adicity) : p_(modulus), m_(two_adicity) {
    if (m_ < 1) throw std::invalid_argument("two-adicity must be at least 1");
    if (!is_prime_u64(p_)) throw NotPrime(p_);
    if (m_ > 63 || ((p_ - 1) & ((u64{1} << m_) - 1)) != 0) throw NoRootOfUnity(p_, m_);
    root_order_ = u64{1} << m_;
    inv_two_ = Fp{(p_ + 1) / 2};
    fast_reduce_ = (p_ == kGoldilocks);
    omega_ = find_root();
  }

  u64 modulus() const noexcept { return p_; }
  unsigned two_adicity() const noexcept { return m_; }
  u64 root_order() const noexcept { return root_order_; }  // M = 2^m
  Fp omega() const noexcept { return omega_; }
  Fp inv_two() const noexcept { return inv_two_; }

  Fp from_uint(u64 x) const noexcept { return Fp{x % p_}; }

  Fp add(Fp a, Fp b) const noexcept {
    assert(a.v < p_ && b.v < p_);
    const u64 gap = p_ - b.v;
    return Fp{a.v >= gap ? a.v - gap : a.v + b.v};
  }

  Fp sub(Fp a, Fp b) const noexcept {
    assert(a.v < p_ && b.v < p_);
    return Fp{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)};
  }

  Fp neg(Fp a) const noexcept {
    assert(a.v < p_);
    return Fp{a.v == 0 ? 0 : p_ - a.v};
  }

  Fp mul(Fp a, Fp b) const noexcept {
    assert(a.v < p_ && b.v < p_);
    const u128 wide = static_cast<u128>(a.v) * b.v;
    return Fp{fast_reduce_ ? reduce_goldilocks(wide) : static_cast<u64>(wide % p_)};
  }

  Fp pow(Fp base, u64 exponent) const noexcept {
    assert(base.v < p_);
    Fp acc{1};
    while (exponent) {
      if (exponent & 1) acc = mul(acc, base);
      exponent >>= 1;
      if (exponent) base = mul(base, base);
    }
    return acc;
  }

  Fp inv(Fp a) const {
    if (a.v == 0) throw ZeroInverse();
    return pow(a, p_ - 2);
  }

  Fp half(Fp a) const noexcept { return mul(a, inv_two_); }

  /// omega^(e mod 2^m). Exponent arithmetic stays exact under 64-bit
  /// wraparound because 2^m divides 2^64.
  Fp omega_pow(u64 e) const noexcept { return pow(omega_, e & (root_order_ - 1)); }

 private:
  // Reduction modulo 2^64 - 2^32 + 1 using 2^64 = 2^32 - 1 and 2^96 = -1.
  static u64 reduce_goldilocks(u128 x) noexcept {
    constexpr u64 kEpsilon = 0xffffffffull;  // 2^32 - 1
    const u64 lo = static_cast<u64>(x);
    const u64 hi = static_cast<u64>(x >> 64);
    const u64 hi_hi = hi >> 32;
    const u64 hi_lo = hi & kEpsilon;
    u64 t = lo - hi_hi;
    if (lo < hi_hi) t -= kEpsilon;
    const u64 s = hi_lo * kEpsilon;
    u64 r = t + s;
    if (r < t) r += kEpsilon;
    if (r >= kGoldilocks) r -= kGoldilocks;
    return r;
  }

  // Smallest g in 2, 3, 5, 7, ... whose (p-1)/2^m power has order exactly 2^m.
  Fp find_root() const {
    const u64 exponent = (p_ - 1) >> m_;
    for (u64 g = 2; g < 1024; g = (g == 2) ? 3 : g + 2) {
      const Fp w = pow(from_uint(g), exponent);
      if (pow(w, root_order_ / 2).v == p_ - 1) return w;
    }
    throw NoRootOfUnity(p_, m_);  // unreachable for a verified prime
  }

  u64 p_;
  unsigned m_;
  u64 root_order_ = 0;
  Fp omega_{};
  Fp inv_two_{};
  bool fast_reduce_ = false;
};

}  // namespace cftft
