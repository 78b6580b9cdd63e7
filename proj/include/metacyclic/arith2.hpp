#pragma once

// Exact arithmetic in the rings Z/2^k for 0 <= k <= 62.

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace metacyclic {

inline constexpr unsigned kMaxModulusBits = 62;

using u128 = unsigned __int128;

/// 2-adic valuation of an integer, with a distinguished value for +infinity.
/// Comparisons are total: infinity compares greater than every finite value.
class Valuation {
public:
  constexpr explicit Valuation(unsigned finite) : v_(finite) {}
  static constexpr Valuation infinity() { return Valuation(kInf, Tag{}); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  /// Only meaningful when !is_infinite().
  constexpr unsigned value() const { return v_; }

  friend constexpr auto operator<=>(Valuation, Valuation) = default;
  friend constexpr bool operator==(Valuation, Valuation) = default;
  friend constexpr auto operator<=>(Valuation lhs, unsigned rhs) { return lhs.v_ <=> rhs; }
  friend constexpr bool operator==(Valuation lhs, unsigned rhs) { return lhs.v_ == rhs; }

  friend std::ostream &operator<<(std::ostream &os, Valuation v) {
    if (v.is_infinite())
      return os << "inf";
    return os << v.v_;
  }

private:
  struct Tag {};
  static constexpr unsigned kInf = std::numeric_limits<unsigned>::max();
  constexpr Valuation(unsigned v, Tag) : v_(v) {}
  unsigned v_;
};

constexpr Valuation val2(std::int64_t u) {
  if (u == 0)
    return Valuation::infinity();
  return Valuation(static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(u))));
}

constexpr std::uint64_t pow2(unsigned k) { return std::uint64_t{1} << k; }

constexpr std::uint64_t mask(unsigned k) { return pow2(k) - 1; }

/// Canonical representative in [0, 2^k) of an arbitrary signed integer.
constexpr std::uint64_t reduce(std::int64_t x, unsigned k) {
  return static_cast<std::uint64_t>(x) & mask(k);
}

/// An element of Z/2^k, always stored fully reduced.
class Residue {
public:
  Residue() = default;

  Residue(std::int64_t value, unsigned k) : k_(k) {
    check_bits(k);
    value_ = reduce(value, k);
  }

  static Residue from_unsigned(std::uint64_t value, unsigned k) {
    check_bits(k);
    Residue r;
    r.k_ = k;
    r.value_ = value & mask(k);
    return r;
  }

  std::uint64_t value() const { return value_; }
  unsigned bits() const { return k_; }
  std::uint64_t modulus() const { return pow2(k_); }
  bool is_odd() const { return (value_ & 1U) != 0; }
  Valuation valuation() const { return val2(static_cast<std::int64_t>(value_)); }

  /// Image under Z/2^k -> Z/2^j for j <= k.
  Residue reduced_to(unsigned j) const {
    if (j > k_)
      throw Error("Residue::reduced_to: cannot reduce mod 2^" + std::to_string(k_) + " to mod 2^" +
                  std::to_string(j));
    return from_unsigned(value_, j);
  }

  /// The canonical representative viewed in Z/2^j (any j); an explicit lift.
  Residue lifted_to(unsigned j) const { return from_unsigned(value_, j); }

  Residue operator-() const { return from_unsigned(~value_ + 1, k_); }

  friend Residue operator+(Residue x, Residue y) {
    same_ring(x, y);
    return from_unsigned(x.value_ + y.value_, x.k_);
  }
  friend Residue operator-(Residue x, Residue y) {
    same_ring(x, y);
    return from_unsigned(x.value_ - y.value_, x.k_);
  }
  friend Residue operator*(Residue x, Residue y) {
    same_ring(x, y);
    return from_unsigned(static_cast<std::uint64_t>(u128{x.value_} * y.value_), x.k_);
  }
  Residue &operator+=(Residue y) { return *this = *this + y; }
  Residue &operator-=(Residue y) { return *this = *this - y; }
  Residue &operator*=(Residue y) { return *this = *this * y; }

  /// x^e for a nonnegative exponent.
  Residue pow(std::uint64_t e) const {
    Residue result = from_unsigned(1, k_);
    Residue base = *this;
    while (e != 0) {
      if (e & 1U)
        result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(Residue, Residue) = default;

  friend std::ostream &operator<<(std::ostream &os, Residue r) {
    return os << r.value_ << " (mod 2^" << r.k_ << ")";
  }

private:
  static void check_bits(unsigned k) {
    if (k > kMaxModulusBits)
      throw Error("modulus 2^" + std::to_string(k) + " exceeds the supported 2^" +
                  std::to_string(kMaxModulusBits));
  }
  static void same_ring(Residue x, Residue y) {
    if (x.k_ != y.k_)
      throw Error("arithmetic between Z/2^" + std::to_string(x.k_) + " and Z/2^" +
                  std::to_string(y.k_));
  }

  std::uint64_t value_ = 0;
  unsigned k_ = 0;
};

/// Geometric sum [count; s] = 1 + s + ... + s^(count-1) in the ring of s, with
/// [0; s] = 0. The count is taken literally. Runs in O(log count) ring operations
/// through [2m; s] = [m; s](1 + s^m) and [2m+1; s] = [2m; s] s + 1.
inline Residue bracket(std::uint64_t count, Residue s) {
  const unsigned k = s.bits();
  Residue sum = Residue::from_unsigned(0, k);   // [m; s]
  Residue power = Residue::from_unsigned(1, k); // s^m
  const Residue one = Residue::from_unsigned(1, k);
  for (int bit = 63 - std::countl_zero(count | 1); bit >= 0; --bit) {
    sum = sum * (one + power);
    power = power * power;
    if ((count >> bit) & 1U) {
      sum = sum * s + one;
      power = power * s;
    }
  }
  return sum;
}

/// Bracket under the exponent-reduction convention: v is first replaced by its
/// remainder modulo 2^b.
inline Residue bracket(std::int64_t v, Residue s, unsigned b) {
  return bracket(reduce(v, b), s);
}

/// r^k where k is first reduced to its remainder modulo 2^b (negative k allowed).
inline Residue pow_red(Residue r, std::int64_t kexp, unsigned b) {
  return r.pow(reduce(kexp, b));
}

/// Inverse of an odd residue. Newton iteration y <- y(2 - xy) doubles the
/// number of correct low bits each step, starting from y = x (correct mod 8).
inline Residue inv_unit(Residue x) {
  if (!x.is_odd())
    throw Error("inv_unit: " + std::to_string(x.value()) + " is not a unit mod 2^" +
                std::to_string(x.bits()));
  const unsigned k = x.bits();
  const Residue two = Residue::from_unsigned(2, k);
  Residue y = x;
  for (unsigned correct = 3; correct < k; correct *= 2)
    y = y * (two - x * y);
  return y;
}

} // namespace metacyclic
