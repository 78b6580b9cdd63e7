#pragma once

// Two independent deciders for "alpha -> img_alpha, beta -> img_beta extends to an
// automorphism": the closed congruence conditions, and a direct check of the
// defining relations plus generation.

#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith2.hpp"
#include "group.hpp"

namespace metacyclic {

/// Candidate images alpha -> alpha^x1 beta^y1, beta -> alpha^x2 beta^y2.
struct GenImages {
  Element img_alpha;
  Element img_beta;

  std::uint64_t x1() const { return img_alpha.u; }
  std::uint64_t y1() const { return img_alpha.v; }
  std::uint64_t x2() const { return img_beta.u; }
  std::uint64_t y2() const { return img_beta.v; }

  static GenImages identity(const GroupParams &P) { return {alpha(), beta(P)}; }

  friend auto operator<=>(const GenImages &, const GenImages &) = default;
};

/// Individual outcomes of the four congruence conditions. power and conjugation are
/// only evaluated when divisible holds; otherwise they are reported false.
struct Lemma22Conditions {
  bool divisible = false; // 2^(b-d) | y1
  bool power = false; // beta^(2^b) = alpha^(2^c) is preserved
  bool conjugation = false; // beta alpha beta^-1 = alpha^r is preserved
  bool parity = false; // x1 y2 - x2 y1 odd

  bool all() const { return divisible && power && conjugation && parity; }
  bool relations() const { return divisible && power && conjugation; }
};

namespace detail {

/// numerator / 2^shift, asserting exact divisibility.
inline std::uint64_t exact_shift(u128 numerator, unsigned shift) {
  if ((numerator & ((u128{1} << shift) - 1)) != 0)
    throw std::logic_error("division-bearing term is not integral");
  return static_cast<std::uint64_t>(numerator >> shift);
}

inline void require_classified(const GroupParams &P, const char *what) {
  if (!P.classified())
    throw WrongFamily(std::string(what) + " requires a family I or II group");
}

} // namespace detail

inline Lemma22Conditions lemma22_conditions(const GenImages &G, const GroupParams &P) {
  detail::require_classified(P, "lemma22_check");
  const unsigned a = P.a();
  const unsigned b = P.b();
  const unsigned c = P.c();
  const unsigned d = P.d();
  const std::uint64_t x1 = G.x1(), y1 = G.y1(), x2 = G.x2(), y2 = G.y2();

  Lemma22Conditions out;
  out.parity = ((x1 * y2 - x2 * y1) & 1U) != 0;
  out.divisible = (y1 & mask(b - d)) == 0;
  if (!out.divisible)
    return out;

  const auto R = [a](std::uint64_t x) { return Residue::from_unsigned(x, a); };
  const Residue r = P.r();
  const Residue r_y1 = pow_red(r, static_cast<std::int64_t>(y1), b);
  const Residue r_y2 = pow_red(r, static_cast<std::int64_t>(y2), b);

  // x2 [2^b; r^y2] + 2^c y2 - x1 [2^c; r^y1] - (2^c y1 / 2^b) 2^c
  const Residue t4 = R(detail::exact_shift(u128{y1} << c, b)) * R(pow2(c));
  const Residue power_residue =
      R(x2) * bracket(pow2(b), r_y2) + R(pow2(c)) * R(y2) - R(x1) * bracket(pow2(c), r_y1) - t4;
  out.power = power_residue.value() == 0;

  // (r^y1 - 1) x2 + ([r; r^y1] - r^y2) x1 + ((r - 1) y1 / 2^b) 2^c
  const std::uint64_t r_minus_1 = r.value() - 1;
  const Residue t3 = R(detail::exact_shift(u128{r_minus_1} * y1, b)) * R(pow2(c));
  const Residue conj_residue = (r_y1 - R(1)) * R(x2) + (bracket(r.value(), r_y1) - r_y2) * R(x1) + t3;
  out.conjugation = conj_residue.value() == 0;
  return out;
}

inline bool lemma22_check(const GenImages &G, const GroupParams &P) { return lemma22_conditions(G, P).all(); }

/// The simplified replacement for the power and conjugation conditions, evaluated with y1 = 2^(b-d) y.
/// Family I: x1 = 1 + 2^(b-c) x2 mod 2^(a-c) and y2 = 1 + (2^(c-d) + 2^(c-1)) y mod 2^(a-d).
/// Family II: y even and y2 = 1 mod 2^(a-e), or e <= a-2, y odd and ||y2 - 1|| = a-e-1.
/// Returns false when 2^(b-d) does not divide y1.
inline bool simplified_conditions(const GenImages &G, const GroupParams &P) {
  detail::require_classified(P, "simplified_conditions");
  const unsigned a = P.a(), b = P.b(), c = P.c(), d = P.d();
  if ((G.y1() & mask(b - d)) != 0)
    return false;
  const std::uint64_t y = G.y1() >> (b - d);
  const std::uint64_t x1 = G.x1(), x2 = G.x2(), y2 = G.y2();
  if (P.family() == Family::I) {
    const bool xi = ((x1 - 1 - (x2 << (b - c))) & mask(a - c)) == 0;
    const bool omega = ((y2 - 1 - ((pow2(c - d) + pow2(c - 1)) * y)) & mask(a - d)) == 0;
    return xi && omega;
  }
  const unsigned e = *P.e();
  if (y % 2 == 0)
    return ((y2 - 1) & mask(a - e)) == 0;
  return e + 2 <= a && val2(static_cast<std::int64_t>(y2) - 1) == a - e - 1;
}

// ---------------------------------------------------------------------------
// Brute-force side

/// Reusable visited-set for subgroup closures; avoids clearing between calls.
class ClosureScratch {
public:
  std::uint64_t generated_size(std::span<const Element> gens, const GroupParams &P) {
    const std::uint64_t n = pow2(P.order_bits());
    if (stamps_.size() != n) {
      stamps_.assign(n, 0);
      stamp_ = 0;
    }
    if (++stamp_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0);
      stamp_ = 1;
    }
    queue_.clear();
    queue_.push_back(identity_element());
    stamps_[element_index(identity_element(), P)] = stamp_;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Element x = queue_[head];
      for (const Element &g : gens) {
        const Element y = mul(x, g, P);
        auto &seen = stamps_[element_index(y, P)];
        if (seen != stamp_) {
          seen = stamp_;
          queue_.push_back(y);
        }
      }
    }
    return queue_.size();
  }

private:
  std::vector<std::uint32_t> stamps_;
  std::uint32_t stamp_ = 0;
  std::vector<Element> queue_;
};

/// Order of the subgroup generated by gens (closure under right multiplication).
inline std::uint64_t generated_subgroup_size(std::span<const Element> gens, const GroupParams &P,
                                             unsigned max_bits = kDefaultEnumerationBits) {
  if (P.order_bits() > max_bits)
    throw CapExceeded("subgroup closure over 2^" + std::to_string(P.order_bits()) + " elements exceeds cap 2^" +
                      std::to_string(max_bits));
  ClosureScratch scratch;
  return scratch.generated_size(gens, P);
}

/// The three defining relations hold for the images.
inline bool relations_hold(const GenImages &G, const GroupParams &P) {
  const Element &A = G.img_alpha;
  const Element &B = G.img_beta;
  if (pow(A, static_cast<std::int64_t>(pow2(P.a())), P) != identity_element())
    return false;
  if (pow(B, static_cast<std::int64_t>(pow2(P.b())), P) != pow(A, static_cast<std::int64_t>(pow2(P.c())), P))
    return false;
  return mul(mul(B, A, P), inv(B, P), P) == pow(A, static_cast<std::int64_t>(P.r().value()), P);
}

inline bool oracle_check(const GenImages &G, const GroupParams &P, ClosureScratch &scratch) {
  if (!relations_hold(G, P))
    return false;
  const Element gens[] = {G.img_alpha, G.img_beta};
  return scratch.generated_size(gens, P) == pow2(P.order_bits());
}

inline bool oracle_check(const GenImages &G, const GroupParams &P, unsigned max_bits = kDefaultEnumerationBits) {
  if (P.order_bits() > max_bits)
    throw CapExceeded("generation test over 2^" + std::to_string(P.order_bits()) + " elements exceeds cap 2^" +
                      std::to_string(max_bits));
  ClosureScratch scratch;
  return oracle_check(G, P, scratch);
}

/// sigma(alpha^u beta^v) = sigma(alpha)^u sigma(beta)^v.
inline Element apply_by_words(const GenImages &G, const Element &g, const GroupParams &P) {
  return mul(pow(G.img_alpha, static_cast<std::int64_t>(g.u), P), pow(G.img_beta, static_cast<std::int64_t>(g.v), P),
             P);
}

} // namespace metacyclic
