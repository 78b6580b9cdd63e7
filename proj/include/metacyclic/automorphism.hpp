#pragma once

// Automorphisms of H_I(a,b,c,d) and H_II(a,b,e) in sigma_{x1,x2;y,y2} form.
//
// An automorphism is stored as its pair of generator images, which is canonical.
// The quadruple (x1, x2, y, y2) is a constructor and a view: x1, x2 live in Z/2^a,
// y in Z/2^(a+d-c) and y2 in Z/2^(a+b-c), with sigma(alpha) = alpha^x1 beta^(2^(b-d) y)
// and sigma(beta) = alpha^x2 beta^y2, where beta^n is a literal power of beta.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "arith2.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hom_check.hpp"

namespace metacyclic {

/// A quadruple of integer representatives.
struct Quad {
  std::int64_t x1 = 1;
  std::int64_t x2 = 0;
  std::int64_t y = 0;
  std::int64_t y2 = 1;

  friend bool operator==(const Quad &, const Quad &) = default;
};

class Automorphism {
public:
  const GroupParams &params() const { return params_; }
  const GenImages &images() const { return images_; }

  /// Canonical view: x1, x2 < 2^a, y < 2^d, y2 < 2^b.
  std::uint64_t x1() const { return images_.x1(); }
  std::uint64_t x2() const { return images_.x2(); }
  std::uint64_t y() const { return images_.y1() >> (params_.b() - params_.d()); }
  std::uint64_t y2() const { return images_.y2(); }
  Quad quad() const {
    return {static_cast<std::int64_t>(x1()), static_cast<std::int64_t>(x2()), static_cast<std::int64_t>(y()),
            static_cast<std::int64_t>(y2())};
  }

  bool is_identity() const { return images_ == GenImages::identity(params_); }

  /// Validated construction from raw images (checked against the congruence conditions).
  static Automorphism from_images(const GenImages &G, const GroupParams &P) {
    detail::require_classified(P, "Automorphism");
    if (!lemma22_check(G, P))
      throw NotInXiOmega("images (" + format_element(G.img_alpha) + ", " + format_element(G.img_beta) +
                         ") do not define an automorphism");
    return Automorphism(P, G);
  }

  friend bool operator==(const Automorphism &x, const Automorphism &y) { return x.images_ == y.images_; }
  friend auto operator<=>(const Automorphism &x, const Automorphism &y) { return x.images_ <=> y.images_; }

private:
  friend Automorphism make_aut(std::int64_t, std::int64_t, std::int64_t, std::int64_t, const GroupParams &);
  friend Automorphism compose(const Automorphism &, const Automorphism &);
  friend Automorphism identity(const GroupParams &);

  Automorphism(GroupParams P, GenImages G) : params_(std::move(P)), images_(G) {}

  GroupParams params_;
  GenImages images_;
};

// ---------------------------------------------------------------------------
// Membership in Xi x Omega

/// Empty string when (x1, x2) is admissible, otherwise the violated condition.
inline std::string xi_violation(std::int64_t x1, std::int64_t x2, const GroupParams &P) {
  const unsigned a = P.a(), b = P.b(), c = P.c();
  if (P.family() == Family::I) {
    const std::uint64_t lhs = reduce(x1, a - c);
    const std::uint64_t rhs = (1 + (static_cast<std::uint64_t>(reduce(x2, a)) << (b - c))) & mask(a - c);
    if (lhs != rhs)
      return "x1 = 1 + 2^(b-c) x2 mod 2^(a-c) fails (x1 = " + std::to_string(x1) + ", x2 = " +
             std::to_string(x2) + ")";
    return {};
  }
  if (reduce(x1, 1) == 0)
    return "x1 must be odd (x1 = " + std::to_string(x1) + ")";
  return {};
}

/// Empty string when (y, y2) is admissible, otherwise the violated condition.
inline std::string omega_violation(std::int64_t y, std::int64_t y2, const GroupParams &P) {
  const unsigned a = P.a(), c = P.c(), d = P.d();
  if (P.family() == Family::I) {
    const std::uint64_t lhs = reduce(y2, a - d);
    const std::uint64_t rhs = (1 + (pow2(c - d) + pow2(c - 1)) * reduce(y, P.y_bits())) & mask(a - d);
    if (lhs != rhs)
      return "y2 = 1 + (2^(c-d) + 2^(c-1)) y mod 2^(a-d) fails (y = " + std::to_string(y) + ", y2 = " +
             std::to_string(y2) + ")";
    return {};
  }
  const unsigned e = *P.e();
  const std::uint64_t yy = reduce(y, P.y_bits());
  const std::uint64_t yy2 = reduce(y2, P.y2_bits());
  if (yy % 2 == 0) {
    if (((yy2 - 1) & mask(a - e)) != 0)
      return "y even requires y2 = 1 mod 2^(a-e) (y = " + std::to_string(y) + ", y2 = " + std::to_string(y2) + ")";
    return {};
  }
  if (e + 2 > a)
    return "y odd requires e <= a-2 (y = " + std::to_string(y) + ")";
  if (val2(static_cast<std::int64_t>(yy2) - 1) != a - e - 1)
    return "y odd requires ||y2 - 1|| = a-e-1 (y = " + std::to_string(y) + ", y2 = " + std::to_string(y2) + ")";
  return {};
}

// ---------------------------------------------------------------------------
// Closed form

namespace detail {

/// Evaluates sigma_{x1,x2;y,y2} on alpha^u beta^v directly from the quadruple.
///   family I:  alpha^(x1 [u; 1+2^b y] + (1 + 2^b y u) x2 [v; r^y2]) beta^(2^(b-d) y u + y2 v)
///   family II: alpha^(x1 u + x2 [v; r^y2]) beta^(2^(b-1) y u + y2 v)
inline Element closed_form(const GroupParams &P, const Quad &q, const Element &g) {
  const unsigned a = P.a(), b = P.b(), d = P.d();
  const unsigned nb = P.beta_order_bits();
  const auto A = [a](std::int64_t x) { return Residue(x, a); };
  const auto N = [nb](std::int64_t x) { return Residue(x, nb); };
  const auto u = static_cast<std::int64_t>(g.u);
  const auto v = static_cast<std::int64_t>(g.v);
  const Residue y = Residue(q.y, P.y_bits()).lifted_to(a);
  const Residue r_y2 = pow_red(P.r(), q.y2, b);

  Residue alpha_exp;
  if (P.family() == Family::I) {
    const Residue two_b_y = A(static_cast<std::int64_t>(pow2(b) & mask(a))) * y;
    alpha_exp = A(q.x1) * bracket(g.u, A(1) + two_b_y) + (A(1) + two_b_y * A(u)) * A(q.x2) * bracket(g.v, r_y2);
  } else {
    alpha_exp = A(q.x1) * A(u) + A(q.x2) * bracket(g.v, r_y2);
  }
  const Residue beta_exp = N(static_cast<std::int64_t>(pow2(b - d))) * Residue(q.y, P.y_bits()).lifted_to(nb) * N(u) +
                           Residue(q.y2, P.y2_bits()).lifted_to(nb) * N(v);
  return mul(alpha_pow(static_cast<std::int64_t>(alpha_exp.value()), P),
             beta_pow(static_cast<std::int64_t>(beta_exp.value()), P), P);
}

} // namespace detail

/// sigma_{x1,x2;y,y2}. Coordinates may be any integer representatives.
inline Automorphism make_aut(std::int64_t x1, std::int64_t x2, std::int64_t y, std::int64_t y2,
                             const GroupParams &P) {
  detail::require_classified(P, "make_aut");
  if (auto why = xi_violation(x1, x2, P); !why.empty())
    throw NotInXiOmega("(x1, x2) not in Xi: " + why);
  if (auto why = omega_violation(y, y2, P); !why.empty())
    throw NotInXiOmega("(y, y2) not in Omega: " + why);
  const Quad q{x1, x2, y, y2};
  const GenImages G{detail::closed_form(P, q, alpha()), detail::closed_form(P, q, beta(P))};
  return Automorphism(P, G);
}

inline Automorphism make_aut(const Quad &q, const GroupParams &P) { return make_aut(q.x1, q.x2, q.y, q.y2, P); }

inline Automorphism identity(const GroupParams &P) {
  detail::require_classified(P, "identity");
  return Automorphism(P, GenImages::identity(P));
}

/// phi_{x1,x2} = sigma_{x1,x2;0,1}.
inline Automorphism phi(std::int64_t x1, std::int64_t x2, const GroupParams &P) { return make_aut(x1, x2, 0, 1, P); }

/// psi_{y,y2} = sigma_{1,0;y,y2}.
inline Automorphism psi(std::int64_t y, std::int64_t y2, const GroupParams &P) { return make_aut(1, 0, y, y2, P); }

inline Element apply(const Automorphism &A, const Element &g) {
  return detail::closed_form(A.params(), A.quad(), g);
}

/// A2 o A1: apply A2 to the images of A1.
inline Automorphism compose(const Automorphism &A2, const Automorphism &A1) {
  if (!(A2.params() == A1.params()))
    throw ParamMismatch("compose: automorphisms of different groups (" + A2.params().spec_string() + " vs " +
                        A1.params().spec_string() + ")");
  const GenImages G{apply(A2, A1.images().img_alpha), apply(A2, A1.images().img_beta)};
  return Automorphism(A1.params(), G);
}

/// A^k for k >= 0.
inline Automorphism aut_pow(const Automorphism &A, std::uint64_t k) {
  Automorphism result = identity(A.params());
  Automorphism base = A;
  while (k != 0) {
    if (k & 1U)
      result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

/// Order of A in Aut(H) as a power-of-two exponent.
inline unsigned aut_order_bits(const Automorphism &A) {
  Automorphism x = A;
  unsigned bits = 0;
  while (!x.is_identity()) {
    x = compose(x, x);
    if (++bits > 2 * kMaxGroupBits)
      throw Error("automorphism order is not a power of two");
  }
  return bits;
}

/// A^-1 = A^(2^k - 1) = A A^2 ... A^(2^(k-1)) where 2^k is the order of A.
inline Automorphism inverse(const Automorphism &A) {
  Automorphism result = identity(A.params());
  Automorphism x = A;
  unsigned bits = 0;
  while (!x.is_identity()) {
    result = compose(result, x);
    x = compose(x, x);
    if (++bits > 2 * kMaxGroupBits)
      throw Error("automorphism order is not a power of two");
  }
  return result;
}

/// A^k for any integer k.
inline Automorphism aut_pow(const Automorphism &A, std::int64_t k) {
  if (k < 0)
    return aut_pow(inverse(A), static_cast<std::uint64_t>(-(k + 1)) + 1);
  return aut_pow(A, static_cast<std::uint64_t>(k));
}

/// [x, y] = x^-1 y^-1 x y.
inline Automorphism commutator(const Automorphism &x, const Automorphism &y) {
  return compose(compose(inverse(x), inverse(y)), compose(x, y));
}

/// sigma = phi_{x1~,x2~} o psi_{y,y2} with x2~ = x2 [y2; r]^-1 and
/// x1~ = x1 - x2 [2^(b-d) y; r] [y2; r]^-1.
inline std::pair<Automorphism, Automorphism> decompose(const Automorphism &A) {
  const GroupParams &P = A.params();
  const unsigned a = P.a();
  const Residue r = P.r();
  const Residue x1 = Residue::from_unsigned(A.x1(), a);
  const Residue x2 = Residue::from_unsigned(A.x2(), a);
  const Residue y2_inv = inv_unit(bracket(A.y2(), r));
  const Residue x2t = x2 * y2_inv;
  const Residue x1t = x1 - x2 * bracket(A.y() << (P.b() - P.d()), r) * y2_inv;
  return {phi(static_cast<std::int64_t>(x1t.value()), static_cast<std::int64_t>(x2t.value()), P),
          psi(static_cast<std::int64_t>(A.y()), static_cast<std::int64_t>(A.y2()), P)};
}

inline std::ostream &operator<<(std::ostream &os, const Automorphism &A) {
  return os << "sigma_{" << A.x1() << "," << A.x2() << ";" << A.y() << "," << A.y2() << "}";
}

} // namespace metacyclic

template <>
struct std::hash<metacyclic::GenImages> {
  std::size_t operator()(const metacyclic::GenImages &G) const noexcept {
    std::uint64_t h = G.img_alpha.u;
    h = h * 0x9E3779B97F4A7C15ULL ^ G.img_alpha.v;
    h = h * 0x9E3779B97F4A7C15ULL ^ G.img_beta.u;
    h = h * 0x9E3779B97F4A7C15ULL ^ G.img_beta.v;
    return std::hash<std::uint64_t>{}(h);
  }
};

template <>
struct std::hash<metacyclic::Automorphism> {
  std::size_t operator()(const metacyclic::Automorphism &A) const noexcept {
    return std::hash<metacyclic::GenImages>{}(A.images());
  }
};
