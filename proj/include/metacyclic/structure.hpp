#pragma once

// Standard generators of X (phi-type) and Y (psi-type), symbolic structure of
// Aut(H) = XY, and the two special identities (the E_f 2-cocycle and the sample
// mixed relator).

#include <cstdint>
#include <string>
#include <vector>

#include "arith2.hpp"
#include "automorphism.hpp"
#include "errors.hpp"
#include "group.hpp"

namespace metacyclic {

enum class Shape { Cyclic, Product, Semidirect, Ef };

inline std::string to_string(Shape s) {
  switch (s) {
  case Shape::Cyclic:
    return "cyclic";
  case Shape::Product:
    return "product";
  case Shape::Semidirect:
    return "semidirect";
  case Shape::Ef:
    return "E_f";
  }
  return "?";
}

enum class Subgroup { X, Y };

struct NamedAutomorphism {
  std::string name;
  Subgroup role;
  Automorphism aut;
};

/// Which case of the structure theorem applies.
struct Branch {
  Family family;
  // family I
  bool f_at_least_c_plus_2 = false;
  bool c_at_least_d_plus_2 = false;
  // family II: one of "e<=a-3", "e=a-2", "e=a-1"
  int e_case = 0; // 3, 2, 1 for e <= a-3, e = a-2, e = a-1

  std::string label() const {
    if (family == Family::I)
      return std::string("I:") + (f_at_least_c_plus_2 ? "f>=c+2" : "f=c+1") + "," +
             (c_at_least_d_plus_2 ? "c>=d+2" : "c=d+1");
    switch (e_case) {
    case 3:
      return "II:e<=a-3";
    case 2:
      return "II:e=a-2";
    default:
      return "II:e=a-1";
    }
  }
};

inline Branch branch_of(const GroupParams &P) {
  detail::require_classified(P, "branch_of");
  Branch br{P.family()};
  if (P.family() == Family::I) {
    // max{d, a-d-1} < c < f makes f = c+1 / f >= c+2 and c = d+1 / c >= d+2 exhaustive.
    br.f_at_least_c_plus_2 = P.f() >= P.c() + 2;
    br.c_at_least_d_plus_2 = P.c() >= P.d() + 2;
    return br;
  }
  const unsigned a = P.a(), e = *P.e();
  br.e_case = e + 3 <= a ? 3 : (e + 2 == a ? 2 : 1);
  return br;
}

/// Order exponent of Aut(H): b+c+2d (family I), a+b+min{a-2, e} (family II).
inline unsigned aut_order_formula_bits(const GroupParams &P) {
  detail::require_classified(P, "aut_order_formula_bits");
  if (P.family() == Family::I)
    return P.b() + P.c() + 2 * P.d();
  return P.a() + P.b() + std::min(P.a() - 2, *P.e());
}

/// The branch-appropriate generators.
///
/// Family I: phi0 = phi_{1,2^(a-f)}, phi1 = phi_{1-2^(f-c),z}, phi2 = phi_{5,-2z} (f = c+1 only),
/// psi0 = psi_{2^(a-c),1}, psi1 = psi_{w,1-2^(c-d)}, psi2 = psi_{-2w,5} (c = d+1 only).
///
/// Family II: phi0 = phi_{1,1}, phi1 = phi_{-1,0}, phi2 = phi_{5,0} and
///   e <= a-3: psi0 = psi_{2,1}, psi1 = psi_{1,1-2^(a-e-1)}
///   e  = a-2: psi0, psi1, psi2t = psi_{0,5}
///   e  = a-1: psi0, psi1t = psi_{0,-1}, psi2t = psi_{0,5}
/// For e = a-2 the pair psi1, psi_{1,5} is not usable: psi_{1,5} violates the odd-y
/// condition ||y2 - 1|| = a-e-1 = 1, and Y is abelian of rank 3 there.
inline std::vector<NamedAutomorphism> standard_generators(const GroupParams &P) {
  const Branch br = branch_of(P);
  const unsigned a = P.a(), b = P.b(), c = P.c(), d = P.d();
  const auto I = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  std::vector<NamedAutomorphism> gens;
  if (P.family() == Family::I) {
    const unsigned f = P.f();
    const std::int64_t z = P.z();
    const std::int64_t w = I(P.w().value());
    gens.push_back({"phi0", Subgroup::X, phi(1, I(pow2(a - f)), P)});
    gens.push_back({"phi1", Subgroup::X, phi(1 - I(pow2(f - c)), z, P)});
    if (!br.f_at_least_c_plus_2)
      gens.push_back({"phi2", Subgroup::X, phi(5, -2 * z, P)});
    gens.push_back({"psi0", Subgroup::Y, psi(I(pow2(a - c)), 1, P)});
    gens.push_back({"psi1", Subgroup::Y, psi(w, 1 - I(pow2(c - d)), P)});
    if (!br.c_at_least_d_plus_2)
      gens.push_back({"psi2", Subgroup::Y, psi(-2 * w, 5, P)});
    return gens;
  }
  const unsigned e = *P.e();
  (void)b;
  gens.push_back({"phi0", Subgroup::X, phi(1, 1, P)});
  gens.push_back({"phi1", Subgroup::X, phi(-1, 0, P)});
  gens.push_back({"phi2", Subgroup::X, phi(5, 0, P)});
  switch (br.e_case) {
  case 3:
    gens.push_back({"psi0", Subgroup::Y, psi(2, 1, P)});
    gens.push_back({"psi1", Subgroup::Y, psi(1, 1 - I(pow2(a - e - 1)), P)});
    break;
  case 2:
    gens.push_back({"psi0", Subgroup::Y, psi(2, 1, P)});
    gens.push_back({"psi1", Subgroup::Y, psi(1, 1 - I(pow2(a - e - 1)), P)});
    gens.push_back({"psi2t", Subgroup::Y, psi(0, 5, P)});
    break;
  default:
    gens.push_back({"psi0", Subgroup::Y, psi(2, 1, P)});
    gens.push_back({"psi1t", Subgroup::Y, psi(0, -1, P)});
    gens.push_back({"psi2t", Subgroup::Y, psi(0, 5, P)});
    break;
  }
  return gens;
}

inline std::vector<NamedAutomorphism> generators_of(const GroupParams &P, Subgroup role) {
  std::vector<NamedAutomorphism> out;
  for (auto &g : standard_generators(P))
    if (g.role == role)
      out.push_back(g);
  return out;
}

/// Generators of X cap Y.
/// Family I: phi_{1+2^c,0} = psi_{2^d,1} and phi_{1,2^c} = psi_{0,1+2^b}.
/// Family II: psi_{0,1+2^b} and psi_{2,1} (the group is {psi_{0,1}, psi_{0,1+2^b}, psi_{2,1}, psi_{2,1+2^b}}).
inline std::vector<NamedAutomorphism> intersection_generators(const GroupParams &P) {
  detail::require_classified(P, "intersection_generators");
  const auto I = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  if (P.family() == Family::I)
    return {{"phi_{1+2^c,0}", Subgroup::X, phi(1 + I(pow2(P.c())), 0, P)},
            {"phi_{1,2^c}", Subgroup::X, phi(1, I(pow2(P.c())), P)}};
  return {{"psi_{0,1+2^b}", Subgroup::Y, psi(0, 1 + I(pow2(P.b())), P)}, {"psi_{2,1}", Subgroup::Y, psi(2, 1, P)}};
}

/// Symbolic description of one subgroup: normal factor(s) and complement factor(s),
/// each a list of cyclic-factor exponents (Z_{2^k}).
struct SubgroupReport {
  Shape shape;
  std::vector<unsigned> normal_bits;
  std::vector<unsigned> complement_bits;
  std::vector<NamedAutomorphism> generators;

  unsigned order_bits() const {
    unsigned total = 0;
    for (unsigned k : normal_bits)
      total += k;
    for (unsigned k : complement_bits)
      total += k;
    return total + (shape == Shape::Ef ? 1 : 0);
  }

  std::string description() const {
    const auto cyc = [](unsigned k) { return "Z_{2^" + std::to_string(k) + "}"; };
    const auto prod = [&](const std::vector<unsigned> &ks) {
      std::string s;
      for (std::size_t i = 0; i < ks.size(); ++i)
        s += (i ? " x " : "") + cyc(ks[i]);
      return ks.size() > 1 ? "(" + s + ")" : s;
    };
    switch (shape) {
    case Shape::Cyclic:
      return cyc(normal_bits.at(0));
    case Shape::Product: {
      std::vector<unsigned> all = normal_bits;
      all.insert(all.end(), complement_bits.begin(), complement_bits.end());
      std::string s = prod(all);
      return s.front() == '(' ? s.substr(1, s.size() - 2) : s;
    }
    case Shape::Semidirect:
      return prod(normal_bits) + " x| " + prod(complement_bits);
    case Shape::Ef:
      return "E_f, central extension of " + prod(complement_bits) + " by Z_2";
    }
    return {};
  }
};

struct StructureReport {
  std::string branch;
  SubgroupReport X;
  SubgroupReport Y;
  SubgroupReport X_cap_Y;
  unsigned aut_order_bits;
};

inline StructureReport structure_report(const GroupParams &P) {
  const Branch br = branch_of(P);
  const unsigned a = P.a(), b = P.b(), c = P.c(), d = P.d();
  StructureReport rep{br.label(), {}, {}, {}, aut_order_formula_bits(P)};
  rep.X.generators = generators_of(P, Subgroup::X);
  rep.Y.generators = generators_of(P, Subgroup::Y);
  rep.X_cap_Y.generators = intersection_generators(P);
  if (P.family() == Family::I) {
    const unsigned f = P.f();
    rep.X.shape = Shape::Semidirect;
    rep.X.normal_bits = {f};
    rep.X.complement_bits =
        br.f_at_least_c_plus_2 ? std::vector<unsigned>{a + c - f} : std::vector<unsigned>{1, a - 2};
    rep.Y.shape = Shape::Semidirect;
    rep.Y.normal_bits = {d};
    rep.Y.complement_bits =
        br.c_at_least_d_plus_2 ? std::vector<unsigned>{a + b + d - 2 * c} : std::vector<unsigned>{1, a + b - c - 2};
    rep.X_cap_Y.shape = Shape::Product;
    rep.X_cap_Y.normal_bits = {a - c, a - c};
    return rep;
  }
  const unsigned e = *P.e();
  rep.X.shape = Shape::Semidirect;
  rep.X.normal_bits = {a};
  rep.X.complement_bits = {1, a - 2};
  rep.Y.shape = Shape::Product;
  if (br.e_case == 3)
    rep.Y.normal_bits = {1, b + e + 2 - a};
  else
    rep.Y.normal_bits = {1, 1, b - 1};
  rep.X_cap_Y.shape = Shape::Product;
  rep.X_cap_Y.normal_bits = {1, 1};
  return rep;
}

// ---------------------------------------------------------------------------

/// Outcome of the E_f check in the e = a-2 branch, with the section
/// s(u, v) = psi1^u psi2^v on Z_2 x Z_{2^(b-1)}.
struct CocycleReport {
  /// Whether psi2 = psi_{1,5} is an automorphism at all. When it is not, psi_{0,5}
  /// (the only choice of the same order with y2 = 5) stands in for it.
  bool stated_psi2_admissible = false;
  /// s(u1,v1) s(u2,v2) s(u1+u2, v1+v2)^-1 = [psi1,psi2]^(u2 v1) for all 64 (or more) tuples.
  bool identity_holds = false;
  /// [psi1, psi2] commutes with every generator of Y.
  bool commutator_central = false;
  /// Order of [psi1, psi2] as a power-of-two exponent; E_f needs exactly 1.
  unsigned commutator_order_bits = 0;
  std::uint64_t tuples_checked = 0;

  bool passed() const {
    return stated_psi2_admissible && identity_holds && commutator_central && commutator_order_bits == 1;
  }
};

inline CocycleReport cocycle_report(const GroupParams &P) {
  detail::require_classified(P, "cocycle_check");
  if (P.family() != Family::II || branch_of(P).e_case != 2)
    throw WrongBranch("cocycle_check applies to family II with e = a-2 only (got " + P.spec_string() + ")");
  const unsigned a = P.a(), b = P.b(), e = *P.e();
  CocycleReport rep;
  rep.stated_psi2_admissible = omega_violation(1, 5, P).empty();
  const Automorphism psi1 = psi(1, 1 - static_cast<std::int64_t>(pow2(a - e - 1)), P);
  const Automorphism psi2 = rep.stated_psi2_admissible ? psi(1, 5, P) : psi(0, 5, P);
  const Automorphism comm = commutator(psi1, psi2);

  const std::uint64_t nv = pow2(b - 1);
  std::vector<Automorphism> psi1_pow{identity(P), psi1};
  std::vector<Automorphism> psi2_pow{identity(P)};
  for (std::uint64_t v = 1; v < nv; ++v)
    psi2_pow.push_back(compose(psi2_pow.back(), psi2));
  const auto s = [&](std::uint64_t u, std::uint64_t v) { return compose(psi1_pow[u], psi2_pow[v]); };

  rep.identity_holds = true;
  for (std::uint64_t u1 = 0; u1 < 2; ++u1)
    for (std::uint64_t v1 = 0; v1 < nv; ++v1)
      for (std::uint64_t u2 = 0; u2 < 2; ++u2)
        for (std::uint64_t v2 = 0; v2 < nv; ++v2) {
          const Automorphism lhs = compose(compose(s(u1, v1), s(u2, v2)), inverse(s((u1 + u2) % 2, (v1 + v2) % nv)));
          const Automorphism rhs = (u2 * v1) % 2 == 0 ? identity(P) : comm;
          rep.identity_holds = rep.identity_holds && lhs == rhs;
          ++rep.tuples_checked;
        }

  rep.commutator_central = true;
  for (const auto &g : standard_generators(P))
    if (g.role == Subgroup::Y)
      rep.commutator_central = rep.commutator_central && compose(g.aut, comm) == compose(comm, g.aut);
  rep.commutator_order_bits = aut_order_bits(comm);
  return rep;
}

inline bool cocycle_check(const GroupParams &P) { return cocycle_report(P).passed(); }

/// psi0 o phi0 = sigma_{1,2^(a-f);2^(a-c),h} = phi_{h^-1, 2^(a-f) h^-1} o psi_{2^(a-c),h}
/// with h = 1 + 2^(2a+b-c-d-f). Family I only.
inline bool sample_rprime_check(const GroupParams &P) {
  detail::require_classified(P, "sample_rprime_check");
  if (P.family() != Family::I)
    throw WrongFamily("sample_rprime_check applies to family I only (got " + P.spec_string() + ")");
  const unsigned a = P.a(), b = P.b(), c = P.c(), d = P.d(), f = P.f();
  const auto I = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  const unsigned h_shift = 2 * a + b - c - d - f;
  const Residue h = Residue::from_unsigned(1 + (h_shift < P.y2_bits() ? pow2(h_shift) : 0), P.y2_bits());
  const Residue h_inv = inv_unit(h.reduced_to(a));
  const Automorphism phi0 = phi(1, I(pow2(a - f)), P);
  const Automorphism psi0 = psi(I(pow2(a - c)), 1, P);
  const Automorphism lhs = compose(psi0, phi0);
  const Automorphism middle = make_aut(1, I(pow2(a - f)), I(pow2(a - c)), I(h.value()), P);
  const Automorphism rhs =
      compose(phi(I(h_inv.value()), I((h_inv * Residue::from_unsigned(pow2(a - f), a)).value()), P),
              psi(I(pow2(a - c)), I(h.value()), P));
  return lhs == middle && middle == rhs;
}

} // namespace metacyclic
