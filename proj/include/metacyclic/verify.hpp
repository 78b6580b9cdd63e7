#pragma once

// Property suites run by `verify`: each returns how many individual checks ran and
// the first failure, if any.

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "hom_check.hpp"
#include "oracle.hpp"
#include "structure.hpp"

namespace metacyclic {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool applicable = true;
  bool passed = true;
  std::uint64_t checks = 0;
  std::string detail;

  /// what is a string or a callable producing one; it is only evaluated on the first failure.
  template <typename What>
  void check(bool ok, What &&what) {
    ++checks;
    if (ok)
      return;
    if (passed) {
      if constexpr (std::is_invocable_v<What>)
        detail = what();
      else
        detail = what;
    }
    passed = false;
  }
};

struct VerifyOptions {
  OracleOptions oracle;
  /// Exhaustive law checks when the number of pairs is at most this; otherwise sampled.
  std::uint64_t exhaustive_pairs = 1U << 15;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20240601;
};

/// All (x1, x2) in Xi, as representatives in [0, 2^a).
inline std::vector<std::pair<std::int64_t, std::int64_t>> xi_elements(const GroupParams &P) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const auto n = static_cast<std::int64_t>(pow2(P.a()));
  for (std::int64_t x1 = 0; x1 < n; ++x1)
    for (std::int64_t x2 = 0; x2 < n; ++x2)
      if (xi_violation(x1, x2, P).empty())
        out.emplace_back(x1, x2);
  return out;
}

/// All (y, y2) in Omega, as representatives in [0, 2^(a+d-c)) x [0, 2^(a+b-c)).
inline std::vector<std::pair<std::int64_t, std::int64_t>> omega_elements(const GroupParams &P) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const auto ny = static_cast<std::int64_t>(pow2(P.y_bits()));
  const auto ny2 = static_cast<std::int64_t>(pow2(P.y2_bits()));
  for (std::int64_t y = 0; y < ny; ++y)
    for (std::int64_t y2 = 0; y2 < ny2; ++y2)
      if (omega_violation(y, y2, P).empty())
        out.emplace_back(y, y2);
  return out;
}

// ---------------------------------------------------------------------------

/// Closed congruence conditions against the relation oracle on every candidate
/// quadruple, plus the simplified conditions against the power and conjugation conditions.
inline SuiteResult lemma22_suite(const GroupParams &P, const VerifyOptions &opts = {}) {
  SuiteResult res{"lemma22"};
  check_candidate_cap(P, opts.oracle.max_bits);
  ClosureScratch scratch;
  const std::uint64_t na = pow2(P.a()), nb = pow2(P.b());
  for (std::uint64_t x1 = 0; x1 < na; ++x1)
    for (std::uint64_t y1 = 0; y1 < nb; ++y1)
      for (std::uint64_t x2 = 0; x2 < na; ++x2)
        for (std::uint64_t y2 = 0; y2 < nb; ++y2) {
          const GenImages G{{x1, y1}, {x2, y2}};
          const Lemma22Conditions c = lemma22_conditions(G, P);
          const bool oracle = oracle_check(G, P, scratch);
          const auto at = [&] {
            return "(x1,y1,x2,y2) = (" + std::to_string(x1) + "," + std::to_string(y1) + "," + std::to_string(x2) +
                   "," + std::to_string(y2) + ")";
          };
          res.check(c.all() == oracle, [&] { return "congruence conditions and oracle disagree at " + at(); });
          if (c.divisible && c.parity)
            res.check((c.power && c.conjugation) == simplified_conditions(G, P),
                      [&] { return "simplified conditions disagree with the power/conjugation conditions at " + at(); });
        }
  return res;
}

namespace detail {

struct LawChecker {
  const GroupParams &P;
  SuiteResult &res;

  Residue A(std::int64_t x) const { return Residue(x, P.a()); }
  std::int64_t I(Residue r) const { return static_cast<std::int64_t>(r.value()); }

  void phi_phi(std::pair<std::int64_t, std::int64_t> p, std::pair<std::int64_t, std::int64_t> q) {
    const auto [x1p, x2p] = p;
    const auto [x1, x2] = q;
    const Automorphism lhs = compose(phi(x1p, x2p, P), phi(x1, x2, P));
    const Automorphism rhs = phi(I(A(x1p) * A(x1)), I(A(x1p) * A(x2) + A(x2p)), P);
    res.check(lhs == rhs, [&] { return ("phi o phi law fails for phi_{" + std::to_string(x1p) + "," + std::to_string(x2p) +
                              "} o phi_{" + std::to_string(x1) + "," + std::to_string(x2) + "}"); });
  }

  void psi_psi(std::pair<std::int64_t, std::int64_t> p, std::pair<std::int64_t, std::int64_t> q) {
    const auto [yp, y2p] = p;
    const auto [y, y2] = q;
    const unsigned ky = P.y_bits(), ky2 = P.y2_bits();
    const Automorphism lhs = compose(psi(yp, y2p, P), psi(y, y2, P));
    const Residue ny = Residue(yp, ky) + Residue(y2p, ky2).reduced_to(ky) * Residue(y, ky);
    const Residue ny2 = Residue(y2p, ky2) * Residue(y2, ky2);
    const Automorphism rhs = psi(I(ny), I(ny2), P);
    res.check(lhs == rhs, [&] { return ("psi o psi law fails for psi_{" + std::to_string(yp) + "," + std::to_string(y2p) +
                              "} o psi_{" + std::to_string(y) + "," + std::to_string(y2) + "}"); });
  }

  /// phi_{x1,x2} o psi_{y,y2} = sigma_{x1 + x2 [2^(b-d) y; r], x2 [y2; r]; y, y2}
  void phi_psi(std::pair<std::int64_t, std::int64_t> p, std::pair<std::int64_t, std::int64_t> q) {
    const auto [x1, x2] = p;
    const auto [y, y2] = q;
    const Automorphism lhs = compose(phi(x1, x2, P), psi(y, y2, P));
    const std::uint64_t y1 = static_cast<std::uint64_t>(y) << (P.b() - P.d());
    const Residue nx1 = A(x1) + A(x2) * bracket(y1, P.r());
    const Residue nx2 = A(x2) * bracket(static_cast<std::uint64_t>(y2), P.r());
    const Automorphism rhs = make_aut(I(nx1), I(nx2), y, y2, P);
    res.check(lhs == rhs, [&] { return ("phi o psi law fails for phi_{" + std::to_string(x1) + "," + std::to_string(x2) +
                              "} o psi_{" + std::to_string(y) + "," + std::to_string(y2) + "}"); });
  }

  /// Family I: psi_{y,y2} o phi_{x1,x2} = sigma_{[x1;r'], [x2;r']; y x1, 2^(b-d) y x2 + y2}, r' = 1 + 2^b y.
  /// Family II: psi_{y,y2} o phi_{x1,x2} = sigma_{x1, x2; y x1, 2^(b-1) y x2 + y2}.
  void psi_phi(std::pair<std::int64_t, std::int64_t> p, std::pair<std::int64_t, std::int64_t> q) {
    const auto [y, y2] = p;
    const auto [x1, x2] = q;
    const unsigned ky = P.y_bits(), ky2 = P.y2_bits();
    const Automorphism lhs = compose(psi(y, y2, P), phi(x1, x2, P));
    const Residue ny = Residue(y, ky) * Residue(x1, ky);
    const Residue ny2 =
        Residue(static_cast<std::int64_t>(pow2(P.b() - P.d())), ky2) * Residue(y, ky).lifted_to(ky2) * Residue(x2, ky2) +
        Residue(y2, ky2);
    Residue nx1 = A(x1), nx2 = A(x2);
    if (P.family() == Family::I) {
      const Residue r_prime = A(1) + A(static_cast<std::int64_t>(pow2(P.b()) & mask(P.a()))) * A(y);
      nx1 = bracket(static_cast<std::uint64_t>(x1), r_prime);
      nx2 = bracket(static_cast<std::uint64_t>(x2), r_prime);
    }
    const Automorphism rhs = make_aut(I(nx1), I(nx2), I(ny), I(ny2), P);
    res.check(lhs == rhs, [&] { return ("psi o phi law fails for psi_{" + std::to_string(y) + "," + std::to_string(y2) +
                              "} o phi_{" + std::to_string(x1) + "," + std::to_string(x2) + "}"); });
  }
};

template <typename Fn, typename T, typename U>
void all_pairs_or_sample(const std::vector<T> &lhs, const std::vector<U> &rhs, const VerifyOptions &opts,
                         std::mt19937_64 &rng, Fn &&fn) {
  if (lhs.size() * rhs.size() <= opts.exhaustive_pairs) {
    for (const auto &p : lhs)
      for (const auto &q : rhs)
        fn(p, q);
    return;
  }
  std::uniform_int_distribution<std::size_t> pick_l(0, lhs.size() - 1), pick_r(0, rhs.size() - 1);
  for (std::uint64_t i = 0; i < opts.samples; ++i)
    fn(lhs[pick_l(rng)], rhs[pick_r(rng)]);
}

} // namespace detail

/// The four composition laws (exhaustive when small, sampled otherwise), the
/// closed form against word substitution, and the decomposition sigma = phi o psi.
inline SuiteResult compose_suite(const GroupParams &P, const VerifyOptions &opts = {}) {
  SuiteResult res{"compose"};
  std::mt19937_64 rng(opts.seed);
  const auto xi = xi_elements(P);
  const auto omega = omega_elements(P);
  detail::LawChecker law{P, res};
  using Pair = std::pair<std::int64_t, std::int64_t>;
  detail::all_pairs_or_sample(xi, xi, opts, rng, [&](const Pair &p, const Pair &q) { law.phi_phi(p, q); });
  detail::all_pairs_or_sample(omega, omega, opts, rng, [&](const Pair &p, const Pair &q) { law.psi_psi(p, q); });
  detail::all_pairs_or_sample(xi, omega, opts, rng, [&](const Pair &p, const Pair &q) { law.phi_psi(p, q); });
  detail::all_pairs_or_sample(omega, xi, opts, rng, [&](const Pair &p, const Pair &q) { law.psi_phi(p, q); });

  // closed form vs substitution, and decomposition, on sampled sigma
  std::uniform_int_distribution<std::size_t> pick_xi(0, xi.size() - 1), pick_om(0, omega.size() - 1);
  std::uniform_int_distribution<std::uint64_t> pick_g(0, pow2(P.order_bits()) - 1);
  for (int i = 0; i < 200; ++i) {
    const auto [x1, x2] = xi[pick_xi(rng)];
    const auto [y, y2] = omega[pick_om(rng)];
    const Automorphism A = make_aut(x1, x2, y, y2, P);
    for (int j = 0; j < 20; ++j) {
      const Element g = element_at(pick_g(rng), P);
      res.check(apply(A, g) == apply_by_words(A.images(), g, P),
                [&] {
                  return "closed form differs from substitution for sigma_{" + std::to_string(x1) + "," +
                         std::to_string(x2) + ";" + std::to_string(y) + "," + std::to_string(y2) + "} at " +
                         format_element(g);
                });
    }
    const auto [ph, ps] = decompose(A);
    res.check(compose(ph, ps) == A, "decomposition does not recompose");
    res.check(compose(inverse(A), A).is_identity(), "inverse fails");
  }
  return res;
}

/// Relators of X and Y for the branch, exact generator orders, and (family I) the
/// identifications of the generators of X cap Y.
inline SuiteResult relators_suite(const GroupParams &P) {
  SuiteResult res{"relators"};
  const GeneratorMap gens = generator_map(P);
  for (const Presentation &pres : {presentation_X(P), presentation_Y(P)}) {
    for (const std::string &w : pres.relators)
      res.check(evaluate(w, gens, P).is_identity(), "relator " + w + " is not the identity");
    for (const OrderClaim &claim : pres.orders) {
      const unsigned bits = aut_order_bits(gens.at(claim.generator));
      res.check(bits == claim.bits, claim.generator + " has order 2^" + std::to_string(bits) + ", expected 2^" +
                                        std::to_string(claim.bits));
    }
  }
  if (P.family() == Family::I)
    res.check(intersection_identifications_hold(P), "X cap Y identifications fail");
  return res;
}

inline SuiteResult rprime_suite(const GroupParams &P) {
  SuiteResult res{"rprime"};
  if (P.family() != Family::I) {
    res.applicable = false;
    res.detail = "family I only";
    return res;
  }
  res.check(sample_rprime_check(P), "psi0 o phi0 sample relation fails");
  return res;
}

inline SuiteResult cocycle_suite(const GroupParams &P) {
  SuiteResult res{"cocycle"};
  if (P.family() != Family::II || branch_of(P).e_case != 2) {
    res.applicable = false;
    res.detail = "family II with e = a-2 only";
    return res;
  }
  const CocycleReport rep = cocycle_report(P);
  res.checks = rep.tuples_checked;
  res.passed = rep.passed();
  if (!rep.passed())
    res.detail = std::string("psi_{1,5} admissible: ") + (rep.stated_psi2_admissible ? "yes" : "no") +
                 ", identity: " + (rep.identity_holds ? "holds" : "fails") + ", [psi1,psi2] central: " +
                 (rep.commutator_central ? "yes" : "no") + ", [psi1,psi2] order 2^" +
                 std::to_string(rep.commutator_order_bits);
  return res;
}

} // namespace metacyclic
