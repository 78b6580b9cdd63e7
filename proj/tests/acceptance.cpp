// Acceptance run: one PASS/FAIL line per criterion.
//
// Criteria 8 and 10 cannot hold as stated (see README, "Known gaps"). They are
// still evaluated in full and printed as FAIL. The process exits 0 only when every
// other criterion passes and those two fail in exactly the documented way, so a
// change in either direction shows up as a red test.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <metacyclic/metacyclic.hpp>

using namespace metacyclic;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string &why) {
    if (passed)
      detail = why;
    else
      detail += "; " + why;
    passed = false;
  }
  void note(const std::string &s) { detail += (detail.empty() ? "" : "; ") + s; }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_s(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

GroupParams G(const char *spec) { return parse_params(spec); }

const std::vector<const char *> kSix{"I:4,4,3,2", "I:5,4,3,2", "I:5,5,3,2", "II:3,3,2", "II:4,3,2", "II:5,4,2"};

// --- 1, 2 -------------------------------------------------------------------

Outcome order_formula(const std::vector<std::pair<const char *, double>> &cases) {
  Outcome o;
  for (const auto &[spec, limit] : cases) {
    const GroupParams P = G(spec);
    const auto t0 = Clock::now();
    const std::size_t n = enumerate_automorphisms(P).size();
    const double t = seconds_since(t0);
    const std::uint64_t want = pow2(aut_order_formula_bits(P));
    if (n != want)
      o.fail(std::string(spec) + ": oracle " + std::to_string(n) + " != 2^" + std::to_string(aut_order_formula_bits(P)));
    else if (t > limit)
      o.fail(std::string(spec) + ": " + fmt_s(t) + " exceeds " + fmt_s(limit));
    else
      o.note(std::string(spec) + " " + std::to_string(n) + " in " + fmt_s(t));
  }
  return o;
}

// --- 3, 4 -------------------------------------------------------------------

template <typename Fn>
void for_each_candidate(const GroupParams &P, Fn &&fn) {
  const std::uint64_t na = pow2(P.a()), nb = pow2(P.b());
  for (std::uint64_t x1 = 0; x1 < na; ++x1)
    for (std::uint64_t y1 = 0; y1 < nb; ++y1)
      for (std::uint64_t x2 = 0; x2 < na; ++x2)
        for (std::uint64_t y2 = 0; y2 < nb; ++y2)
          fn(GenImages{{x1, y1}, {x2, y2}});
}

Outcome lemma22_vs_oracle() {
  Outcome o;
  for (const char *spec : {"I:4,4,3,2", "II:3,3,2"}) {
    const GroupParams P = G(spec);
    ClosureScratch scratch;
    std::uint64_t total = 0, disagree = 0;
    for_each_candidate(P, [&](const GenImages &g) {
      ++total;
      disagree += lemma22_check(g, P) != oracle_check(g, P, scratch);
    });
    if (disagree)
      o.fail(std::string(spec) + ": " + std::to_string(disagree) + " disagreements");
    else
      o.note(std::string(spec) + " " + std::to_string(total) + "/" + std::to_string(total) + " agree");
  }
  return o;
}

// {divisible, power, conjugation} against {divisible, simplified} on the full candidate
// space, both under the parity condition: the simplifications use that x1 y2 - x2 y1 is odd.
Outcome simplified_equivalence() {
  Outcome o;
  for (const char *spec : {"I:4,4,3,2", "II:3,3,2"}) {
    const GroupParams P = G(spec);
    std::uint64_t lhs = 0, rhs = 0, disagree = 0;
    for_each_candidate(P, [&](const GenImages &g) {
      const Lemma22Conditions c = lemma22_conditions(g, P);
      const bool full = c.divisible && c.parity && c.power && c.conjugation;
      const bool simple = c.divisible && c.parity && simplified_conditions(g, P);
      lhs += full;
      rhs += simple;
      disagree += full != simple;
    });
    if (disagree)
      o.fail(std::string(spec) + ": " + std::to_string(disagree) + " candidates differ");
    else
      o.note(std::string(spec) + " both accept " + std::to_string(lhs));
  }
  return o;
}

// --- 5, 6 -------------------------------------------------------------------

Outcome closed_form_coherence() {
  Outcome o;
  const GroupParams P = G("I:4,4,3,2");
  const auto t0 = Clock::now();
  const auto elems = enumerate(P);
  // one closed-form representative per class of Xi x Omega
  AutSet classes(P);
  for (const auto &[x1, x2] : xi_elements(P))
    for (const auto &[y, y2] : omega_elements(P))
      classes.insert(make_aut(x1, x2, y, y2, P));
  const AutSet all = oracle_set(P);
  if (classes.size() != all.size())
    o.fail(std::to_string(classes.size()) + " closed-form classes vs " + std::to_string(all.size()) + " automorphisms");
  std::uint64_t pairs = 0, bad = 0;
  for (const Automorphism &A : classes.elements()) {
    bad += !all.contains(A);
    for (const Element &g : elems) {
      ++pairs;
      bad += apply(A, g) != apply_by_words(A.images(), g, P);
    }
  }
  const double t = seconds_since(t0);
  if (bad)
    o.fail(std::to_string(bad) + " mismatches");
  if (t > 60)
    o.fail("took " + fmt_s(t));
  o.note(std::to_string(classes.size()) + " x " + std::to_string(elems.size()) + " = " + std::to_string(pairs) +
         " pairs in " + fmt_s(t));
  return o;
}

Outcome composition_laws() {
  Outcome o;
  for (const char *spec : kSix) {
    const GroupParams P = G(spec);
    VerifyOptions opts;
    // exhaustive on the smallest group of each family
    const bool smallest = std::string(spec) == "I:4,4,3,2" || std::string(spec) == "II:3,3,2";
    opts.exhaustive_pairs = smallest ? ~std::uint64_t{0} : 0;
    opts.samples = 10000;
    const SuiteResult r = compose_suite(P, opts);
    if (!r.passed)
      o.fail(std::string(spec) + ": " + r.detail);
    else
      o.note(std::string(spec) + (smallest ? " exhaustive " : " sampled ") + std::to_string(r.checks));
  }
  return o;
}

// --- 7 ----------------------------------------------------------------------

Outcome structure_certification() {
  Outcome o;
  std::set<std::string> branches;
  for (const char *spec : {"I:4,4,3,2", "I:5,4,3,2", "I:5,5,3,2", "I:5,5,4,2", "II:3,3,2", "II:4,3,2", "II:5,4,2"}) {
    const GroupParams P = G(spec);
    const std::size_t x = perm_closure(generators_of(P, Subgroup::X), P).size();
    const std::size_t y = perm_closure(generators_of(P, Subgroup::Y), P).size();
    const std::size_t xy = intersection_XY(P).size();
    const std::size_t aut = enumerate_automorphisms(P).size();
    std::string why;
    if (x != pow2(P.a() + P.c()))
      why = "|X| = " + std::to_string(x);
    if (xy != (P.family() == Family::I ? pow2(2 * (P.a() - P.c())) : 4))
      why = "|X cap Y| = " + std::to_string(xy);
    if (x * y != xy * aut)
      why = "|X||Y| != |X cap Y||Aut|";
    if (!why.empty())
      o.fail(std::string(spec) + ": " + why);
    branches.insert(branch_of(P).label());
  }
  // I:4,4,3,2 and I:5,4,3,2 share a branch
  if (branches.size() != 6)
    o.fail("only " + std::to_string(branches.size()) + " distinct branches exercised");
  if (o.passed)
    o.note("7 groups, " + std::to_string(branches.size()) + " branches, counting identity holds");
  return o;
}

// --- 8 ----------------------------------------------------------------------

// On I(5,4,3,2), look for any phi1, phi2 in X satisfying the stated X relators
// with the stated orders, phi0 fixed, and generating X.
std::uint64_t stated_X_solutions(const GroupParams &P) {
  const GeneratorMap gens = generator_map(P);
  const Automorphism phi0 = gens.at("phi0");
  const AutSet X = perm_closure(generators_of(P, Subgroup::X), P);
  const unsigned a = P.a();
  std::vector<Automorphism> order2, order_a2;
  for (const Automorphism &A : X.elements()) {
    const unsigned k = aut_order_bits(A);
    if (k == 1)
      order2.push_back(A);
    if (k == a - 2)
      order_a2.push_back(A);
  }
  const Automorphism phi0_m5 = aut_pow(phi0, std::int64_t{-5});
  std::uint64_t hits = 0;
  for (const Automorphism &p1 : order2) {
    const Automorphism t = compose(p1, phi0);
    if (!compose(t, t).is_identity())
      continue;
    for (const Automorphism &p2 : order_a2) {
      if (compose(compose(p2, phi0), compose(inverse(p2), phi0_m5)) != identity(P))
        continue;
      if (!commutator(p1, p2).is_identity())
        continue;
      if (perm_closure(std::vector<Automorphism>{phi0, p1, p2}, P).size() == X.size())
        ++hits;
    }
  }
  return hits;
}

struct C8 {
  Outcome o;
  bool as_documented = false;
};

C8 relators() {
  C8 r;
  bool only_expected = true, saw_i5432 = false, saw_ii432 = false;
  for (const char *spec : {"I:4,4,3,2", "I:5,4,3,2", "I:5,5,3,2", "I:5,5,4,2", "II:3,3,2", "II:4,3,2", "II:5,4,2"}) {
    const GroupParams P = G(spec);
    const SuiteResult s = relators_suite(P);
    if (!s.passed) {
      r.o.fail(std::string(spec) + ": " + s.detail);
      if (std::string(spec) == "I:5,4,3,2")
        saw_i5432 = true;
      else
        only_expected = false;
    }
  }
  // the stated psi2 = psi_{1,5} of the e = a-2 branch
  const GroupParams P = G("II:4,3,2");
  if (!omega_violation(1, 5, P).empty()) {
    r.o.fail("II:4,3,2: stated psi2 = psi_{1,5} is not an automorphism");
    saw_ii432 = true;
  }
  const std::uint64_t hits = stated_X_solutions(G("I:5,4,3,2"));
  r.o.note("I:5,4,3,2 exhaustive search: " + std::to_string(hits) + " choices of (phi1, phi2) fit the stated R_X");
  r.as_documented = only_expected && saw_i5432 && saw_ii432 && hits == 0;
  return r;
}

// --- 9, 10, 11 ------------------------------------------------------------

Outcome xy_and_rprime() {
  Outcome o;
  for (const char *spec : {"I:4,4,3,2", "I:5,4,3,2", "I:5,5,3,2"}) {
    const GroupParams P = G(spec);
    if (!intersection_identifications_hold(P))
      o.fail(std::string(spec) + ": X cap Y identifications");
    if (!sample_rprime_check(P))
      o.fail(std::string(spec) + ": R' sample");
  }
  if (o.passed)
    o.note("identifications and R' sample hold on 3 groups");
  return o;
}

struct C10 {
  Outcome o;
  bool as_documented = false;
};

C10 ef_branch() {
  C10 r;
  const GroupParams P = G("II:4,3,2");
  const CocycleReport rep = cocycle_report(P);
  const std::size_t y = perm_closure(generators_of(P, Subgroup::Y), P).size();
  bool abelian = true;
  const auto ys = generators_of(P, Subgroup::Y);
  for (const auto &g : ys)
    for (const auto &h : ys)
      abelian = abelian && commutator(g.aut, h.aut).is_identity();
  if (!rep.passed())
    r.o.fail(std::string("psi_{1,5} admissible: ") + (rep.stated_psi2_admissible ? "yes" : "no") +
             ", [psi1,psi2] order 2^" + std::to_string(rep.commutator_order_bits));
  if (abelian)
    r.o.fail("Y is abelian");
  if (y != 16)
    r.o.fail("|Y| = " + std::to_string(y));
  r.o.note(std::to_string(rep.tuples_checked) + " tuples, |Y| = " + std::to_string(y));
  r.as_documented = !rep.stated_psi2_admissible && rep.commutator_order_bits == 0 && abelian && y == 16;
  return r;
}

Outcome generation() {
  Outcome o;
  for (const char *spec : kSix) {
    const GroupParams P = G(spec);
    const AutSet closure = perm_closure(standard_generators(P), P);
    const AutSet all = oracle_set(P);
    bool same = closure.size() == all.size();
    for (const Automorphism &A : all.elements())
      same = same && closure.contains(A);
    if (!same)
      o.fail(std::string(spec) + ": closure " + std::to_string(closure.size()) + " vs " + std::to_string(all.size()));
  }
  if (o.passed)
    o.note("closure = oracle set on 6 groups");
  return o;
}

// --- 12 ---------------------------------------------------------------------

std::string capture(const std::string &cmd, int &status) {
  std::string out;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 1 << 16> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome determinism(const std::string &cli) {
  Outcome o;
  if (cli.empty()) {
    o.fail("no --cli binary given");
    return o;
  }
  for (const char *spec : {"I:5,4,3,2", "II:4,3,2"}) {
    std::string reference;
    for (const char *jobs : {"1", "1", "2", "4", "8"}) {
      int status = 0;
      const std::string out =
          capture("'" + cli + "' --jobs " + jobs + " aut list " + spec + " --format jsonl", status);
      if (status != 0) {
        o.fail(std::string(spec) + ": exit status " + std::to_string(status));
        break;
      }
      if (reference.empty())
        reference = out;
      else if (out != reference)
        o.fail(std::string(spec) + ": output differs with --jobs " + jobs);
    }
    o.note(std::string(spec) + " " + std::to_string(std::count(reference.begin(), reference.end(), '\n')) + " lines");
  }
  return o;
}

} // namespace

int main(int argc, char **argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli")
      cli = argv[i + 1];

  int unexpected = 0;
  const auto line = [&](int n, const Outcome &o, bool expected_to_fail = false, bool as_documented = false) {
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << n << ": " << o.detail;
    if (expected_to_fail && !o.passed)
      std::cout << (as_documented ? "  [known, documented]" : "  [UNEXPECTED failure mode]");
    std::cout << std::endl;
    if (expected_to_fail ? (o.passed || !as_documented) : !o.passed)
      ++unexpected;
  };

  try {
    line(1, order_formula({{"I:4,4,3,2", 10}, {"I:5,4,3,2", 120}, {"I:5,5,3,2", 120}}));
    line(2, order_formula({{"II:3,3,2", 60}, {"II:4,3,2", 60}, {"II:5,4,2", 60}}));
    line(3, lemma22_vs_oracle());
    line(4, simplified_equivalence());
    line(5, closed_form_coherence());
    line(6, composition_laws());
    line(7, structure_certification());
    const C8 conjugation = relators();
    line(8, conjugation.o, true, conjugation.as_documented);
    line(9, xy_and_rprime());
    const C10 c10 = ef_branch();
    line(10, c10.o, true, c10.as_documented);
    line(11, generation());
    line(12, determinism(cli));
  } catch (const std::exception &e) {
    std::cout << "ERROR " << e.what() << std::endl;
    return 2;
  }
  std::cout << (unexpected ? "acceptance: unexpected results" : "acceptance: all results as expected") << std::endl;
  return unexpected ? 1 : 0;
}
