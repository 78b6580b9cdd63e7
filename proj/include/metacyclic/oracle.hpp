#pragma once

// Brute-force certification: exhaustive enumeration of Aut(H) from the defining
// relations, closures of generating sets, and evaluation of relator words.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "automorphism.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hom_check.hpp"
#include "structure.hpp"

namespace metacyclic {

struct OracleOptions {
  /// Cap on the candidate-space exponent 2(a+b).
  unsigned max_bits = kDefaultEnumerationBits;
  unsigned jobs = 1;
};

inline void check_candidate_cap(const GroupParams &P, unsigned max_bits) {
  const unsigned bits = 2 * P.order_bits();
  if (bits > max_bits)
    throw CapExceeded("candidate space 2^" + std::to_string(bits) + " for " + P.spec_string() +
                      " exceeds cap 2^" + std::to_string(max_bits) + " (raise --max-bits)");
}

namespace detail {

/// All automorphisms with img_alpha.u == x1, in (y1, x2, y2) lexicographic order.
inline std::vector<GenImages> automorphisms_with_x1(std::uint64_t x1, const GroupParams &P, ClosureScratch &scratch) {
  std::vector<GenImages> out;
  const std::uint64_t na = pow2(P.a()), nb = pow2(P.b());
  const auto two_a = static_cast<std::int64_t>(pow2(P.a()));
  const auto two_b = static_cast<std::int64_t>(pow2(P.b()));
  const auto two_c = static_cast<std::int64_t>(pow2(P.c()));
  const auto r = static_cast<std::int64_t>(P.r().value());
  const std::uint64_t full = pow2(P.order_bits());
  for (std::uint64_t y1 = 0; y1 < nb; ++y1) {
    const Element A{x1, y1};
    if (pow(A, two_a, P) != identity_element())
      continue;
    const Element A_c = pow(A, two_c, P);
    const Element A_r = pow(A, r, P);
    for (std::uint64_t x2 = 0; x2 < na; ++x2)
      for (std::uint64_t y2 = 0; y2 < nb; ++y2) {
        const Element B{x2, y2};
        // beta^(2^b) = alpha^(2^c) and beta alpha = alpha^r beta
        if (pow(B, two_b, P) != A_c || mul(B, A, P) != mul(A_r, B, P))
          continue;
        const Element gens[] = {A, B};
        if (scratch.generated_size(gens, P) == full)
          out.push_back({A, B});
      }
  }
  return out;
}

} // namespace detail

/// Every pair of generator images that satisfies the defining relations and
/// generates H, sorted by (x1, y1, x2, y2). The result does not depend on jobs.
inline std::vector<GenImages> enumerate_automorphisms(const GroupParams &P, const OracleOptions &opts = {}) {
  check_candidate_cap(P, opts.max_bits);
  const std::uint64_t na = pow2(P.a());
  std::vector<std::vector<GenImages>> by_x1(na);
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    ClosureScratch scratch;
    for (std::uint64_t x1; (x1 = next.fetch_add(1)) < na;)
      by_x1[x1] = detail::automorphisms_with_x1(x1, P, scratch);
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i)
      pool.emplace_back(worker);
  }
  std::vector<GenImages> all;
  for (auto &part : by_x1)
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

// ---------------------------------------------------------------------------
// Closures

/// A finite set of automorphisms, kept in discovery order with a hash index.
class AutSet {
public:
  explicit AutSet(GroupParams P) : params_(std::move(P)) {}

  bool insert(const Automorphism &A) {
    if (!index_.insert(A.images()).second)
      return false;
    elements_.push_back(A);
    return true;
  }
  bool contains(const Automorphism &A) const { return index_.contains(A.images()); }
  bool contains(const GenImages &G) const { return index_.contains(G); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Automorphism> &elements() const { return elements_; }
  const GroupParams &params() const { return params_; }

  std::vector<Automorphism> sorted() const {
    std::vector<Automorphism> out = elements_;
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  GroupParams params_;
  std::vector<Automorphism> elements_;
  std::unordered_set<GenImages> index_;
};

/// Closure of gens under composition; elements are keyed by their generator images.
inline AutSet perm_closure(const std::vector<Automorphism> &gens, const GroupParams &P,
                           const OracleOptions &opts = {}) {
  check_candidate_cap(P, opts.max_bits);
  AutSet set(P);
  set.insert(identity(P));
  for (std::size_t head = 0; head < set.size(); ++head) {
    const Automorphism x = set.elements()[head];
    for (const Automorphism &g : gens) {
      if (!(g.params() == P))
        throw ParamMismatch("perm_closure: generator from another group");
      set.insert(compose(g, x));
    }
  }
  return set;
}

inline AutSet perm_closure(const std::vector<NamedAutomorphism> &gens, const GroupParams &P,
                           const OracleOptions &opts = {}) {
  std::vector<Automorphism> plain;
  for (const auto &g : gens)
    plain.push_back(g.aut);
  return perm_closure(plain, P, opts);
}

inline AutSet oracle_set(const GroupParams &P, const OracleOptions &opts = {}) {
  AutSet set(P);
  for (const GenImages &G : enumerate_automorphisms(P, opts))
    set.insert(Automorphism::from_images(G, P));
  return set;
}

/// X cap Y, with X and Y obtained as closures of their standard generators.
inline std::vector<Automorphism> intersection_XY(const GroupParams &P, const OracleOptions &opts = {}) {
  const AutSet X = perm_closure(generators_of(P, Subgroup::X), P, opts);
  const AutSet Y = perm_closure(generators_of(P, Subgroup::Y), P, opts);
  std::vector<Automorphism> out;
  for (const Automorphism &A : X.elements())
    if (Y.contains(A))
      out.push_back(A);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Words over named generators
//
//   word   := factor { ['*'] factor }
//   factor := atom [ '^' integer ]
//   atom   := name | '1' | '(' word ')' | '[' word ',' word ']'
// [x, y] denotes x^-1 y^-1 x y; products compose right to left as maps, i.e. the
// word "x y" is the automorphism x o y.

struct Word {
  enum class Kind { Generator, Product, Power, Commutator };
  Word() = default;
  explicit Word(Kind k) : kind(k) {}

  Kind kind = Kind::Product;
  std::string name;           // Generator
  std::vector<Word> parts;    // Product (any length), Power (1), Commutator (2)
  std::int64_t exponent = 1;  // Power
};

namespace detail {

class WordParser {
public:
  explicit WordParser(std::string_view text) : s_(text) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

private:
  Word word() {
    Word w{Word::Kind::Product};
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      if (pos_ >= s_.size() || s_[pos_] == ')' || s_[pos_] == ',' || s_[pos_] == ']')
        break;
      w.parts.push_back(factor());
    }
    return w;
  }

  Word factor() {
    Word base = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
        ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      Word p{Word::Kind::Power};
      p.exponent = parse_int(s_.substr(start, pos_ - start), "a word exponent");
      p.parts.push_back(std::move(base));
      return p;
    }
    return base;
  }

  Word atom() {
    skip();
    if (pos_ >= s_.size())
      fail("unexpected end of word");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (ch == '[') {
      ++pos_;
      Word c{Word::Kind::Commutator};
      c.parts.push_back(word());
      expect(',');
      c.parts.push_back(word());
      expect(']');
      return c;
    }
    if (ch == '1') {
      ++pos_;
      return Word{Word::Kind::Product};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      Word g{Word::Kind::Generator};
      g.name = std::string(s_.substr(start, pos_ - start));
      return g;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  void expect(char ch) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ch)
      fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string &why) const {
    throw ParseError("word '" + std::string(s_) + "': " + why + " at position " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Word parse_word(std::string_view text) { return detail::WordParser(text).parse(); }

using GeneratorMap = std::map<std::string, Automorphism, std::less<>>;

inline GeneratorMap generator_map(const GroupParams &P) {
  GeneratorMap m;
  for (auto &g : standard_generators(P))
    m.emplace(g.name, g.aut);
  return m;
}

inline Automorphism evaluate(const Word &w, const GeneratorMap &gens, const GroupParams &P) {
  switch (w.kind) {
  case Word::Kind::Generator: {
    const auto it = gens.find(w.name);
    if (it == gens.end())
      throw UnknownGenerator("generator '" + w.name + "' is not defined for " + P.spec_string());
    return it->second;
  }
  case Word::Kind::Product: {
    Automorphism acc = identity(P);
    for (const Word &part : w.parts)
      acc = compose(acc, evaluate(part, gens, P));
    return acc;
  }
  case Word::Kind::Power:
    return aut_pow(evaluate(w.parts.at(0), gens, P), w.exponent);
  case Word::Kind::Commutator:
    return commutator(evaluate(w.parts.at(0), gens, P), evaluate(w.parts.at(1), gens, P));
  }
  return identity(P);
}

inline Automorphism evaluate(std::string_view word, const GeneratorMap &gens, const GroupParams &P) {
  return evaluate(parse_word(word), gens, P);
}

/// True iff every relator evaluates to the identity over the standard generators.
inline bool verify_relators(const std::vector<std::string> &relators, const GroupParams &P) {
  const GeneratorMap gens = generator_map(P);
  return std::all_of(relators.begin(), relators.end(),
                     [&](const std::string &w) { return evaluate(w, gens, P).is_identity(); });
}

/// A generator together with the exponent k of its claimed order 2^k.
struct OrderClaim {
  std::string generator;
  unsigned bits;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relators;
  std::vector<OrderClaim> orders;
};

namespace detail {
inline std::string pw(std::string_view g, std::int64_t k) { return std::string(g) + "^" + std::to_string(k); }
inline std::int64_t p2(unsigned k) { return static_cast<std::int64_t>(pow2(k)); }
} // namespace detail

/// The presentation of X for the branch of P.
inline Presentation presentation_X(const GroupParams &P) {
  using detail::p2;
  using detail::pw;
  const Branch br = branch_of(P);
  const unsigned a = P.a(), c = P.c();
  if (P.family() == Family::I) {
    const unsigned f = P.f();
    if (br.f_at_least_c_plus_2)
      return {{"phi0", "phi1"},
              {pw("phi0", p2(f)), pw("phi1", p2(a + c - f)), "phi1 phi0 phi1^-1 " + pw("phi0", p2(f - c) - 1)},
              {{"phi0", f}, {"phi1", a + c - f}}};
    return {{"phi0", "phi1", "phi2"},
            {pw("phi0", p2(f)), "phi1^2", pw("phi2", p2(a - 2)), "(phi1 phi0)^2", "phi2 phi0 phi2^-1 phi0^-5",
             "[phi1, phi2]"},
            {{"phi0", f}, {"phi1", 1}, {"phi2", a - 2}}};
  }
  return {{"phi0", "phi1", "phi2"},
          {pw("phi0", p2(a)), "phi1^2", pw("phi2", p2(a - 2)), "phi1 phi0 phi1^-1 phi0", "phi2 phi0 phi2^-1 phi0^-5",
           "[phi1, phi2]"},
          {{"phi0", a}, {"phi1", 1}, {"phi2", a - 2}}};
}

/// The presentation of Y for the branch of P.
///
/// Family I, c >= d+2: the conjugation relator is psi1 psi0 psi1^-1 psi0^(2^(c-d)-1) and psi1
/// has order 2^(a+b+d-2c), matching Y = Z_{2^d} x| Z_{2^(a+b+d-2c)}.
/// Family II, e = a-2: Y = <psi0, psi1, psi2t> is elementary-by-cyclic abelian.
inline Presentation presentation_Y(const GroupParams &P) {
  using detail::p2;
  using detail::pw;
  const Branch br = branch_of(P);
  const unsigned a = P.a(), b = P.b(), c = P.c(), d = P.d();
  if (P.family() == Family::I) {
    if (br.c_at_least_d_plus_2)
      return {{"psi0", "psi1"},
              {pw("psi0", p2(d)), pw("psi1", p2(a + b + d - 2 * c)),
               "psi1 psi0 psi1^-1 " + pw("psi0", p2(c - d) - 1)},
              {{"psi0", d}, {"psi1", a + b + d - 2 * c}}};
    return {{"psi0", "psi1", "psi2"},
            {pw("psi0", p2(d)), "psi1^2", pw("psi2", p2(a + b - c - 2)), "(psi1 psi0)^2",
             "psi2 psi0 psi2^-1 psi0^-5", "[psi1, psi2]"},
            {{"psi0", d}, {"psi1", 1}, {"psi2", a + b - c - 2}}};
  }
  const unsigned e = *P.e();
  switch (br.e_case) {
  case 3:
    return {{"psi0", "psi1"},
            {"psi0^2", pw("psi1", p2(b + e + 2 - a)), "[psi0, psi1]"},
            {{"psi0", 1}, {"psi1", b + e + 2 - a}}};
  case 2:
    return {{"psi0", "psi1", "psi2t"},
            {"psi0^2", "psi1^2", pw("psi2t", p2(b - 1)), "[psi0, psi1]", "[psi0, psi2t]", "[psi1, psi2t]"},
            {{"psi0", 1}, {"psi1", 1}, {"psi2t", b - 1}}};
  default:
    return {{"psi0", "psi1t", "psi2t"},
            {"psi0^2", "psi1t^2", pw("psi2t", p2(b - 1)), "[psi0, psi1t]", "[psi0, psi2t]", "[psi1t, psi2t]"},
            {{"psi0", 1}, {"psi1t", 1}, {"psi2t", b - 1}}};
  }
}

/// Identifications of the generators of X cap Y (family I):
/// phi_{1+2^c,0} = psi_{2^d,1} and phi_{1,2^c} = psi_{0,1+2^b}.
inline bool intersection_identifications_hold(const GroupParams &P) {
  if (P.family() != Family::I)
    throw WrongFamily("the X cap Y identifications are stated for family I");
  const auto I = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };
  return phi(1 + I(pow2(P.c())), 0, P) == psi(I(pow2(P.d())), 1, P) &&
         phi(1, I(pow2(P.c())), P) == psi(0, 1 + I(pow2(P.b())), P);
}

/// True iff each generator's order in Aut(H) is exactly the claimed 2^k.
inline bool orders_exact(const Presentation &pres, const GroupParams &P) {
  const GeneratorMap gens = generator_map(P);
  for (const OrderClaim &claim : pres.orders) {
    const auto it = gens.find(claim.generator);
    if (it == gens.end())
      throw UnknownGenerator("generator '" + claim.generator + "' is not defined for " + P.spec_string());
    if (aut_order_bits(it->second) != claim.bits)
      return false;
  }
  return true;
}

} // namespace metacyclic
