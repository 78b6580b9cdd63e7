#pragma once

// Parameters and element arithmetic of the metacyclic 2-group
//   H(2^a, 2^b; 2^c, r) = < alpha, beta | alpha^(2^a) = 1, beta^(2^b) = alpha^(2^c),
//                                         beta alpha beta^-1 = alpha^r >.
// Every element has a unique normal form alpha^u beta^v with u mod 2^a, v mod 2^b.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "arith2.hpp"
#include "errors.hpp"

namespace metacyclic {

enum class Family { I, II, Unclassified };

inline std::string to_string(Family f) {
  switch (f) {
  case Family::I:
    return "I";
  case Family::II:
    return "II";
  case Family::Unclassified:
    break;
  }
  return "unclassified";
}

/// Normal form alpha^u beta^v. Coordinates are reduced: u < 2^a, v < 2^b.
struct Element {
  std::uint64_t u = 0;
  std::uint64_t v = 0;

  friend auto operator<=>(const Element &, const Element &) = default;
};

/// Largest group (in bits of |H| = 2^(a+b)) we accept at all; keeps every
/// intermediate exponent below 2^62.
inline constexpr unsigned kMaxGroupBits = 40;

/// Tables of r^v are precomputed when 2^b is at most this.
inline constexpr unsigned kPowerTableBits = 20;

class GroupParams {
public:
  /// H_I(a,b,c,d) = H(2^a, 2^b; 2^c, 2^d + 1).
  static GroupParams family_I(unsigned a, unsigned b, unsigned c, unsigned d) {
    if (d <= 1)
      throw ConstraintViolation("family I requires d > 1 (got d = " + std::to_string(d) + ")");
    const unsigned lower = std::max(d, a >= d + 1 ? a - d - 1 : 0U);
    if (!(lower < c))
      throw ConstraintViolation("family I requires max{d, a-d-1} < c (max{" + std::to_string(d) +
                                ", " + std::to_string(static_cast<int>(a) - static_cast<int>(d) - 1) +
                                "} = " + std::to_string(lower) + ", c = " + std::to_string(c) + ")");
    if (!(c < std::min(a, b)))
      throw ConstraintViolation("family I requires c < min{a, b} (c = " + std::to_string(c) +
                                ", min{a, b} = " + std::to_string(std::min(a, b)) + ")");
    check_size(a, b);
    GroupParams p(a, b, c, Residue::from_unsigned(pow2(d) + 1, a));
    p.family_ = Family::I;
    p.d_ = d;
    const Residue unit = Residue::from_unsigned(1 + pow2(d - 1), p.y_bits());
    p.w_ = -inv_unit(unit);
    return p;
  }

  /// H_II(a,b,e) = H(2^a, 2^b; 2^(a-1), 2^e - 1).
  static GroupParams family_II(unsigned a, unsigned b, unsigned e) {
    if (b == 1)
      throw FamilyIIIError("b = 1 gives the generalized quaternion family H(2^a, 2; 2^(a-1), 2^a - 1), "
                           "which is out of scope");
    const unsigned lower = std::max(1U, a > b ? a - b : 0U);
    if (!(lower < e))
      throw ConstraintViolation("family II requires max{1, a-b} < e (max{1, " +
                                std::to_string(static_cast<int>(a) - static_cast<int>(b)) + "} = " +
                                std::to_string(lower) + ", e = " + std::to_string(e) + ")");
    if (!(e < std::min(a, b)))
      throw ConstraintViolation("family II requires e < min{a, b} (e = " + std::to_string(e) +
                                ", min{a, b} = " + std::to_string(std::min(a, b)) + ")");
    check_size(a, b);
    GroupParams p(a, b, a - 1, Residue::from_unsigned(pow2(e) - 1, a));
    p.family_ = Family::II;
    p.d_ = 1;
    p.e_ = e;
    return p;
  }

  /// Any H(2^a, 2^b; 2^c, r) satisfying r^(2^b) = 2^c (r - 1) = 0 mod 2^a, with r odd
  /// and c <= a. The result is tagged Unclassified even when it happens to match a family.
  static GroupParams general(unsigned a, unsigned b, unsigned c, std::uint64_t r) {
    check_size(a, b);
    if (c > a)
      throw ConstraintViolation("c must not exceed a");
    const Residue rr = Residue::from_unsigned(r, a);
    if (a > 0 && !rr.is_odd())
      throw ConstraintViolation("r must be odd");
    if (rr.pow(pow2(b)) != Residue::from_unsigned(1, a))
      throw ConstraintViolation("r^(2^b) != 1 mod 2^a");
    if (Residue::from_unsigned(pow2(c), a) * (rr - Residue::from_unsigned(1, a)) != Residue::from_unsigned(0, a))
      throw ConstraintViolation("2^c (r - 1) != 0 mod 2^a");
    GroupParams p(a, b, c, rr);
    const Valuation dv = (rr - Residue::from_unsigned(1, a)).valuation();
    p.d_ = dv.is_infinite() ? a : dv.value();
    return p;
  }

  unsigned a() const { return a_; }
  unsigned b() const { return b_; }
  unsigned c() const { return c_; }
  /// ||r - 1|| (family I), 1 (family II).
  unsigned d() const { return d_; }
  /// Family II only.
  std::optional<unsigned> e() const { return e_; }
  Residue r() const { return r_; }
  Family family() const { return family_; }
  bool classified() const { return family_ != Family::Unclassified; }

  unsigned f() const { return std::min(a_, b_); }
  int z() const { return b_ < a_ ? -1 : 0; }
  /// -(1 + 2^(d-1))^-1 in the y-slot ring Z/2^(a+d-c). Family I only.
  Residue w() const {
    if (family_ != Family::I)
      throw WrongFamily("w is defined for family I only");
    return w_;
  }

  /// |H| = 2^(a+b).
  unsigned order_bits() const { return a_ + b_; }
  /// beta has order 2^(a+b-c).
  unsigned beta_order_bits() const { return a_ + b_ - c_; }
  /// Modulus exponent of the y coordinate of an automorphism quadruple.
  unsigned y_bits() const { return a_ + d_ - c_; }
  /// Modulus exponent of the y2 coordinate of an automorphism quadruple.
  unsigned y2_bits() const { return a_ + b_ - c_; }

  /// r^v mod 2^a for 0 <= v < 2^b.
  std::uint64_t r_pow(std::uint64_t v) const {
    if (r_table_)
      return (*r_table_)[v];
    return r_.pow(v).value();
  }

  std::string spec_string() const {
    switch (family_) {
    case Family::I:
      return "I:" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + "," +
             std::to_string(d_);
    case Family::II:
      return "II:" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(*e_);
    case Family::Unclassified:
      break;
    }
    return "H(2^" + std::to_string(a_) + ",2^" + std::to_string(b_) + ";2^" + std::to_string(c_) + "," +
           std::to_string(r_.value()) + ")";
  }

  friend bool operator==(const GroupParams &x, const GroupParams &y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.r_ == y.r_ && x.family_ == y.family_;
  }

private:
  GroupParams(unsigned a, unsigned b, unsigned c, Residue r) : a_(a), b_(b), c_(c), r_(r) {
    if (b <= kPowerTableBits) {
      auto table = std::make_shared<std::vector<std::uint64_t>>(pow2(b));
      Residue x = Residue::from_unsigned(1, a);
      for (auto &entry : *table) {
        entry = x.value();
        x *= r;
      }
      r_table_ = std::move(table);
    }
  }

  static void check_size(unsigned a, unsigned b) {
    if (a + b > kMaxGroupBits)
      throw ConstraintViolation("a + b = " + std::to_string(a + b) + " exceeds the supported " +
                                std::to_string(kMaxGroupBits));
  }

  unsigned a_, b_, c_;
  Residue r_;
  Family family_ = Family::Unclassified;
  unsigned d_ = 0;
  std::optional<unsigned> e_;
  Residue w_;
  std::shared_ptr<const std::vector<std::uint64_t>> r_table_;
};

// ---------------------------------------------------------------------------
// Element arithmetic

inline Element identity_element() { return {}; }
inline Element alpha() { return {1, 0}; }

inline Element make_element(std::int64_t u, std::int64_t v, const GroupParams &P) {
  return {reduce(u, P.a()), reduce(v, P.b())};
}

/// alpha^x for any integer x.
inline Element alpha_pow(std::int64_t x, const GroupParams &P) { return {reduce(x, P.a()), 0}; }

/// beta^n for any integer n, using beta^(2^b) = alpha^(2^c).
inline Element beta_pow(std::int64_t n, const GroupParams &P) {
  const std::uint64_t m = reduce(n, P.beta_order_bits());
  const std::uint64_t carry = m >> P.b();
  return {static_cast<std::uint64_t>(u128{carry} << P.c()) & mask(P.a()), m & mask(P.b())};
}

inline Element beta(const GroupParams &P) { return beta_pow(1, P); }

/// (alpha^u1 beta^v1)(alpha^u2 beta^v2) = alpha^(u1 + u2 r^v1) beta^(v1 + v2), carrying
/// beta^(2^b) into alpha^(2^c).
inline Element mul(const Element &g, const Element &h, const GroupParams &P) {
  const unsigned a = P.a();
  std::uint64_t u = g.u + static_cast<std::uint64_t>(u128{h.u} * P.r_pow(g.v));
  std::uint64_t v = g.v + h.v;
  if (v >= pow2(P.b())) {
    v -= pow2(P.b());
    u += pow2(P.c());
  }
  return {u & mask(a), v};
}

/// (alpha^u beta^v)^-1 = beta^-v alpha^-u.
inline Element inv(const Element &g, const GroupParams &P) {
  return mul(beta_pow(-static_cast<std::int64_t>(g.v), P), alpha_pow(-static_cast<std::int64_t>(g.u), P), P);
}

/// g^k by square-and-multiply; negative k goes through the inverse.
inline Element pow(const Element &g, std::int64_t k, const GroupParams &P) {
  Element base = k < 0 ? inv(g, P) : g;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element result = identity_element();
  while (e != 0) {
    if (e & 1U)
      result = mul(result, base, P);
    base = mul(base, base, P);
    e >>= 1;
  }
  return result;
}

/// Least k >= 1 with g^k = 1. Every element of a 2-group has 2-power order.
inline std::uint64_t order_of(const Element &g, const GroupParams &P) {
  Element x = g;
  unsigned bits = 0;
  while (x != identity_element()) {
    x = mul(x, x, P);
    ++bits;
    if (bits > P.order_bits())
      throw Error("order_of: element order is not a power of two");
  }
  return pow2(bits);
}

/// Position of g in the lexicographic (u, v) enumeration.
inline std::uint64_t element_index(const Element &g, const GroupParams &P) { return (g.u << P.b()) | g.v; }

inline Element element_at(std::uint64_t index, const GroupParams &P) {
  return {index >> P.b(), index & mask(P.b())};
}

inline constexpr unsigned kDefaultEnumerationBits = 24;

/// Calls fn on every element, u ascending then v ascending.
template <typename Fn>
void for_each_element(const GroupParams &P, Fn &&fn, unsigned max_bits = kDefaultEnumerationBits) {
  if (P.order_bits() > max_bits)
    throw CapExceeded("enumerating 2^" + std::to_string(P.order_bits()) + " elements exceeds cap 2^" +
                      std::to_string(max_bits));
  const std::uint64_t n = pow2(P.order_bits());
  for (std::uint64_t i = 0; i < n; ++i)
    fn(element_at(i, P));
}

inline std::vector<Element> enumerate(const GroupParams &P, unsigned max_bits = kDefaultEnumerationBits) {
  std::vector<Element> out;
  for_each_element(P, [&](const Element &g) { out.push_back(g); }, max_bits);
  return out;
}

// ---------------------------------------------------------------------------
// Text syntax: parameters "I:a,b,c,d" / "II:a,b,e", elements "a^u*b^v".

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected a nonnegative decimal integer for " + std::string(what) + ", got '" +
                     std::string(s) + "'");
  return value;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected a decimal integer for " + std::string(what) + ", got '" + std::string(s) +
                     "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

} // namespace detail

inline GroupParams parse_params(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const auto colon = s.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("parameter spec must look like I:a,b,c,d or II:a,b,e, got '" + std::string(s) + "'");
  const std::string_view tag = detail::trim(s.substr(0, colon));
  const auto fields = detail::split(s.substr(colon + 1), ',');
  std::vector<unsigned> n;
  for (auto field : fields) {
    const std::uint64_t x = detail::parse_uint(field, "a parameter");
    if (x == 0 || x > 64)
      throw ConstraintViolation("parameters must be positive integers at most 64, got " + std::to_string(x));
    n.push_back(static_cast<unsigned>(x));
  }
  if (tag == "I") {
    if (n.size() != 4)
      throw ParseError("family I takes four parameters a,b,c,d");
    return GroupParams::family_I(n[0], n[1], n[2], n[3]);
  }
  if (tag == "II") {
    if (n.size() != 3)
      throw ParseError("family II takes three parameters a,b,e");
    return GroupParams::family_II(n[0], n[1], n[2]);
  }
  if (tag == "III")
    throw FamilyIIIError("family III (generalized quaternion) is out of scope");
  throw ParseError("unknown family tag '" + std::string(tag) + "' (expected I or II)");
}

/// Parses "a^u*b^v", "a^u", "b^v", "a", "b", or "1". Exponents are reduced into
/// normal form, so "b^16" in H_I(4,4,3,2) is alpha^8.
inline Element parse_element(std::string_view text, const GroupParams &P) {
  const std::string_view s = detail::trim(text);
  if (s == "1" || s == "e")
    return identity_element();
  Element g = identity_element();
  bool seen_a = false;
  bool seen_b = false;
  for (auto factor : detail::split(s, '*')) {
    factor = detail::trim(factor);
    if (factor.empty())
      throw ParseError("empty factor in element '" + std::string(s) + "'");
    const char gen = factor.front();
    std::uint64_t exponent = 1;
    if (factor.size() > 1) {
      if (factor[1] != '^')
        throw ParseError("expected '^' after generator in '" + std::string(factor) + "'");
      exponent = detail::parse_uint(factor.substr(2), "an exponent");
    }
    if (gen == 'a' && !seen_a && !seen_b) {
      g = mul(g, alpha_pow(static_cast<std::int64_t>(exponent & mask(P.a())), P), P);
      seen_a = true;
    } else if (gen == 'b' && !seen_b) {
      g = mul(g, beta_pow(static_cast<std::int64_t>(exponent & mask(P.beta_order_bits())), P), P);
      seen_b = true;
    } else {
      throw ParseError("element must have the form a^u*b^v, got '" + std::string(s) + "'");
    }
  }
  return g;
}

inline std::string format_element(const Element &g) {
  return "a^" + std::to_string(g.u) + "*b^" + std::to_string(g.v);
}

inline std::ostream &operator<<(std::ostream &os, const Element &g) { return os << format_element(g); }

} // namespace metacyclic

template <>
struct std::hash<metacyclic::Element> {
  std::size_t operator()(const metacyclic::Element &g) const noexcept {
    return std::hash<std::uint64_t>{}(g.u * 0x9E3779B97F4A7C15ULL ^ g.v);
  }
};
