#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// with string streams.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 cap exceeded.

#include <CLI11.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "io.hpp"
#include "metacyclic.hpp"
#include "verify.hpp"

namespace metacyclic::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kCap = 3 };

namespace detail {

struct Globals {
  bool human = false;
  unsigned max_bits = kDefaultEnumerationBits;
  unsigned jobs = 1;

  OracleOptions oracle() const { return {max_bits, jobs}; }
};

inline Json suite_json(const SuiteResult &r) {
  Json j;
  j["suite"] = r.name;
  j["applicable"] = r.applicable;
  j["passed"] = r.passed;
  j["checks"] = r.checks;
  j["detail"] = r.detail;
  return j;
}

inline Quad parse_quad(const std::string &text) {
  const auto parts = metacyclic::detail::split(text, ',');
  if (parts.size() != 4)
    throw ParseError("quadruple must be x1,x2,y,y2: '" + text + "'");
  return {metacyclic::detail::parse_int(parts[0], "x1"), metacyclic::detail::parse_int(parts[1], "x2"),
          metacyclic::detail::parse_int(parts[2], "y"), metacyclic::detail::parse_int(parts[3], "y2")};
}

inline void print(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

// --- subcommand bodies ------------------------------------------------------

inline int classify(const Globals &g, const std::string &spec, std::ostream &out) {
  const GroupParams P = parse_params(spec);
  Json j = to_json(P);
  j["aut_order_bits"] = aut_order_formula_bits(P);
  if (!g.human) {
    print(out, j);
    return kOk;
  }
  out << P.spec_string() << ": family " << to_string(P.family()) << ", r = " << P.r().value()
      << ", |H| = 2^" << P.order_bits() << "\n";
  if (P.family() == Family::I)
    out << "f = " << P.f() << ", z = " << P.z() << ", w = " << P.w().value() << " (mod 2^" << P.y_bits() << ")\n";
  out << "|Aut(H)| = 2^" << aut_order_formula_bits(P) << "\n";
  return kOk;
}

inline void human_subgroup(std::ostream &out, const char *name, const SubgroupReport &S) {
  out << name << ": " << S.description() << ", order 2^" << S.order_bits() << "\n";
  for (const NamedAutomorphism &n : S.generators)
    out << "  " << n.name << " = " << n.aut << "\n";
}

inline int structure(const Globals &g, const std::string &spec, std::ostream &out) {
  const GroupParams P = parse_params(spec);
  const StructureReport R = structure_report(P);
  if (!g.human) {
    Json j;
    j["spec"] = P.spec_string();
    j.update(to_json(R));
    print(out, j);
    return kOk;
  }
  out << P.spec_string() << " (" << R.branch << "), |Aut(H)| = 2^" << R.aut_order_bits << "\n";
  human_subgroup(out, "X", R.X);
  human_subgroup(out, "Y", R.Y);
  human_subgroup(out, "X cap Y", R.X_cap_Y);
  return kOk;
}

inline int aut_count(const Globals &g, const std::string &spec, const std::string &method, std::ostream &out) {
  const GroupParams P = parse_params(spec);
  std::uint64_t count = 0;
  unsigned bits = 0;
  if (method == "oracle") {
    count = enumerate_automorphisms(P, g.oracle()).size();
    bits = static_cast<unsigned>(std::countr_zero(count));
  } else {
    bits = aut_order_formula_bits(P);
    count = bits < 64 ? pow2(bits) : 0;
  }
  if (g.human) {
    if (bits < 64)
      out << count << "\n";
    else
      out << "2^" << bits << "\n";
    return kOk;
  }
  Json j;
  j["spec"] = P.spec_string();
  j["method"] = method;
  if (bits < 64)
    j["count"] = count;
  j["order_bits"] = bits;
  print(out, j);
  return kOk;
}

inline int aut_list(const Globals &g, const std::string &spec, std::ostream &out) {
  const GroupParams P = parse_params(spec);
  const std::vector<Automorphism> auts = oracle_set(P, g.oracle()).sorted();
  if (!g.human) {
    write_jsonl(out, auts);
    return kOk;
  }
  for (const Automorphism &A : auts)
    out << A << ": a -> " << A.images().img_alpha << ", b -> " << A.images().img_beta << "\n";
  return kOk;
}

inline int aut_apply(const Globals &g, const std::string &spec, const std::string &quad, const std::string &elem,
                     std::ostream &out) {
  const GroupParams P = parse_params(spec);
  const Automorphism A = make_aut(parse_quad(quad), P);
  const Element x = parse_element(elem, P);
  const Element y = apply(A, x);
  if (g.human) {
    out << A << "(" << x << ") = " << y << "\n";
    return kOk;
  }
  Json j;
  j["automorphism"] = to_json(A);
  j["element"] = to_json(x);
  j["image"] = to_json(y);
  j["image_text"] = format_element(y);
  print(out, j);
  return kOk;
}

inline int elem(const Globals &g, const std::string &op, const std::string &spec, const std::vector<std::string> &args,
                std::ostream &out) {
  const GroupParams P = parse_params(spec);
  const std::size_t want = op == "mul" || op == "pow" ? 2 : 1;
  if (args.size() != want)
    throw ParseError("elem " + op + " takes " + std::to_string(want) + " argument(s)");
  const Element x = parse_element(args[0], P);
  Json j;
  j["spec"] = P.spec_string();
  j["op"] = op;
  if (op == "order") {
    const std::uint64_t n = order_of(x, P);
    if (g.human) {
      out << n << "\n";
      return kOk;
    }
    j["order"] = n;
    print(out, j);
    return kOk;
  }
  Element y;
  if (op == "mul")
    y = mul(x, parse_element(args[1], P), P);
  else if (op == "pow")
    y = pow(x, metacyclic::detail::parse_int(args[1], "exponent"), P);
  else
    y = inv(x, P);
  if (g.human) {
    out << y << "\n";
    return kOk;
  }
  j["result"] = to_json(y);
  j["result_text"] = format_element(y);
  print(out, j);
  return kOk;
}

inline int verify(const Globals &g, const std::string &spec, const std::string &suite, std::ostream &out) {
  const GroupParams P = parse_params(spec);
  VerifyOptions opts;
  opts.oracle = g.oracle();
  const bool all = suite == "all";
  std::vector<SuiteResult> results;
  if (all || suite == "lemma22")
    results.push_back(lemma22_suite(P, opts));
  if (all || suite == "compose")
    results.push_back(compose_suite(P, opts));
  if (all || suite == "relators")
    results.push_back(relators_suite(P));
  if (all || suite == "rprime")
    results.push_back(rprime_suite(P));
  if (all || suite == "cocycle")
    results.push_back(cocycle_suite(P));

  // a suite asked for by name must apply to the group
  if (!all && !results.front().applicable) {
    if (suite == "rprime")
      throw WrongFamily("suite rprime: " + results.front().detail);
    throw WrongBranch("suite " + suite + ": " + results.front().detail);
  }

  bool ok = true;
  for (const SuiteResult &r : results)
    ok = ok && (!r.applicable || r.passed);

  if (g.human) {
    for (const SuiteResult &r : results) {
      out << std::left << std::setw(10) << r.name;
      if (!r.applicable)
        out << "skipped  " << r.detail << "\n";
      else
        out << (r.passed ? "PASS     " : "FAIL     ") << r.checks << " checks"
            << (r.detail.empty() ? "" : ", " + r.detail) << "\n";
    }
    return ok ? kOk : kVerifyFailed;
  }
  Json j;
  j["spec"] = P.spec_string();
  j["passed"] = ok;
  Json arr = Json::array();
  for (const SuiteResult &r : results)
    arr.push_back(suite_json(r));
  j["suites"] = arr;
  print(out, j);
  return ok ? kOk : kVerifyFailed;
}

inline int report_error(const Globals &g, std::ostream &err, const std::string &kind, const std::string &msg, int code) {
  if (g.human) {
    err << "error: " << msg << "\n";
  } else {
    Json j;
    j["error"] = kind;
    j["message"] = msg;
    err << j.dump() << "\n";
  }
  return code;
}

} // namespace detail

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  detail::Globals g;
  CLI::App app{"Automorphisms of nonsplit metacyclic 2-groups", "metacyclic"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--human", g.human, "Plain-text tables instead of JSON");
  app.add_option("--max-bits", g.max_bits, "Cap on the candidate-space exponent for exhaustive work")
      ->check(CLI::Range(1U, 62U));
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration")->check(CLI::Range(1U, 1024U));

  std::string spec, method = "formula", format = "jsonl", quad, elem_text, suite = "all", op;
  std::vector<std::string> args;
  std::function<int()> action;

  auto *classify = app.add_subcommand("classify", "Validate parameters and print derived constants");
  classify->add_option("spec", spec, "I:a,b,c,d or II:a,b,e")->required();
  classify->callback([&] { action = [&] { return detail::classify(g, spec, out); }; });

  auto *structure = app.add_subcommand("structure", "Structure of X, Y and X cap Y with generators");
  structure->add_option("spec", spec)->required();
  structure->callback([&] { action = [&] { return detail::structure(g, spec, out); }; });

  auto *aut = app.add_subcommand("aut", "Automorphism group operations");
  aut->require_subcommand(1);
  auto *count = aut->add_subcommand("count", "Order of Aut(H)");
  count->add_option("spec", spec)->required();
  count->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle"}));
  count->callback([&] { action = [&] { return detail::aut_count(g, spec, method, out); }; });
  auto *list = aut->add_subcommand("list", "Every automorphism, sorted by images");
  list->add_option("spec", spec)->required();
  list->add_option("--format", format)->check(CLI::IsMember({"jsonl"}));
  list->callback([&] { action = [&] { return detail::aut_list(g, spec, out); }; });
  auto *apply_cmd = aut->add_subcommand("apply", "Apply sigma_{x1,x2;y,y2} to an element");
  apply_cmd->add_option("spec", spec)->required();
  apply_cmd->add_option("--quad", quad, "x1,x2,y,y2")->required();
  apply_cmd->add_option("--elem", elem_text, "a^u*b^v")->required();
  apply_cmd->callback([&] { action = [&] { return detail::aut_apply(g, spec, quad, elem_text, out); }; });

  auto *elem = app.add_subcommand("elem", "Element arithmetic: mul g h | pow g k | inv g | order g");
  elem->add_option("op", op)->required()->check(CLI::IsMember({"mul", "pow", "inv", "order"}));
  elem->add_option("spec", spec)->required();
  elem->add_option("args", args);
  elem->callback([&] { action = [&] { return detail::elem(g, op, spec, args, out); }; });

  auto *verify = app.add_subcommand("verify", "Run property suites against the oracle");
  verify->add_option("spec", spec)->required();
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"lemma22", "compose", "relators", "rprime", "cocycle", "all"}));
  verify->callback([&] { action = [&] { return detail::verify(g, spec, suite, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kInvalid;
  }

  try {
    return action();
  } catch (const CapExceeded &e) {
    return detail::report_error(g, err, "cap_exceeded", e.what(), kCap);
  } catch (const ConstraintViolation &e) {
    return detail::report_error(g, err, "constraint_violation", e.what(), kInvalid);
  } catch (const FamilyIIIError &e) {
    return detail::report_error(g, err, "family_iii", e.what(), kInvalid);
  } catch (const NotInXiOmega &e) {
    return detail::report_error(g, err, "not_in_xi_omega", e.what(), kInvalid);
  } catch (const ParseError &e) {
    return detail::report_error(g, err, "parse_error", e.what(), kInvalid);
  } catch (const Error &e) {
    return detail::report_error(g, err, "invalid", e.what(), kInvalid);
  }
}

} // namespace metacyclic::cli
