#pragma once

// JSON rendering of parameters, automorphisms and structure reports.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "group.hpp"
#include "structure.hpp"

namespace metacyclic {

using Json = nlohmann::ordered_json;

inline Json to_json(const Element &g) { return Json::array({g.u, g.v}); }

inline Json to_json(const Automorphism &A) {
  Json j;
  j["x1"] = A.x1();
  j["x2"] = A.x2();
  j["y"] = A.y();
  j["y2"] = A.y2();
  j["img_alpha"] = to_json(A.images().img_alpha);
  j["img_beta"] = to_json(A.images().img_beta);
  return j;
}

inline Json to_json(const GroupParams &P) {
  Json j;
  j["spec"] = P.spec_string();
  j["family"] = to_string(P.family());
  j["a"] = P.a();
  j["b"] = P.b();
  j["c"] = P.c();
  j["d"] = P.d();
  if (P.e())
    j["e"] = *P.e();
  j["r"] = P.r().value();
  j["order_bits"] = P.order_bits();
  if (P.family() == Family::I) {
    j["f"] = P.f();
    j["z"] = P.z();
    j["w"] = P.w().value();
    j["w_modulus_bits"] = P.y_bits();
  }
  return j;
}

inline Json to_json(const SubgroupReport &S) {
  Json j;
  j["shape"] = to_string(S.shape);
  j["description"] = S.description();
  j["normal_bits"] = S.normal_bits;
  j["complement_bits"] = S.complement_bits;
  j["order_bits"] = S.order_bits();
  Json gens = Json::array();
  for (const auto &g : S.generators) {
    Json gj = to_json(g.aut);
    gens.push_back(Json{{"name", g.name}, {"automorphism", gj}});
  }
  j["generators"] = gens;
  return j;
}

inline Json to_json(const StructureReport &R) {
  Json j;
  j["branch"] = R.branch;
  j["X"] = to_json(R.X);
  j["Y"] = to_json(R.Y);
  j["X_cap_Y"] = to_json(R.X_cap_Y);
  j["aut_order_bits"] = R.aut_order_bits;
  return j;
}

/// One compact JSON object per line.
inline void write_jsonl(std::ostream &os, const std::vector<Automorphism> &auts) {
  for (const Automorphism &A : auts)
    os << to_json(A).dump() << '\n';
}

} // namespace metacyclic
