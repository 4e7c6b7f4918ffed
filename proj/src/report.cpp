#include "unitals/report.hpp"

namespace unitals {

Json field_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"h", f.degree()}, {"order", f.order()}, {"modulus", f.modulus()}};
}

Json vec_json(const Vec3& v) { return Json(std::vector<Elem>(v.begin(), v.end())); }
Json vec_json(const Vec6& v) { return Json(std::vector<Elem>(v.begin(), v.end())); }

Json conic_json(const Field& f, const Conic& c) { return vec_json(normalized(f, c).c); }

Json points_json(const Plane& plane, const std::vector<std::uint32_t>& pts) {
  Json out = Json::array();
  for (auto p : pts) out.push_back(Json{{"index", p}, {"coords", vec_json(plane.point(p))}});
  return out;
}

Json to_json(const TangentStructure& t) {
  return Json{{"tangents_on", t.tangents_on},   {"secants_on", t.secants_on},
              {"tangents_off", t.tangents_off}, {"secants_off", t.secants_off},
              {"uniform", t.uniform},           {"matches_unital_counts", t.matches_unital_counts}};
}

Json to_json(const UnitalReport& r) {
  Json profile = Json::object();
  for (auto [k, v] : r.profile) profile[std::to_string(k)] = v;
  Json j{{"q", r.q}, {"size", r.size}, {"is_unital", r.is_unital}, {"profile", profile}, {"failures", r.failures}};
  j["tangent_structure"] = r.tangents ? to_json(*r.tangents) : Json(nullptr);
  return j;
}

std::string to_string(PencilKind k) {
  switch (k) {
    case PencilKind::Hyperbolic: return "hyperbolic";
    case PencilKind::Elliptic: return "elliptic";
    case PencilKind::Parabolic: return "parabolic";
  }
  return "";
}

Json to_json(const Plane& plane, const PencilReport& r) {
  const Field& f = plane.field();
  Json j{{"c", conic_json(f, r.c)}, {"d", conic_json(f, r.d)}, {"common_points", points_json(plane, r.common_points)},
         {"ptype", to_string(r.ptype)}};
  j["rank1_member"] = r.rank1_member ? conic_json(f, *r.rank1_member) : Json(nullptr);
  j["rank1_line"] = r.rank1_line ? vec_json(*r.rank1_line) : Json(nullptr);
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["converse_holds"] = r.converse_holds;
  return j;
}

Json to_json(const Plane& plane, const AfklReport& r) {
  Json types = Json::object();
  for (auto [t, v] : r.by_type) types[to_string(t)] = v;
  Json viol = Json::array();
  for (const auto& v : r.violations) viol.push_back(to_json(plane, v));
  Json conv = Json::array();
  for (const auto& v : r.converse_examples) conv.push_back(to_json(plane, v));
  return Json{{"n", r.n},
              {"mode", r.sampled ? "sampled" : "exhaustive"},
              {"seed", r.seed},
              {"candidates", r.candidates},
              {"pairs_checked", r.pairs_checked},
              {"hypothesis_pairs", r.hypothesis_pairs},
              {"by_type", types},
              {"violations", viol},
              {"converse_failures", r.converse_failures},
              {"converse_examples", conv}};
}

Json to_json(const PointClassReport& r) {
  return Json{{"on", r.on},
              {"external", r.external},
              {"internal", r.internal},
              {"mismatches", r.mismatches},
              {"counts_ok", r.counts_ok}};
}

Json to_json(const DiffSetReport& r) {
  Json j{{"class", to_string(r.cls)}, {"max_size", r.max_size}, {"witnesses", r.witnesses}};
  j["all_maximal_are_cosets"] = r.all_maximal_are_cosets ? Json(*r.all_maximal_are_cosets) : Json(nullptr);
  return j;
}

Json to_json(const Lemma2Report& r) {
  return Json{{"q", r.q},
              {"strict", to_json(r.strict)},
              {"zero_allowed", to_json(r.zero_allowed)},
              {"strict_size_q", r.strict_size_q},
              {"zero_allowed_size_q", r.zero_allowed_size_q},
              {"coset_with_zero_holds", r.coset_with_zero_holds},
              {"coset_without_zero_holds", r.coset_without_zero_holds},
              {"convention", r.convention}};
}

Json to_json(const Plane& plane, const Certificate& c) {
  const Field& f = plane.field();
  Json conics = Json::array();
  for (const auto& k : c.conics) conics.push_back(conic_json(f, k));
  Json j{{"q", c.q}, {"conics", conics}, {"covered", c.covered}, {"q_odd", c.q_odd}, {"signature", c.signature}};
  j["base_point"] = c.base_point ? points_json(plane, {*c.base_point})[0] : Json(nullptr);
  j["all_hyperosculating"] = c.all_hyperosculating;
  j["hypothesis_holds"] = c.hypothesis_holds;
  if (c.frame) {
    Json rows = Json::array();
    for (const auto& row : *c.frame) rows.push_back(vec_json(row));
    j["frame"] = rows;
  } else {
    j["frame"] = nullptr;
  }
  j["parameters"] = c.parameters;
  j["t"] = c.t ? Json(*c.t) : Json(nullptr);
  j["parameters_form_coset"] = c.parameters_form_coset;
  j["nucleus_tangents"] = c.nucleus_tangents;
  return j;
}

Json to_json(const NucleusReport& r) {
  return Json{{"q", r.q},
              {"conics_inside", r.conics_inside},
              {"nucleus_tangents", r.nucleus_tangents},
              {"obstruction_holds", r.obstruction_holds}};
}

Json to_json(const Field& f, const ResidualCheck& r) {
  auto list = [&](const std::vector<Vec6>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(Json{{"point", vec_json(p)}, {"conic_rank", conic_rank(f, Conic{p})}});
    return out;
  };
  return Json{{"case", static_cast<int>(r.kind)},
              {"kind", to_string(r.kind)},
              {"k", r.k},
              {"residual", list(r.residual)},
              {"expected", list(r.expected)},
              {"matches", r.matches}};
}

}  // namespace unitals
