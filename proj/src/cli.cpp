#include "unitals/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "unitals/report.hpp"

namespace unitals::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Table = std::vector<std::vector<std::string>>;

struct Output {
  Json json;
  bool ok = true;
  std::optional<Table> table;
};

struct Options {
  std::optional<unsigned> p;
  std::optional<unsigned> h;
  std::optional<unsigned> q;
  std::vector<unsigned> modulus;
  std::string format = "json";
  int workers = 0;
  std::uint64_t seed = 0;

  std::string kind = "hermitian";
  std::optional<Elem> t;
  std::string input;
  std::string method;
  std::vector<Elem> c;
  std::vector<Elem> d;
  int case_no = 0;
  std::optional<Elem> k;
  std::optional<Elem> alpha;
  std::optional<std::uint64_t> samples;
  std::string claim;
};

Field make_field(const Options& o) {
  std::optional<std::vector<unsigned>> mod;
  if (!o.modulus.empty()) mod = o.modulus;
  if (o.q) {
    if (o.p || o.h) throw UsageError("give either --q or --p/--h, not both");
    const auto pp = prime_power(*o.q);
    if (!pp) throw UsageError("--q must be a prime power");
    return Field(pp->first, 2 * pp->second, mod);
  }
  if (!o.p || !o.h) throw UsageError("give --q, or both --p and --h");
  return Field(*o.p, *o.h, mod);
}

std::string join(const std::vector<Elem>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

Table witness_table(const std::vector<std::vector<Elem>>& witnesses) {
  Table t{{"size", "elements"}};
  for (const auto& w : witnesses) t.push_back({std::to_string(w.size()), join(w, ' ')});
  return t;
}

// ---- point sets -----------------------------------------------------------

struct NamedSet {
  std::string source;
  PointSet points;
};

NamedSet load_set(const Plane& plane, const Options& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open " + o.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("bad JSON in ") + o.input + ": " + e.what());
    }
    if (j.contains("field") && j["field"].contains("order") && j["field"]["order"] != plane.order()) {
      throw UsageError("input was built over a field of a different order");
    }
    if (!j.contains("points") || !j["points"].is_array()) throw UsageError("input needs a \"points\" array");
    PointSet s = plane.empty_set();
    for (const auto& p : j["points"]) {
      const auto idx = p.is_object() ? p.at("index").get<std::uint64_t>() : p.get<std::uint64_t>();
      if (idx >= plane.size()) throw UsageError("point index out of range");
      s.insert(static_cast<std::uint32_t>(idx));
    }
    return {o.input, s};
  }
  if (o.kind == "hermitian") return {"hermitian", hermitian_unital(plane)};
  if (o.kind == "behs") {
    return {"behs", o.t ? behs_unital(plane, *o.t).points : behs_unital(plane).points};
  }
  throw UsageError("--kind must be hermitian or behs");
}

Conic parse_conic(const Field& f, const std::vector<Elem>& v, const char* name) {
  if (v.size() != 6) throw UsageError(std::string("--") + name + " needs six coefficients");
  Conic c;
  for (std::size_t i = 0; i < 6; ++i) {
    if (v[i] >= f.order()) throw UsageError(std::string("--") + name + " has an element outside the field");
    c.c[i] = v[i];
  }
  return c;
}

PencilKind case_kind(int c) {
  switch (c) {
    case 1: return PencilKind::Hyperbolic;
    case 2: return PencilKind::Elliptic;
    case 3: return PencilKind::Parabolic;
    default: throw UsageError("--case must be 1, 2 or 3");
  }
}

PencilType expected_type(PencilKind kind) {
  switch (kind) {
    case PencilKind::Hyperbolic: return PencilType::BitangentReal;
    case PencilKind::Elliptic: return PencilType::BitangentConjugate;
    case PencilKind::Parabolic: return PencilType::Hyperosculating;
  }
  return PencilType::Other;
}

// ---- commands -------------------------------------------------------------

Output cmd_field(const Field& f) {
  Json elems = Json::array();
  Table t{{"index", "coefficients", "log", "character"}};
  for (Elem a = 0; a < f.order(); ++a) {
    const char* ch = "zero";
    if (f.quadratic_character(a) == QuadChar::NonzeroSquare) ch = "square";
    if (f.quadratic_character(a) == QuadChar::NonSquare) ch = "nonsquare";
    std::vector<Elem> coeffs;
    for (auto c : f.coefficients(a)) coeffs.push_back(c);
    Json e{{"index", a}, {"coefficients", coeffs}};
    e["log"] = a == 0 ? Json(nullptr) : Json(f.log(a));
    e["character"] = ch;
    elems.push_back(e);
    t.push_back({std::to_string(a), join(coeffs, ' '), a == 0 ? "" : std::to_string(f.log(a)), ch});
  }
  return {Json{{"field", field_json(f)}, {"primitive", f.primitive()}, {"elements", elems}}, true, t};
}

Output cmd_build(const Plane& plane, const Options& o) {
  const Field& f = plane.field();
  Json j{{"field", field_json(f)}, {"kind", o.kind}, {"q", unital_q(plane)}};
  PointSet s;
  Json conics = Json::array();
  if (o.kind == "hermitian") {
    s = hermitian_unital(plane);
    j["t"] = nullptr;
  } else if (o.kind == "behs") {
    const BehsUnital b = o.t ? behs_unital(plane, *o.t) : behs_unital(plane);
    s = b.points;
    j["t"] = b.t;
    for (const auto& c : b.conics) conics.push_back(conic_json(f, c));
  } else {
    throw UsageError("--kind must be hermitian or behs");
  }
  const auto idx = s.indices();
  j["size"] = idx.size();
  j["points"] = idx;
  j["conics"] = conics;
  Table t{{"index", "x", "y", "z"}};
  for (auto p : idx) {
    const Vec3& v = plane.point(p);
    t.push_back({std::to_string(p), std::to_string(v[0]), std::to_string(v[1]), std::to_string(v[2])});
  }
  return {j, true, t};
}

Output cmd_verify(const Plane& plane, const Options& o, Exec exec) {
  const auto set = load_set(plane, o);
  const auto r = is_unital(plane, set.points, exec);
  Table t{{"intersection_size", "lines"}};
  for (auto [k, v] : r.profile) t.push_back({std::to_string(k), std::to_string(v)});
  return {Json{{"field", field_json(plane.field())}, {"source", set.source}, {"report", to_json(r)}}, r.is_unital, t};
}

ContainMethod contain_method(const std::string& m) {
  if (m.empty() || m == "auto") return ContainMethod::Auto;
  if (m == "generator") return ContainMethod::Generator;
  if (m == "exhaustive") return ContainMethod::Exhaustive;
  throw UsageError("--method must be auto, generator or exhaustive");
}

Output cmd_enum(const Plane& plane, const Options& o, Exec exec) {
  const auto set = load_set(plane, o);
  const auto conics = conics_contained(plane, set.points, contain_method(o.method), exec);
  Json list = Json::array();
  Table t{{"a11", "a22", "a33", "a12", "a13", "a23"}};
  for (const auto& c : conics) {
    list.push_back(conic_json(plane.field(), c));
    const auto n = normalized(plane.field(), c);
    t.push_back({});
    for (auto e : n.c) t.back().push_back(std::to_string(e));
  }
  return {Json{{"field", field_json(plane.field())},
               {"source", set.source},
               {"method", o.method.empty() ? "auto" : o.method},
               {"count", conics.size()},
               {"conics", list}},
          true, t};
}

Output cmd_classify(const Plane& plane, const Options& o) {
  const Field& f = plane.field();
  const auto r = classify_pair(plane, parse_conic(f, o.c, "c"), parse_conic(f, o.d, "d"));
  const bool ok = !(r.hypothesis_holds && r.ptype == PencilType::Other);
  return {Json{{"field", field_json(f)}, {"report", to_json(plane, r)}}, ok, std::nullopt};
}

ResidualMethod residual_method(const Field& f, const std::string& m) {
  if (m.empty()) return f.order() <= 25 ? ResidualMethod::Sweep : ResidualMethod::Cone;
  if (m == "sweep") return ResidualMethod::Sweep;
  if (m == "reference") return ResidualMethod::Reference;
  if (m == "cone") return ResidualMethod::Cone;
  throw UsageError("--method must be sweep, reference or cone");
}

Output cmd_residual(const Field& f, const Options& o, Exec exec) {
  if (!o.k) throw UsageError("--k is required");
  const auto r = check_residual(f, case_kind(o.case_no), *o.k, o.alpha, residual_method(f, o.method), exec);
  Json j{{"field", field_json(f)}};
  j["alpha"] = o.alpha ? Json(*o.alpha) : (o.case_no == 2 ? Json(f.first_nonsquare()) : Json(nullptr));
  j.update(to_json(f, r));
  return {j, r.matches, std::nullopt};
}

// ---- claims ---------------------------------------------------------------

std::vector<Conic> random_irreducible(const Field& f, std::uint64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Conic> out;
  while (out.size() < count) {
    Conic c;
    for (auto& e : c.c) e = static_cast<Elem>(rng() % f.order());
    if (c.c != Vec6{} && is_irreducible(f, c)) out.push_back(c);
  }
  return out;
}

Output claim_theorem3(const Plane& plane, const Options& o) {
  const Field& f = plane.field();
  std::vector<Conic> conics{canonical_pencil(f, PencilKind::Hyperbolic, 1), canonical_pencil(f, PencilKind::Elliptic, 1),
                            canonical_pencil(f, PencilKind::Parabolic, 0)};
  const auto extra = random_irreducible(f, o.samples.value_or(100), o.seed);
  conics.insert(conics.end(), extra.begin(), extra.end());
  Json canonical = Json::array();
  std::uint64_t mismatches = 0;
  std::uint64_t bad_counts = 0;
  for (std::size_t i = 0; i < conics.size(); ++i) {
    const auto r = check_point_classes(plane, conics[i]);
    mismatches += r.mismatches;
    bad_counts += !r.counts_ok;
    if (i < 3) canonical.push_back(Json{{"conic", conic_json(f, conics[i])}, {"classes", to_json(r)}});
  }
  const bool ok = mismatches == 0 && bad_counts == 0;
  return {Json{{"field", field_json(f)},
               {"claim", "theorem3"},
               {"seed", o.seed},
               {"conics_checked", conics.size()},
               {"canonical", canonical},
               {"mismatches", mismatches},
               {"conics_with_wrong_counts", bad_counts},
               {"ok", ok}},
          ok, std::nullopt};
}

Output claim_afkl(const Plane& plane, const Options& o, Exec exec) {
  const auto r = verify_afkl(plane, o.samples.value_or(0), o.seed, exec);
  const bool ok = r.violations.empty();
  return {Json{{"field", field_json(plane.field())}, {"claim", "afkl"}, {"report", to_json(plane, r)}, {"ok", ok}}, ok,
          std::nullopt};
}

unsigned subfield_q(const Field& f) {
  unsigned q = 1;
  while ((q + 1) * (q + 1) <= f.order()) ++q;
  if (q * q != f.order()) throw Error(ErrorCode::NotASquareOrder, "field order is not a square");
  return q;
}

Output claim_lemma1(const Field& f) {
  const auto r = lemma1_search(f);
  const unsigned q = subfield_q(f);
  const std::size_t bound = (q + 1) / 2;
  const bool ok = r.max_size == bound;
  return {Json{{"field", field_json(f)},
               {"claim", "lemma1"},
               {"q", q},
               {"max_size", r.max_size},
               {"bound", bound},
               {"ok", ok},
               {"witnesses", r.witnesses}},
          ok, witness_table(r.witnesses)};
}

Output claim_lemma2(const Field& f) {
  const auto r = lemma2_search(f);
  const bool ok = r.coset_with_zero_holds || r.coset_without_zero_holds;
  Json j{{"field", field_json(f)}, {"claim", "lemma2"}};
  j.update(to_json(r));
  j["ok"] = ok;
  auto rows = r.zero_allowed.witnesses;
  rows.insert(rows.end(), r.strict.witnesses.begin(), r.strict.witnesses.end());
  return {j, ok, witness_table(rows)};
}

Output claim_nucleus(const Plane& plane, Exec exec) {
  const auto r = nucleus_obstruction(plane, exec);
  return {Json{{"field", field_json(plane.field())}, {"claim", "nucleus"}, {"report", to_json(r)}, {"ok", r.obstruction_holds}},
          r.obstruction_holds, std::nullopt};
}

Output claim_main(const Plane& plane, const Options& o, Exec exec) {
  const Field& f = plane.field();
  Json j{{"field", field_json(f)}, {"claim", "main"}};
  const auto herm = certify_union_of_conics(plane, hermitian_unital(plane), exec);
  j["hermitian"] = to_json(plane, herm);
  bool ok = !herm.covered;
  if (f.odd()) {
    const BehsUnital b = o.t ? behs_unital(plane, *o.t) : behs_unital(plane);
    const auto cert = certify_union_of_conics(plane, b.points, exec);
    j["behs"] = to_json(plane, cert);
    j["behs_t"] = b.t;
    ok = ok && cert.signature == "BEHS" && cert.conics.size() == b.conics.size();
  } else {
    const auto nuc = nucleus_obstruction(plane, exec);
    j["nucleus"] = to_json(nuc);
    ok = ok && nuc.obstruction_holds;
  }
  j["ok"] = ok;
  return {j, ok, std::nullopt};
}

Output cmd_check(const Plane& plane, const Options& o, Exec exec) {
  const Field& f = plane.field();
  if (o.claim == "theorem3") return claim_theorem3(plane, o);
  if (o.claim == "afkl") return claim_afkl(plane, o, exec);
  if (o.claim == "lemma1") return claim_lemma1(f);
  if (o.claim == "lemma2") return claim_lemma2(f);
  if (o.claim == "main") return claim_main(plane, o, exec);
  if (o.claim == "nucleus") return claim_nucleus(plane, exec);
  throw UsageError("--claim must be one of theorem3, afkl, lemma1, lemma2, main, nucleus");
}

// ---- report-all -----------------------------------------------------------

Json summary_row(const std::string& name, const std::function<std::pair<bool, Json>()>& fn) {
  try {
    auto [ok, detail] = fn();
    return Json{{"claim", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}};
  } catch (const Error& e) {
    return Json{{"claim", name}, {"status", "skipped"}, {"detail", to_string(e.code())}};
  }
}

Output cmd_report_all(const Plane& plane, const Options& o, Exec exec) {
  const Field& f = plane.field();
  Json rows = Json::array();

  rows.push_back(summary_row("unital-hermitian", [&] {
    const auto r = is_unital(plane, hermitian_unital(plane), exec);
    const bool ok = r.is_unital && r.tangents && r.tangents->matches_unital_counts;
    return std::pair{ok, Json{{"size", r.size}, {"profile", to_json(r)["profile"]}}};
  }));
  rows.push_back(summary_row("unital-behs", [&] {
    const auto b = o.t ? behs_unital(plane, *o.t) : behs_unital(plane);
    const auto r = is_unital(plane, b.points, exec);
    const bool ok = r.is_unital && r.tangents && r.tangents->matches_unital_counts;
    return std::pair{ok, Json{{"size", r.size}, {"profile", to_json(r)["profile"]}}};
  }));
  rows.push_back(summary_row("theorem3", [&] {
    if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, "odd characteristic only");
    const auto out = claim_theorem3(plane, o);
    return std::pair{out.ok, Json{{"conics_checked", out.json["conics_checked"]}, {"mismatches", out.json["mismatches"]}}};
  }));
  rows.push_back(summary_row("lemma1", [&] {
    const auto out = claim_lemma1(f);
    return std::pair{out.ok, Json{{"max_size", out.json["max_size"]}, {"bound", out.json["bound"]}}};
  }));
  rows.push_back(summary_row("lemma2", [&] {
    const auto r = lemma2_search(f);
    return std::pair{r.coset_with_zero_holds || r.coset_without_zero_holds,
                     Json{{"convention", r.convention}, {"witnesses", r.zero_allowed_size_q}}};
  }));
  rows.push_back(summary_row("pencil-trichotomy", [&] {
    if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, "odd characteristic only");
    std::uint64_t pairs = 0;
    std::uint64_t bad = 0;
    for (auto kind : {PencilKind::Hyperbolic, PencilKind::Elliptic, PencilKind::Parabolic}) {
      for (Elem k : admissible_ks(f, kind)) {
        const auto [c, d] = canonical_pair(f, kind, k);
        const auto r = classify_pair(plane, c, d);
        ++pairs;
        bad += r.ptype != expected_type(kind) || !r.rank1_member || !r.hypothesis_holds || !r.converse_holds;
      }
    }
    return std::pair{bad == 0, Json{{"pairs", pairs}, {"mismatches", bad}}};
  }));
  rows.push_back(summary_row("afkl", [&] {
    const auto r = verify_afkl(plane, o.samples.value_or(0), o.seed, exec);
    return std::pair{r.violations.empty(), Json{{"pairs", r.hypothesis_pairs},
                                                {"violations", r.violations.size()},
                                                {"converse_failures", r.converse_failures}}};
  }));
  rows.push_back(summary_row("cone-residual", [&] {
    if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, "odd characteristic only");
    std::uint64_t checks = 0;
    std::uint64_t bad = 0;
    for (auto kind : {PencilKind::Hyperbolic, PencilKind::Elliptic, PencilKind::Parabolic}) {
      for (Elem k : admissible_ks(f, kind)) {
        ++checks;
        bad += !check_residual(f, kind, k, std::nullopt, residual_method(f, ""), exec).matches;
      }
    }
    return std::pair{bad == 0, Json{{"checks", checks}, {"mismatches", bad}}};
  }));
  rows.push_back(summary_row("case1-line", [&] {
    if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, "odd characteristic only");
    std::uint64_t lines = 0;
    std::uint64_t bad = 0;
    for (Elem k : admissible_ks(f, PencilKind::Hyperbolic)) {
      for (Elem beta = 2; beta < f.order(); ++beta) {
        ++lines;
        bad += !case1_line_misses_veronese(f, k, beta);
      }
    }
    return std::pair{bad == 0, Json{{"lines", lines}, {"meeting_v", bad}}};
  }));
  rows.push_back(summary_row("main", [&] {
    const auto out = claim_main(plane, o, exec);
    Json d{{"hermitian_covered", out.json["hermitian"]["covered"]}};
    if (out.json.contains("behs")) d["behs_signature"] = out.json["behs"]["signature"];
    return std::pair{out.ok, d};
  }));
  rows.push_back(summary_row("nucleus", [&] {
    const auto r = nucleus_obstruction(plane, exec);
    return std::pair{r.obstruction_holds, Json{{"conics_inside", r.conics_inside}}};
  }));

  bool all_ok = true;
  Table t{{"claim", "status"}};
  for (const auto& r : rows) {
    all_ok = all_ok && r["status"] != "fail";
    t.push_back({r["claim"].get<std::string>(), r["status"].get<std::string>()});
  }
  return {Json{{"field", field_json(f)}, {"seed", o.seed}, {"claims", rows}, {"all_ok", all_ok}}, all_ok, t};
}

// ---- rendering ------------------------------------------------------------

void render(const Output& out, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << out.json.dump(2) << '\n';
  } else if (format == "csv") {
    for (const auto& row : *out.table) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << '\n';
    }
  } else {
    for (const auto& [key, v] : out.json.items()) os << key << ": " << v.dump() << '\n';
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->set_help_flag("--help", "print this help and exit");
  sub->add_option("--p", o.p, "characteristic of the plane's field");
  sub->add_option("--h", o.h, "degree of the plane's field over GF(p)");
  sub->add_option("--q", o.q, "plane of order q^2");
  sub->add_option("--modulus", o.modulus, "modulus coefficients, constant term first, leading 1 included")
      ->delimiter(',');
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--workers", o.workers, "OpenMP threads (0 keeps the default)");
  sub->add_option("--seed", o.seed, "seed for sampling commands");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unitals and conics in finite projective planes"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto* field = app.add_subcommand("field", "print the field tables");
  auto* build = app.add_subcommand("build-unital", "construct a Hermitian or BEHS unital");
  auto* verify = app.add_subcommand("verify-unital", "line profile and tangent structure of a point set");
  auto* enumc = app.add_subcommand("enum-conics", "irreducible conics contained in a point set");
  auto* classify = app.add_subcommand("classify-pair", "pencil type of two conics");
  auto* residual = app.add_subcommand("cone-residual", "residual intersection of two cones in PG(5,n)");
  auto* check = app.add_subcommand("check", "check one claim");
  auto* all = app.add_subcommand("report-all", "run every check and summarize");

  for (auto* sub : {field, build, verify, enumc, classify, residual, check, all}) add_common(sub, o);
  for (auto* sub : {build, verify, enumc, check, all}) {
    sub->add_option("--kind", o.kind, "hermitian or behs")->check(CLI::IsMember({"hermitian", "behs"}));
    sub->add_option("--t", o.t, "non-square t for BEHS unitals");
  }
  for (auto* sub : {verify, enumc}) sub->add_option("--input", o.input, "JSON file with a \"points\" array");
  enumc->add_option("--method", o.method, "auto, generator or exhaustive");
  classify->add_option("--c", o.c, "six coefficients a11,a22,a33,a12,a13,a23")->delimiter(',')->required();
  classify->add_option("--d", o.d, "six coefficients a11,a22,a33,a12,a13,a23")->delimiter(',')->required();
  residual->add_option("--case", o.case_no, "1 hyperbolic, 2 elliptic, 3 parabolic")->required();
  residual->add_option("--k", o.k, "pencil parameter");
  residual->add_option("--alpha", o.alpha, "non-square for case 2");
  residual->add_option("--method", o.method, "sweep, reference or cone");
  check->add_option("--claim", o.claim, "theorem3, afkl, lemma1, lemma2, main or nucleus")->required();
  for (auto* sub : {check, all}) sub->add_option("--samples", o.samples, "sample count for sampled checks");

  std::vector<const char*> argv{"unitals"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    set_workers(o.workers);
    const Exec exec = Exec::Parallel;
    const Plane plane(make_field(o));
    const Field& f = plane.field();
    Output result;
    if (field->parsed()) result = cmd_field(f);
    if (build->parsed()) result = cmd_build(plane, o);
    if (verify->parsed()) result = cmd_verify(plane, o, exec);
    if (enumc->parsed()) result = cmd_enum(plane, o, exec);
    if (classify->parsed()) result = cmd_classify(plane, o);
    if (residual->parsed()) result = cmd_residual(f, o, exec);
    if (check->parsed()) result = cmd_check(plane, o, exec);
    if (all->parsed()) result = cmd_report_all(plane, o, exec);
    if (o.format == "csv" && !result.table) throw UsageError("this command has no CSV form");
    render(result, o.format, out);
    return result.ok ? kOk : kViolated;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace unitals::cli
