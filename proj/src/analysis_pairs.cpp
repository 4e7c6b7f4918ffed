#include <algorithm>
#include <iterator>
#include <random>

#include "unitals/analysis.hpp"
#include "unitals/kernels.hpp"

namespace unitals {

namespace {

void require_odd(const Field& f) {
  if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, "this search needs odd characteristic");
}

constexpr unsigned kExhaustiveMaxOrder = 9;
constexpr std::uint64_t kConverseExamples = 4;

// The line l with A proportional to l l^T, for a rank-1 conic.
Vec3 repeated_line(const Field& f, const Conic& c) {
  const Mat3 a = conic_matrix(f, c);
  for (const auto& row : a) {
    if (row != Vec3{}) return normalized(f, row);
  }
  throw Error(ErrorCode::InvalidArgument, "zero conic");
}

Mat3 random_collineation(const Field& f, std::mt19937_64& rng) {
  const unsigned n = f.order();
  for (;;) {
    Mat3 m;
    for (auto& row : m) {
      for (auto& e : row) e = static_cast<Elem>(rng() % n);
    }
    if (det(f, m) != 0) return m;
  }
}

}  // namespace

std::vector<Conic> conics_contained(const Plane& plane, const PointSet& s, ContainMethod method, Exec exec) {
  const Field& f = plane.field();
  if (method == ContainMethod::Auto) {
    require_odd(f);
    method = f.order() <= kExhaustiveMaxOrder ? ContainMethod::Exhaustive : ContainMethod::Generator;
  }
  if (method == ContainMethod::Exhaustive) return kernels::contained_conics_exhaustive(plane, s, exec);
  require_odd(f);
  return kernels::contained_conics_generator(plane, s, exec);
}

std::string to_string(PencilType t) {
  switch (t) {
    case PencilType::BitangentReal: return "BitangentReal";
    case PencilType::BitangentConjugate: return "BitangentConjugate";
    case PencilType::Hyperosculating: return "Hyperosculating";
    case PencilType::Other: return "Other";
  }
  return "Other";
}

PencilReport classify_pair(const Plane& plane, const Conic& c, const Conic& d) {
  const Field& f = plane.field();
  require_odd(f);
  if (!is_irreducible(f, c) || !is_irreducible(f, d)) {
    throw Error(ErrorCode::SingularConic, "pencil types are defined for irreducible conics");
  }
  if (same_conic(f, c, d)) throw Error(ErrorCode::CoincidentConics, "the two conics coincide");

  PencilReport r{c, d, {}, PencilType::Other, std::nullopt, std::nullopt, true, true};
  const auto pc = conic_point_indices(plane, c);
  const auto pd = conic_point_indices(plane, d);
  std::set_intersection(pc.begin(), pc.end(), pd.begin(), pd.end(), std::back_inserter(r.common_points));

  auto consider = [&](const Conic& m) {
    if (!r.rank1_member && conic_rank(f, m) == 1) r.rank1_member = normalized(f, m);
  };
  consider(d);
  for (Elem mu = 0; mu < f.order() && !r.rank1_member; ++mu) {
    Conic m;
    for (std::size_t i = 0; i < 6; ++i) m.c[i] = f.add(c.c[i], f.mul(mu, d.c[i]));
    consider(m);
  }

  if (r.rank1_member) {
    const Vec3 l = repeated_line(f, *r.rank1_member);
    r.rank1_line = l;
    const std::uint32_t li = plane.index(l);
    std::vector<std::uint32_t> on_line;
    for (auto p : pc) {
      if (plane.incident(p, li)) on_line.push_back(p);
    }
    const auto& cp = r.common_points;
    if (cp.size() == 2 && on_line == cp) {
      r.ptype = PencilType::BitangentReal;
    } else if (cp.empty() && on_line.empty()) {
      r.ptype = PencilType::BitangentConjugate;
    } else if (cp.size() == 1 && on_line == cp && tangent_line_at(f, c, plane.point(cp[0])) == l) {
      r.ptype = PencilType::Hyperosculating;
    }
  }

  for (auto p : pd) {
    if (!std::binary_search(pc.begin(), pc.end(), p) && classify_point(f, c, plane.point(p)) == PointClass::External) {
      r.hypothesis_holds = false;
      break;
    }
  }
  for (auto p : pc) {
    if (!std::binary_search(pd.begin(), pd.end(), p) && classify_point(f, d, plane.point(p)) != PointClass::Internal) {
      r.converse_holds = false;
      break;
    }
  }
  return r;
}

std::pair<Conic, Conic> canonical_pair(const Field& f, PencilKind kind, Elem k, std::optional<Elem> alpha) {
  const Elem base = kind == PencilKind::Parabolic ? 0 : 1;
  return {canonical_pencil(f, kind, base, alpha), canonical_pencil(f, kind, k, alpha)};
}

AfklReport verify_afkl(const Plane& plane, std::uint64_t samples, std::uint64_t seed, Exec exec) {
  const Field& f = plane.field();
  const unsigned n = f.order();
  if (n < 17) throw Error(ErrorCode::FieldTooSmall, "the pencil theorem is stated for q >= 17");
  require_odd(f);

  AfklReport rep;
  rep.n = n;
  rep.sampled = samples > 0;
  rep.seed = seed;

  const Conic c0 = canonical_pencil(f, PencilKind::Hyperbolic, 1);
  std::vector<std::uint32_t> external;
  std::optional<std::uint32_t> p0;
  for (std::uint32_t p = 0; p < plane.size(); ++p) {
    const auto cls = classify_point(f, c0, plane.point(p));
    if (cls == PointClass::External) external.push_back(p);
    if (cls == PointClass::Internal && !p0) p0 = p;
  }
  const auto candidates = kernels::conics_through_avoiding(plane, *p0, external, exec);
  rep.candidates = candidates.size();

  const std::uint64_t total = rep.sampled ? samples : candidates.size();
  std::vector<std::pair<std::size_t, Mat3>> draws;
  if (rep.sampled && !candidates.empty()) {
    std::mt19937_64 rng(seed);
    draws.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
      const auto pick = static_cast<std::size_t>(rng() % candidates.size());
      draws.emplace_back(pick, random_collineation(f, rng));
    }
  }
  const std::int64_t count = candidates.empty() ? 0 : static_cast<std::int64_t>(total);
  std::vector<PencilReport> reports(count);
  auto one = [&](std::int64_t i) {
    if (rep.sampled) {
      const auto& [pick, m] = draws[i];
      reports[i] = classify_pair(plane, transform(f, c0, m), transform(f, candidates[pick], m));
    } else {
      reports[i] = classify_pair(plane, c0, candidates[i]);
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) one(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) one(i);
  }

  rep.pairs_checked = reports.size();
  for (auto& r : reports) {
    if (!r.hypothesis_holds) continue;
    ++rep.hypothesis_pairs;
    ++rep.by_type[r.ptype];
    if (!r.converse_holds && rep.converse_failures++ < kConverseExamples) rep.converse_examples.push_back(r);
    if (r.ptype == PencilType::Other) rep.violations.push_back(std::move(r));
  }
  return rep;
}

PointClassReport check_point_classes(const Plane& plane, const Conic& c) {
  const Field& f = plane.field();
  const unsigned n = f.order();
  const PointSet on = conic_points(plane, c);
  std::vector<char> tangent(plane.size(), 0);
  for (std::uint32_t l = 0; l < plane.size(); ++l) {
    unsigned k = 0;
    for (auto p : plane.points_on_line(l)) k += on.contains(p);
    tangent[l] = k == 1;
  }
  PointClassReport r;
  for (std::uint32_t p = 0; p < plane.size(); ++p) {
    const PointClass cls = classify_point(f, c, plane.point(p));
    if (on.contains(p)) {
      ++r.on;
      if (cls != PointClass::OnConic) ++r.mismatches;
      continue;
    }
    unsigned t = 0;
    for (auto l : plane.lines_through(p)) t += tangent[l];
    if (t == 2) {
      ++r.external;
      if (cls != PointClass::External) ++r.mismatches;
    } else if (t == 0) {
      ++r.internal;
      if (cls != PointClass::Internal) ++r.mismatches;
    } else {
      ++r.mismatches;
    }
  }
  r.counts_ok = r.on == n + 1 && r.external == std::uint64_t{n} * (n + 1) / 2 &&
                r.internal == std::uint64_t{n} * (n - 1) / 2;
  return r;
}

}  // namespace unitals
