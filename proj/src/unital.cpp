#include "unitals/unital.hpp"

#include <algorithm>

#include "unitals/kernels.hpp"

namespace unitals {

unsigned unital_q(const Plane& plane) {
  const unsigned n = plane.order();
  unsigned q = 1;
  while ((q + 1) * (q + 1) <= n) ++q;
  if (q * q != n || q < 2) {
    throw Error(ErrorCode::NotASquareOrder, "plane order " + std::to_string(n) + " is not a square");
  }
  return q;
}

PointSet hermitian_unital(const Plane& plane) {
  const unsigned q = unital_q(plane);
  const Field& f = plane.field();
  PointSet s = plane.empty_set();
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    const Vec3& p = plane.point(i);
    const Elem v = f.add(f.add(f.frobenius_norm(p[0], q), f.frobenius_norm(p[1], q)), f.frobenius_norm(p[2], q));
    if (v == 0) s.insert(i);
  }
  return s;
}

Conic behs_conic(const Field& f, Elem a) { return Conic{{f.neg(1), 0, a, 0, 0, 1}}; }

BehsUnital behs_unital(const Plane& plane, Elem t) {
  const unsigned q = unital_q(plane);
  const Field& f = plane.field();
  if (!f.odd()) throw Error(ErrorCode::EvenQ, "BEHS unitals need q odd");
  if (!f.is_nonsquare(t)) throw Error(ErrorCode::TIsSquare, "t must be a non-square");
  std::vector<Elem> params;
  for (Elem u : f.subfield_elements(q)) params.push_back(f.mul(t, u));
  std::sort(params.begin(), params.end());
  BehsUnital out{plane.empty_set(), {}, t};
  for (Elem a : params) {
    const Conic c = behs_conic(f, a);
    for (auto p : conic_point_indices(plane, c)) out.points.insert(p);
    out.conics.push_back(c);
  }
  return out;
}

BehsUnital behs_unital(const Plane& plane) {
  unital_q(plane);
  if (!plane.field().odd()) throw Error(ErrorCode::EvenQ, "BEHS unitals need q odd");
  return behs_unital(plane, plane.field().first_nonsquare());
}

namespace {

TangentStructure count_tangents(const Plane& plane, const PointSet& s, unsigned q,
                                const std::vector<std::uint32_t>& counts) {
  TangentStructure ts;
  bool first_on = true;
  bool first_off = true;
  bool uniform = true;
  for (std::uint32_t p = 0; p < plane.size(); ++p) {
    std::uint32_t tan = 0;
    std::uint32_t sec = 0;
    for (auto l : plane.lines_through(p)) {
      if (counts[l] == 1) ++tan;
      if (counts[l] > 1) ++sec;
    }
    auto& t = s.contains(p) ? ts.tangents_on : ts.tangents_off;
    auto& c = s.contains(p) ? ts.secants_on : ts.secants_off;
    bool& first = s.contains(p) ? first_on : first_off;
    if (first) {
      t = tan;
      c = sec;
      first = false;
    } else if (t != tan || c != sec) {
      uniform = false;
    }
  }
  ts.uniform = uniform;
  ts.matches_unital_counts = uniform && ts.tangents_on == 1 && ts.secants_on == q * q &&
                             ts.tangents_off == q + 1 && ts.secants_off == q * q - q;
  return ts;
}

}  // namespace

UnitalReport is_unital(const Plane& plane, const PointSet& s, Exec exec) {
  UnitalReport r;
  r.q = unital_q(plane);
  r.size = s.size();
  const auto counts = kernels::line_counts(plane, s, exec);
  for (std::uint32_t l = 0; l < counts.size(); ++l) {
    ++r.profile[counts[l]];
    if (counts[l] != 1 && counts[l] != r.q + 1) r.failures.push_back(l);
  }
  r.is_unital = r.failures.empty() && r.size == static_cast<std::size_t>(r.q) * r.q * r.q + 1;
  if (r.is_unital) r.tangents = count_tangents(plane, s, r.q, counts);
  return r;
}

TangentStructure tangent_structure(const Plane& plane, const PointSet& s, Exec exec) {
  const auto r = is_unital(plane, s, exec);
  if (!r.is_unital) throw Error(ErrorCode::NotAUnital, "the point set is not a unital");
  return *r.tangents;
}

}  // namespace unitals
