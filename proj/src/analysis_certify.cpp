#include <algorithm>

#include "unitals/analysis.hpp"
#include "unitals/kernels.hpp"
#include "unitals/unital.hpp"

namespace unitals {

namespace {

std::vector<std::uint32_t> nucleus_tangent_counts(const Plane& plane, const std::vector<Conic>& conics,
                                                  const std::vector<std::uint32_t>& line_counts) {
  std::vector<std::uint32_t> out;
  for (const auto& c : conics) {
    const std::uint32_t nu = plane.index(nucleus(plane.field(), c));
    std::uint32_t t = 0;
    for (auto l : plane.lines_through(nu)) t += line_counts[l] == 1;
    out.push_back(t);
  }
  return out;
}

bool covers(const Plane& plane, const std::vector<Conic>& conics, const PointSet& s) {
  PointSet u = plane.empty_set();
  for (const auto& c : conics) {
    for (auto p : conic_point_indices(plane, c)) u.insert(p);
  }
  return !conics.empty() && u == s;
}

// Moves base point p of conic c to (0,1,0) and c to x^2 = 2yz.
Mat3 hyperosculating_frame(const Plane& plane, const Conic& c, std::uint32_t p) {
  const Field& f = plane.field();
  const auto pts = conic_point_indices(plane, c);
  const std::uint32_t r = pts[0] == p ? pts[1] : pts[0];
  const Vec3& pp = plane.point(p);
  const Vec3& rr = plane.point(r);
  const Vec3 o = cross(f, tangent_line_at(f, c, pp), tangent_line_at(f, c, rr));
  Mat3 b;
  for (std::size_t i = 0; i < 3; ++i) b[i] = {o[i], pp[i], rr[i]};
  const Conic g = substitute(f, c, b);
  const Elem s = f.neg(f.div(g.c[0], g.c[5]));
  for (auto& row : b) row[1] = f.mul(row[1], s);
  return b;
}

}  // namespace

Certificate certify_union_of_conics(const Plane& plane, const PointSet& s, Exec exec) {
  const Field& f = plane.field();
  const UnitalReport rep = is_unital(plane, s, exec);
  if (!rep.is_unital) throw Error(ErrorCode::NotAUnital, "the point set is not a unital");

  Certificate cert;
  cert.q = rep.q;
  cert.q_odd = f.odd();
  cert.signature = "none";

  if (!cert.q_odd) {
    cert.conics = conics_contained(plane, s, ContainMethod::Exhaustive, exec);
    cert.covered = covers(plane, cert.conics, s);
    cert.nucleus_tangents = nucleus_tangent_counts(plane, cert.conics, kernels::line_counts(plane, s, exec));
    return cert;
  }

  cert.conics = conics_contained(plane, s, ContainMethod::Auto, exec);
  cert.covered = covers(plane, cert.conics, s);
  if (!cert.covered || cert.conics.size() < 2) return cert;

  cert.all_hyperosculating = true;
  cert.hypothesis_holds = true;
  for (std::size_t i = 0; i < cert.conics.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.conics.size(); ++j) {
      const auto r = classify_pair(plane, cert.conics[i], cert.conics[j]);
      cert.hypothesis_holds = cert.hypothesis_holds && r.hypothesis_holds && r.converse_holds;
      if (r.ptype != PencilType::Hyperosculating) {
        cert.all_hyperosculating = false;
        continue;
      }
      if (!cert.base_point) cert.base_point = r.common_points[0];
      if (*cert.base_point != r.common_points[0]) cert.all_hyperosculating = false;
    }
  }
  if (!cert.all_hyperosculating) return cert;

  const Mat3 b = hyperosculating_frame(plane, cert.conics[0], *cert.base_point);
  cert.frame = b;
  bool shaped = true;
  for (const auto& c : cert.conics) {
    const Conic h = substitute(f, c, b);
    if (h.c[0] == 0 || h.c[1] != 0 || h.c[3] != 0 || h.c[4] != 0 || h.c[5] != f.neg(h.c[0])) {
      shaped = false;
      continue;
    }
    cert.parameters.push_back(f.div(h.c[2], h.c[0]));
  }
  std::sort(cert.parameters.begin(), cert.parameters.end());
  const auto nz = std::find_if(cert.parameters.begin(), cert.parameters.end(), [](Elem e) { return e != 0; });
  if (nz != cert.parameters.end()) cert.t = *nz;
  cert.parameters_form_coset = shaped && is_nonsquare_coset(f, cert.q, cert.parameters, true);
  if (cert.parameters_form_coset && cert.hypothesis_holds) cert.signature = "BEHS";
  return cert;
}

NucleusReport nucleus_obstruction(const Plane& plane, Exec exec) {
  NucleusReport r;
  r.q = unital_q(plane);
  if (plane.field().odd()) throw Error(ErrorCode::OddCharacteristic, "the nucleus argument is for q even");
  const PointSet s = hermitian_unital(plane);
  const auto conics = conics_contained(plane, s, ContainMethod::Exhaustive, exec);
  r.conics_inside = conics.size();
  r.nucleus_tangents = nucleus_tangent_counts(plane, conics, kernels::line_counts(plane, s, exec));
  r.obstruction_holds = conics.empty();
  return r;
}

}  // namespace unitals
