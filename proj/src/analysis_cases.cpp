#include <algorithm>

#include "unitals/analysis.hpp"

namespace unitals {

namespace {

std::vector<Vec6> canonical_order(const Field& f, std::vector<Vec6> pts) {
  for (auto& p : pts) normalize(f, p);
  const unsigned n = f.order();
  std::sort(pts.begin(), pts.end(), [n](const Vec6& a, const Vec6& b) { return index_of(n, a) < index_of(n, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Vec6 case1_vector(const Field& f, Elem k, Elem b) {
  const Elem one_k = f.sub(1, k);
  return {one_k, f.mul(one_k, f.sqr(b)), f.mul(f.mul(f.two(), k), b), f.neg(f.mul(f.add(k, 1), b)), 0, 0};
}

}  // namespace

std::vector<Vec6> case1_closed_form(const Field& f, Elem k) {
  std::vector<Vec6> pts;
  for (Elem b = 1; b < f.order(); ++b) pts.push_back(case1_vector(f, k, b));
  return canonical_order(f, std::move(pts));
}

std::vector<Vec6> case2_closed_form(const Field& f, Elem k, std::optional<Elem> alpha) {
  const Elem al = alpha ? *alpha : f.first_nonsquare();
  std::vector<Vec6> pts;
  for (Elem b = 1; b < f.order(); ++b) {
    const Elem b2 = f.sqr(b);
    pts.push_back({f.sub(al, f.mul(k, b2)), f.mul(al, f.sub(b2, f.mul(al, k))), f.mul(k, f.sub(b2, al)),
                   f.mul(f.mul(al, b), f.sub(1, k)), 0, 0});
  }
  pts.push_back({k, f.neg(al), f.neg(k), 0, 0, 0});
  pts.push_back({1, f.neg(f.mul(al, k)), f.neg(k), 0, 0, 0});
  return canonical_order(f, std::move(pts));
}

Conic case1_conic(const Field& f, Elem k, Elem b) { return vpoint_conic(case1_vector(f, k, b)); }

bool case1_line_misses_veronese(const Field& f, Elem k, Elem beta) {
  if (beta == 0 || beta == 1) throw Error(ErrorCode::InvalidArgument, "beta must be nonzero and different from 1");
  return line_meets_veronese(f, case1_vector(f, k, 1), case1_vector(f, k, beta)).empty();
}

std::optional<std::uint32_t> case1_external_point(const Plane& plane, Elem k, Elem b) {
  const Field& f = plane.field();
  const Conic c = canonical_pencil(f, PencilKind::Hyperbolic, 1);
  for (auto p : conic_point_indices(plane, case1_conic(f, k, b))) {
    if (classify_point(f, c, plane.point(p)) == PointClass::External) return p;
  }
  return std::nullopt;
}

ResidualCheck check_residual(const Field& f, PencilKind kind, Elem k, std::optional<Elem> alpha, ResidualMethod method,
                             Exec exec) {
  if (!admissible_k(f, kind, k)) throw Error(ErrorCode::InvalidArgument, "k is not admissible for this case");
  ResidualCheck r;
  r.kind = kind;
  r.k = k;
  const auto [c, d] = canonical_pair(f, kind, k, alpha);
  r.residual = cone_residual_intersection(f, c, d, method, exec);
  switch (kind) {
    case PencilKind::Hyperbolic: r.expected = case1_closed_form(f, k); break;
    case PencilKind::Elliptic: r.expected = case2_closed_form(f, k, alpha); break;
    case PencilKind::Parabolic: break;
  }
  r.matches = r.residual == r.expected;
  return r;
}

}  // namespace unitals
