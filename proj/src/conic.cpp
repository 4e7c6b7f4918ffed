#include "unitals/conic.hpp"

#include <algorithm>

#include "unitals/linalg.hpp"

namespace unitals {

namespace {

void require_odd(const Field& f, const char* what) {
  if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, what);
}

// Roots of a y^2 + b y + c in odd characteristic. Returns false when every
// element is a root.
bool quadratic_roots(const Field& f, Elem a, Elem b, Elem c, std::vector<Elem>& roots) {
  roots.clear();
  if (a != 0) {
    const Elem disc = f.sub(f.sqr(b), f.mul(f.from_int(4), f.mul(a, c)));
    const auto r = f.sqrt(disc);
    if (!r) return true;
    const Elem inv2a = f.inv(f.mul(f.two(), a));
    roots.push_back(f.mul(f.sub(*r, b), inv2a));
    if (*r != 0) roots.push_back(f.mul(f.sub(f.neg(*r), b), inv2a));
    return true;
  }
  if (b != 0) {
    roots.push_back(f.neg(f.div(c, b)));
    return true;
  }
  return c != 0;
}

}  // namespace

Vec6 monomials(const Field& f, const Vec3& p) noexcept {
  const auto [x, y, z] = p;
  Vec6 m{f.sqr(x), f.sqr(y), f.sqr(z), f.mul(x, y), f.mul(x, z), f.mul(y, z)};
  if (f.odd()) {
    for (std::size_t i = 3; i < 6; ++i) m[i] = f.add(m[i], m[i]);
  }
  return m;
}

Elem conic_eval(const Field& f, const Conic& c, const Vec3& p) noexcept {
  const Vec6 m = monomials(f, p);
  Elem s = 0;
  for (std::size_t i = 0; i < 6; ++i) s = f.add(s, f.mul(c.c[i], m[i]));
  return s;
}

Conic normalized(const Field& f, const Conic& c) {
  Conic out = c;
  if (!normalize(f, out.c)) throw Error(ErrorCode::InvalidArgument, "all conic coefficients are zero");
  return out;
}

bool same_conic(const Field& f, const Conic& a, const Conic& b) { return normalized(f, a) == normalized(f, b); }

std::uint64_t conic_index(const Field& f, const Conic& c) { return index_of(f.order(), normalized(f, c).c); }

Mat3 conic_matrix(const Field& f, const Conic& c) {
  require_odd(f, "conic matrix needs odd characteristic");
  const auto& a = c.c;
  return {Vec3{a[0], a[3], a[4]}, Vec3{a[3], a[1], a[5]}, Vec3{a[4], a[5], a[2]}};
}

Elem conic_det(const Field& f, const Conic& c) { return det(f, conic_matrix(f, c)); }

int conic_rank(const Field& f, const Conic& c) {
  require_odd(f, "conic rank needs odd characteristic");
  if (c.c == Vec6{}) throw Error(ErrorCode::InvalidArgument, "all conic coefficients are zero");
  if (conic_det(f, c) != 0) return 3;
  const auto& [a11, a22, a33, a12, a13, a23] = c.c;
  const bool rank_one = f.mul(a11, a22) == f.sqr(a12) && f.mul(a11, a33) == f.sqr(a13) &&
                        f.mul(a22, a33) == f.sqr(a23) && f.mul(a11, a23) == f.mul(a12, a13) &&
                        f.mul(a22, a13) == f.mul(a12, a23) && f.mul(a33, a12) == f.mul(a13, a23);
  return rank_one ? 1 : 2;
}

bool is_irreducible(const Field& f, const Conic& c) {
  if (f.odd()) return conic_det(f, c) != 0;
  const auto& [a11, a22, a33, b12, b13, b23] = c.c;
  Elem d = f.mul(a11, f.sqr(b23));
  d = f.add(d, f.mul(a22, f.sqr(b13)));
  d = f.add(d, f.mul(a33, f.sqr(b12)));
  d = f.add(d, f.mul(b12, f.mul(b13, b23)));
  return d != 0;
}

std::vector<std::uint32_t> conic_point_indices(const Plane& plane, const Conic& c) {
  const Field& f = plane.field();
  std::vector<std::uint32_t> out;
  if (!f.odd()) {
    for (std::uint32_t i = 0; i < plane.size(); ++i) {
      if (conic_eval(f, c, plane.point(i)) == 0) out.push_back(i);
    }
    return out;
  }
  const unsigned n = f.order();
  const auto& [a11, a22, a33, a12, a13, a23] = c.c;
  const Elem two = f.two();
  std::vector<Elem> roots;
  // Points (x, y, 1).
  for (Elem x = 0; x < n; ++x) {
    const Elem b = f.mul(two, f.add(f.mul(a12, x), a23));
    const Elem k = f.add(f.add(f.mul(a11, f.sqr(x)), f.mul(two, f.mul(a13, x))), a33);
    if (!quadratic_roots(f, a22, b, k, roots)) {
      for (Elem y = 0; y < n; ++y) out.push_back(plane.index_any({x, y, 1}));
    } else {
      for (Elem y : roots) out.push_back(plane.index_any({x, y, 1}));
    }
  }
  // Points (x, 1, 0).
  if (!quadratic_roots(f, a11, f.mul(two, a12), a22, roots)) {
    for (Elem x = 0; x < n; ++x) out.push_back(plane.index_any({x, 1, 0}));
  } else {
    for (Elem x : roots) out.push_back(plane.index_any({x, 1, 0}));
  }
  if (a11 == 0) out.push_back(plane.index({1, 0, 0}));
  std::sort(out.begin(), out.end());
  return out;
}

PointSet conic_points(const Plane& plane, const Conic& c) {
  PointSet s = plane.empty_set();
  for (auto i : conic_point_indices(plane, c)) s.insert(i);
  return s;
}

PointClass classify_point(const Field& f, const Conic& c, const Vec3& p) {
  require_odd(f, "point classification needs odd characteristic");
  const Elem d = conic_det(f, c);
  if (d == 0) throw Error(ErrorCode::SingularConic, "point classes are defined for irreducible conics");
  const Elem v = conic_eval(f, c, p);
  if (v == 0) return PointClass::OnConic;
  return f.is_nonzero_square(f.neg(f.mul(d, v))) ? PointClass::External : PointClass::Internal;
}

Vec3 tangent_line_at(const Field& f, const Conic& c, const Vec3& p) {
  if (conic_eval(f, c, p) != 0) throw Error(ErrorCode::PointNotOnConic, "tangent requested off the conic");
  if (f.odd()) {
    const Mat3 a = conic_matrix(f, c);
    if (det(f, a) != 0) return normalized(f, apply(f, a, p));
    throw Error(ErrorCode::SingularConic, "tangent of a singular conic");
  }
  if (!is_irreducible(f, c)) throw Error(ErrorCode::NotIrreducible, "tangent of a degenerate conic");
  const auto& [a11, a22, a33, b12, b13, b23] = c.c;
  const auto [x, y, z] = p;
  Vec3 g{f.add(f.mul(b12, y), f.mul(b13, z)), f.add(f.mul(b12, x), f.mul(b23, z)),
         f.add(f.mul(b13, x), f.mul(b23, y))};
  return normalized(f, g);
}

Vec3 nucleus(const Field& f, const Conic& c) {
  if (f.odd()) throw Error(ErrorCode::OddCharacteristic, "nucleus exists only in even characteristic");
  if (!is_irreducible(f, c)) throw Error(ErrorCode::NotIrreducible, "nucleus of a degenerate conic");
  return normalized(f, Vec3{c.c[5], c.c[4], c.c[3]});
}

Conic canonical_pencil(const Field& f, PencilKind kind, Elem k, std::optional<Elem> alpha) {
  require_odd(f, "canonical pencils need odd characteristic");
  const Elem one = 1;
  switch (kind) {
    case PencilKind::Hyperbolic:
      return Conic{{0, 0, f.neg(k), one, 0, 0}};
    case PencilKind::Elliptic: {
      const Elem a = alpha.value_or(f.first_nonsquare());
      if (!f.is_nonsquare(a)) throw Error(ErrorCode::AlphaIsSquare, "alpha must be a non-square");
      return Conic{{one, f.neg(a), f.neg(k), 0, 0, 0}};
    }
    case PencilKind::Parabolic:
      return Conic{{one, 0, k, 0, 0, f.neg(one)}};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pencil kind");
}

bool admissible_k(const Field& f, PencilKind kind, Elem k) {
  require_odd(f, "pencil parameters need odd characteristic");
  const Elem km1 = f.sub(k, 1);
  switch (kind) {
    case PencilKind::Hyperbolic:
      return f.is_nonzero_square(k) && f.is_nonsquare(km1) && f.is_nonsquare(f.mul(k, km1));
    case PencilKind::Elliptic:
      return f.is_nonzero_square(k) && f.is_nonzero_square(km1);
    case PencilKind::Parabolic:
      return f.is_nonsquare(k);
  }
  return false;
}

std::vector<Elem> admissible_ks(const Field& f, PencilKind kind) {
  std::vector<Elem> out;
  for (Elem k = 0; k < f.order(); ++k) {
    if (admissible_k(f, kind, k)) out.push_back(k);
  }
  return out;
}

Conic substitute(const Field& f, const Conic& c, const Mat3& b) {
  // Upper-triangular form U with x^T U x = f(x).
  const auto& a = c.c;
  Elem x12 = a[3], x13 = a[4], x23 = a[5];
  if (f.odd()) {
    x12 = f.add(x12, x12);
    x13 = f.add(x13, x13);
    x23 = f.add(x23, x23);
  }
  const Mat3 u{Vec3{a[0], x12, x13}, Vec3{0, a[1], x23}, Vec3{0, 0, a[2]}};
  const Mat3 w = mul(f, transpose(b), mul(f, u, b));
  Conic out{{w[0][0], w[1][1], w[2][2], f.add(w[0][1], w[1][0]), f.add(w[0][2], w[2][0]),
             f.add(w[1][2], w[2][1])}};
  if (f.odd()) {
    const Elem half = f.inv(f.two());
    for (std::size_t i = 3; i < 6; ++i) out.c[i] = f.mul(out.c[i], half);
  }
  return out;
}

Conic transform(const Field& f, const Conic& c, const Mat3& m) { return substitute(f, c, inverse(f, m)); }

std::vector<Conic> conics_through(const Field& f, std::span<const Vec3> points) {
  std::vector<Row> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    const Vec6 m = monomials(f, p);
    rows.emplace_back(m.begin(), m.end());
  }
  std::vector<Conic> out;
  for (const auto& v : null_space(f, std::move(rows), 6)) {
    Conic c;
    std::copy(v.begin(), v.end(), c.c.begin());
    out.push_back(c);
  }
  return out;
}

}  // namespace unitals
