#include "unitals/veronese.hpp"

#include <algorithm>

#include "unitals/kernels.hpp"

namespace unitals {

namespace {

// The six distinct 2x2 minors u_i u_j - u_k u_l of the symmetric matrix
// rebuilt from (a11,a22,a33,a12,a13,a23).
constexpr int kMinors[6][4] = {{0, 1, 3, 3}, {0, 2, 4, 4}, {1, 2, 5, 5},
                               {0, 5, 3, 4}, {1, 4, 3, 5}, {2, 3, 4, 5}};

Elem minor(const Field& f, const Vec6& u, int m) noexcept {
  const auto* ix = kMinors[m];
  return f.sub(f.mul(u[ix[0]], u[ix[1]]), f.mul(u[ix[2]], u[ix[3]]));
}

bool all_minors_vanish(const Field& f, const Vec6& u) noexcept {
  for (int m = 0; m < 6; ++m) {
    if (minor(f, u, m) != 0) return false;
  }
  return true;
}

void require_odd(const Field& f) {
  if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, "the Veronese picture needs odd characteristic");
}

}  // namespace

Vec6 veronese_point(const Field& f, Elem a, Elem b, Elem c) {
  if (a == 0 && b == 0 && c == 0) throw Error(ErrorCode::ZeroTriple, "(0,0,0) has no image");
  Vec6 v{f.sqr(a), f.sqr(b), f.sqr(c), f.mul(a, b), f.mul(a, c), f.mul(b, c)};
  normalize(f, v);
  return v;
}

bool is_on_veronese(const Field& f, const Vec6& q) noexcept {
  if (q == Vec6{}) return false;
  return all_minors_vanish(f, q);
}

Vec6 conic_vpoint(const Field& f, const Conic& c) { return normalized(f, c.c); }

Conic vpoint_conic(const Vec6& q) noexcept { return Conic{q}; }

bool cone_contains(const Field& f, const Conic& c, const Vec6& q) {
  require_odd(f);
  if (conic_rank(f, c) == 1) throw Error(ErrorCode::RankOne, "a rank-1 conic lies on V and spans no cone");
  const Vec6 apex = normalized(f, c.c);
  const Vec6 qn = normalized(f, q);
  if (qn == apex) return true;
  for (const auto& pt : points_on_line(f, apex, qn)) {
    if (is_on_veronese(f, pt)) return true;
  }
  return false;
}

ConeTest::ConeTest(const Field& f, const Conic& apex) : f_(&f) {
  require_odd(f);
  apex_ = normalized(f, apex.c);
  for (int m = 0; m < 6; ++m) {
    const Elem v = minor(f, apex_, m);
    if (v != 0) {
      minor_ = m;
      lead_ = v;
      inv2a_ = f.inv(f.mul(f.two(), v));
      return;
    }
  }
  throw Error(ErrorCode::RankOne, "a rank-1 conic lies on V and spans no cone");
}

bool ConeTest::contains(const Vec6& q) const noexcept {
  const Field& f = *f_;
  if (q == apex_) return true;
  const auto* ix = kMinors[minor_];
  const Vec6& c = apex_;
  // m(l) = A l^2 + B l + C for u = q + l c.
  const Elem b = f.sub(f.add(f.mul(q[ix[0]], c[ix[1]]), f.mul(c[ix[0]], q[ix[1]])),
                       f.add(f.mul(q[ix[2]], c[ix[3]]), f.mul(c[ix[2]], q[ix[3]])));
  const Elem k = f.sub(f.mul(q[ix[0]], q[ix[1]]), f.mul(q[ix[2]], q[ix[3]]));
  const Elem disc = f.sub(f.sqr(b), f.mul(f.from_int(4), f.mul(lead_, k)));
  const auto r = f.sqrt(disc);
  if (!r) return false;
  auto check = [&](Elem lam) {
    Vec6 u;
    for (std::size_t i = 0; i < 6; ++i) u[i] = f.add(q[i], f.mul(lam, c[i]));
    return all_minors_vanish(f, u);
  };
  if (check(f.mul(f.sub(*r, b), inv2a_))) return true;
  return *r != 0 && check(f.mul(f.sub(f.neg(*r), b), inv2a_));
}

std::vector<Vec6> line_meets_veronese(const Field& f, const Vec6& p, const Vec6& q) {
  std::vector<Vec6> out;
  for (const auto& pt : points_on_line(f, p, q)) {
    if (is_on_veronese(f, pt)) out.push_back(pt);
  }
  return out;
}

std::vector<Vec6> line_meets_veronese(const Field& f, const Line5& line) {
  std::vector<Vec6> out;
  for (const auto& pt : points_on_line(f, line)) {
    if (is_on_veronese(f, pt)) out.push_back(pt);
  }
  return out;
}

std::vector<Vec6> cone_points(const Field& f, const Conic& c) {
  require_odd(f);
  if (conic_rank(f, c) == 1) throw Error(ErrorCode::RankOne, "a rank-1 conic lies on V and spans no cone");
  const unsigned n = f.order();
  const Vec6 apex = normalized(f, c.c);
  std::vector<std::uint64_t> idx;
  idx.reserve(static_cast<std::size_t>(projective_count(n, 2)) * n + 1);
  idx.push_back(index_of(n, apex));
  for (std::uint64_t i = 0; i < projective_count(n, 2); ++i) {
    const Vec3 p = point_at<3>(n, i);
    const Vec6 v = veronese_point(f, p[0], p[1], p[2]);
    for (Elem lam = 0; lam < n; ++lam) {
      Vec6 u;
      for (std::size_t j = 0; j < 6; ++j) u[j] = f.add(v[j], f.mul(lam, apex[j]));
      normalize(f, u);
      idx.push_back(index_of(n, u));
    }
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<Vec6> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(point_at<6>(n, i));
  return out;
}

std::vector<Vec6> cone_residual_intersection(const Field& f, const Conic& c, const Conic& d,
                                             ResidualMethod method, Exec exec) {
  require_odd(f);
  if (!is_irreducible(f, c) || !is_irreducible(f, d)) {
    throw Error(ErrorCode::SingularConic, "cone residuals are taken for irreducible conics");
  }
  if (same_conic(f, c, d)) throw Error(ErrorCode::CoincidentConics, "the two conics coincide");
  const std::uint64_t total = projective_count(f.order(), 5);
  switch (method) {
    case ResidualMethod::Reference:
      return kernels::residual_sweep_reference(f, c, d, 0, total);
    case ResidualMethod::Sweep:
      return kernels::residual_sweep(f, c, d, 0, total, exec);
    case ResidualMethod::Cone: {
      const ConeTest other(f, d);
      const auto line = points_on_line(f, c.c, d.c);
      std::vector<Vec6> out;
      for (const auto& q : cone_points(f, c)) {
        if (is_on_veronese(f, q) || std::find(line.begin(), line.end(), q) != line.end()) continue;
        if (other.contains(q)) out.push_back(q);
      }
      return out;
    }
  }
  return {};
}

}  // namespace unitals
