#include "unitals/geom.hpp"

#include <algorithm>
#include <bit>

namespace unitals {

std::uint64_t projective_count(unsigned n, unsigned d) noexcept {
  std::uint64_t total = 0;
  std::uint64_t pw = 1;
  for (unsigned i = 0; i <= d; ++i) {
    total += pw;
    pw *= n;
  }
  return total;
}

namespace {

template <std::size_t N>
std::vector<ProjPoint> enumerate(unsigned n) {
  const std::uint64_t count = projective_count(n, N - 1);
  std::vector<ProjPoint> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto c = point_at<N>(n, i);
    out.push_back({std::vector<Elem>(c.begin(), c.end()), i});
  }
  return out;
}

}  // namespace

std::vector<ProjPoint> all_points(const Field& f, int d) {
  switch (d) {
    case 2: return enumerate<3>(f.order());
    case 5: return enumerate<6>(f.order());
    default: throw Error(ErrorCode::UnsupportedDimension, "only PG(2,n) and PG(5,n) are supported");
  }
}

std::vector<std::uint32_t> PointSet::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(card_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      const int b = std::countr_zero(word);
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
      word &= word - 1;
    }
  }
  return out;
}

// ---- PG(5,n) lines ----

std::vector<Vec6> points_on_line(const Field& f, const Vec6& p, const Vec6& q) {
  const Vec6 a = normalized(f, p);
  const Vec6 b = normalized(f, q);
  if (a == b) throw Error(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  const unsigned n = f.order();
  std::vector<std::pair<std::uint64_t, Vec6>> pts;
  pts.reserve(n + 1);
  pts.emplace_back(index_of(n, b), b);
  for (Elem lam = 0; lam < n; ++lam) {
    Vec6 v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = f.add(a[i], f.mul(lam, b[i]));
    normalize(f, v);
    pts.emplace_back(index_of(n, v), v);
  }
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Vec6> out;
  out.reserve(pts.size());
  for (const auto& [idx, v] : pts) out.push_back(v);
  return out;
}

Line5 line_through(const Field& f, const Vec6& p, const Vec6& q) {
  const auto pts = points_on_line(f, p, q);
  return {index_of(f.order(), pts[0]), index_of(f.order(), pts[1])};
}

std::vector<Vec6> points_on_line(const Field& f, const Line5& line) {
  return points_on_line(f, point_at<6>(f.order(), line.first), point_at<6>(f.order(), line.second));
}

// ---- PG(2,n) ----

Vec3 cross(const Field& f, const Vec3& a, const Vec3& b) noexcept {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

Elem dot(const Field& f, const Vec3& a, const Vec3& b) noexcept {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

Vec3 line_through(const Field& f, const Vec3& p, const Vec3& q) {
  Vec3 l = cross(f, p, q);
  if (!normalize(f, l)) throw Error(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  return l;
}

std::vector<Vec3> points_on_line(const Field& f, const Vec3& dual_line) {
  const Vec3 l = normalized(f, dual_line);
  const unsigned n = f.order();
  std::vector<Vec3> out;
  out.reserve(n + 1);
  const auto [u, v, w] = l;
  if (w != 0) {
    // (x,y) runs over PG(1,n); z is forced.
    const Elem winv = f.neg(f.inv(w));
    auto push = [&](Elem x, Elem y) {
      out.push_back({x, y, f.mul(winv, f.add(f.mul(u, x), f.mul(v, y)))});
    };
    push(0, 1);
    for (Elem y = 0; y < n; ++y) push(1, y);
  } else {
    out.push_back({0, 0, 1});
    if (v != 0) {
      const Elem y = f.neg(f.div(u, v));
      for (Elem z = 0; z < n; ++z) out.push_back({1, y, z});
    } else {
      for (Elem z = 0; z < n; ++z) out.push_back({0, 1, z});
    }
  }
  std::sort(out.begin(), out.end(), [n](const Vec3& a, const Vec3& b) { return index_of(n, a) < index_of(n, b); });
  return out;
}

Plane::Plane(Field field) : field_(std::move(field)), n_(field_.order()) {
  count_ = static_cast<std::uint32_t>(projective_count(n_, 2));
  points_.resize(count_);
  for (std::uint32_t i = 0; i < count_; ++i) points_[i] = point_at<3>(n_, i);

  const std::size_t k = n_ + 1;
  line_points_.resize(static_cast<std::size_t>(count_) * k);
  point_lines_.resize(static_cast<std::size_t>(count_) * k);
  std::vector<std::uint32_t> fill(count_, 0);
  for (std::uint32_t l = 0; l < count_; ++l) {
    const auto pts = unitals::points_on_line(field_, points_[l]);
    for (std::size_t j = 0; j < k; ++j) {
      const auto p = index(pts[j]);
      line_points_[l * k + j] = p;
      point_lines_[p * k + fill[p]++] = l;
    }
  }
}

std::uint32_t Plane::index_any(Vec3 v) const {
  if (!normalize(field_, v)) throw Error(ErrorCode::InvalidArgument, "zero vector");
  return index(v);
}

bool Plane::incident(std::uint32_t p, std::uint32_t l) const noexcept {
  return dot(field_, points_[p], points_[l]) == 0;
}

std::uint32_t Plane::line_through(std::uint32_t p, std::uint32_t q) const {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  return index(unitals::line_through(field_, points_[p], points_[q]));
}

std::uint32_t Plane::meet(std::uint32_t l, std::uint32_t m) const {
  if (l == m) throw Error(ErrorCode::CoincidentPoints, "two distinct lines are required");
  return index(unitals::line_through(field_, points_[l], points_[m]));
}

// ---- 3x3 matrices ----

Mat3 identity3() noexcept { return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}; }

Elem det(const Field& f, const Mat3& m) noexcept {
  const Elem c0 = f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1]));
  const Elem c1 = f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0]));
  const Elem c2 = f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0]));
  return f.add(f.sub(f.mul(m[0][0], c0), f.mul(m[0][1], c1)), f.mul(m[0][2], c2));
}

Mat3 mul(const Field& f, const Mat3& a, const Mat3& b) noexcept {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Elem s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i][k], b[k][j]));
      out[i][j] = s;
    }
  }
  return out;
}

Mat3 transpose(const Mat3& m) noexcept {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  return out;
}

Mat3 inverse(const Field& f, const Mat3& m) {
  const Elem d = det(f, m);
  if (d == 0) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  const Elem dinv = f.inv(d);
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of m[j][i]
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Elem cof = f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
      out[i][j] = f.mul(cof, dinv);
    }
  }
  return out;
}

Vec3 apply(const Field& f, const Mat3& m, const Vec3& v) noexcept {
  return {dot(f, m[0], v), dot(f, m[1], v), dot(f, m[2], v)};
}

Vec3 apply_collineation(const Field& f, const Mat3& m, const Vec3& p) {
  if (det(f, m) == 0) throw Error(ErrorCode::SingularMatrix, "collineation matrix is singular");
  return normalized(f, apply(f, m, p));
}

}  // namespace unitals
