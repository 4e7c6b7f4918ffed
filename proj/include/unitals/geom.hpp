#pragma once

// Points and lines of PG(2,n) and PG(5,n).
//
// Points are normalized so the first nonzero coordinate is 1. The canonical
// index is the lexicographic rank of the normalized vector, which puts
// (0,..,0,1) first and (1,n-1,..,n-1) last.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "unitals/error.hpp"
#include "unitals/gf.hpp"

namespace unitals {

template <std::size_t N>
using Coords = std::array<Elem, N>;
using Vec3 = Coords<3>;
using Vec6 = Coords<6>;
using Mat3 = std::array<Vec3, 3>;

/// (n^(d+1)-1)/(n-1).
std::uint64_t projective_count(unsigned n, unsigned d) noexcept;

/// Scales v so its first nonzero entry is 1. Returns false for the zero vector.
template <std::size_t N>
bool normalize(const Field& f, Coords<N>& v) {
  for (std::size_t i = 0; i < N; ++i) {
    if (v[i] != 0) {
      if (v[i] != 1) {
        const Elem s = f.inv(v[i]);
        v[i] = 1;
        for (std::size_t j = i + 1; j < N; ++j) v[j] = f.mul(v[j], s);
      }
      return true;
    }
  }
  return false;
}

template <std::size_t N>
Coords<N> normalized(const Field& f, Coords<N> v) {
  if (!normalize(f, v)) throw Error(ErrorCode::InvalidArgument, "zero vector has no projective point");
  return v;
}

/// Canonical index of a normalized vector.
template <std::size_t N>
std::uint64_t index_of(unsigned n, const Coords<N>& v) noexcept {
  std::size_t lead = 0;
  while (lead < N && v[lead] == 0) ++lead;
  // Points with a later leading position come first: sum_{j < N-1-lead} n^j of them.
  std::uint64_t offset = 0;
  std::uint64_t pw = 1;
  for (std::size_t j = 0; j + 1 + lead < N; ++j) {
    offset += pw;
    pw *= n;
  }
  std::uint64_t tail = 0;
  for (std::size_t j = lead + 1; j < N; ++j) tail = tail * n + v[j];
  return offset + tail;
}

/// Inverse of index_of.
template <std::size_t N>
Coords<N> point_at(unsigned n, std::uint64_t index) noexcept {
  Coords<N> v{};
  std::uint64_t block = 1;
  for (std::size_t lead = N; lead-- > 0;) {
    if (index < block) {
      v[lead] = 1;
      for (std::size_t j = N; j-- > lead + 1;) {
        v[j] = static_cast<Elem>(index % n);
        index /= n;
      }
      return v;
    }
    index -= block;
    block *= n;
  }
  return v;
}

/// Runtime-dimension point for the generic enumeration interface.
struct ProjPoint {
  std::vector<Elem> coords;
  std::uint64_t index = 0;

  int dim() const noexcept { return static_cast<int>(coords.size()) - 1; }
  bool operator==(const ProjPoint&) const = default;
};

/// Every point of PG(d,n) in canonical order, d in {2,5}.
std::vector<ProjPoint> all_points(const Field& f, int d);

/// Bit-indexed subset of the points of PG(2,n).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::uint32_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

  std::uint32_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return card_; }
  bool empty() const noexcept { return card_ == 0; }

  bool contains(std::uint32_t i) const noexcept { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  void insert(std::uint32_t i) {
    std::uint64_t& w = bits_[i >> 6];
    const std::uint64_t b = std::uint64_t{1} << (i & 63);
    if (!(w & b)) {
      w |= b;
      ++card_;
    }
  }

  /// Sorted point indices.
  std::vector<std::uint32_t> indices() const;

  bool operator==(const PointSet& o) const { return universe_ == o.universe_ && bits_ == o.bits_; }

 private:
  std::uint32_t universe_ = 0;
  std::size_t card_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A line of PG(5,n), stored as its two smallest point indices.
struct Line5 {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  bool operator==(const Line5&) const = default;
};

Line5 line_through(const Field& f, const Vec6& p, const Vec6& q);
/// The n+1 points of the line, in canonical index order.
std::vector<Vec6> points_on_line(const Field& f, const Line5& line);
/// Same, from any two distinct spanning points.
std::vector<Vec6> points_on_line(const Field& f, const Vec6& p, const Vec6& q);

/// PG(2,n) with its full point-line incidence. Lines are indexed by the
/// canonical index of their normalized dual coordinates [u,v,w].
class Plane {
 public:
  explicit Plane(Field field);

  const Field& field() const noexcept { return field_; }
  unsigned order() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return count_; }

  const Vec3& point(std::uint32_t i) const noexcept { return points_[i]; }
  /// Dual coordinates of line l.
  const Vec3& line(std::uint32_t l) const noexcept { return points_[l]; }
  std::uint32_t index(const Vec3& normalized_point) const noexcept {
    return static_cast<std::uint32_t>(index_of(n_, normalized_point));
  }
  /// Index of the point spanned by an arbitrary nonzero vector.
  std::uint32_t index_any(Vec3 v) const;

  std::span<const std::uint32_t> points_on_line(std::uint32_t l) const noexcept {
    return {line_points_.data() + static_cast<std::size_t>(l) * (n_ + 1), n_ + 1};
  }
  std::span<const std::uint32_t> lines_through(std::uint32_t p) const noexcept {
    return {point_lines_.data() + static_cast<std::size_t>(p) * (n_ + 1), n_ + 1};
  }

  bool incident(std::uint32_t p, std::uint32_t l) const noexcept;
  std::uint32_t line_through(std::uint32_t p, std::uint32_t q) const;
  std::uint32_t meet(std::uint32_t l, std::uint32_t m) const;

  PointSet empty_set() const { return PointSet(count_); }

 private:
  Field field_;
  unsigned n_;
  std::uint32_t count_;
  std::vector<Vec3> points_;
  std::vector<std::uint32_t> line_points_;
  std::vector<std::uint32_t> point_lines_;
};

Vec3 cross(const Field& f, const Vec3& a, const Vec3& b) noexcept;
Elem dot(const Field& f, const Vec3& a, const Vec3& b) noexcept;

/// Dual coordinates of the line through two distinct points.
Vec3 line_through(const Field& f, const Vec3& p, const Vec3& q);
/// The n+1 points on a line of PG(2,n), in canonical index order.
std::vector<Vec3> points_on_line(const Field& f, const Vec3& dual_line);

Mat3 identity3() noexcept;
Elem det(const Field& f, const Mat3& m) noexcept;
Mat3 mul(const Field& f, const Mat3& a, const Mat3& b) noexcept;
Mat3 transpose(const Mat3& m) noexcept;
Mat3 inverse(const Field& f, const Mat3& m);
Vec3 apply(const Field& f, const Mat3& m, const Vec3& v) noexcept;

/// Image of a point under the collineation x -> M x.
Vec3 apply_collineation(const Field& f, const Mat3& m, const Vec3& p);

}  // namespace unitals
