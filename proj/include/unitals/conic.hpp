#pragma once

// Conics of PG(2,n).
//
// Odd characteristic: coefficients (a11,a22,a33,a12,a13,a23) of
//   f = a11 x^2 + a22 y^2 + a33 z^2 + 2 a12 xy + 2 a13 xz + 2 a23 yz,
// whose symmetric matrix A has a_ii on the diagonal and a_ij off it.
// Even characteristic: raw polynomial coefficients (a11,a22,a33,b12,b13,b23)
// of a11 x^2 + a22 y^2 + a33 z^2 + b12 xy + b13 xz + b23 yz; the matrix
// machinery is unavailable there.
//
// A Conic keeps the representative it was built from, so det() and eval()
// follow that scaling. Point sets, rank and point classes are scale-free;
// equality and serialization go through normalized().

#include <array>
#include <optional>
#include <vector>

#include "unitals/geom.hpp"

namespace unitals {

struct Conic {
  Vec6 c{};

  bool operator==(const Conic&) const = default;
};

enum class PointClass { OnConic, External, Internal };
enum class PencilKind { Hyperbolic = 1, Elliptic = 2, Parabolic = 3 };

/// Monomials whose dot product with Conic::c evaluates the conic.
Vec6 monomials(const Field& f, const Vec3& p) noexcept;

Elem conic_eval(const Field& f, const Conic& c, const Vec3& p) noexcept;

Conic normalized(const Field& f, const Conic& c);
bool same_conic(const Field& f, const Conic& a, const Conic& b);
/// Canonical order on conics: index of the normalized 6-tuple in PG(5,n).
std::uint64_t conic_index(const Field& f, const Conic& c);

Mat3 conic_matrix(const Field& f, const Conic& c);
Elem conic_det(const Field& f, const Conic& c);
int conic_rank(const Field& f, const Conic& c);

/// Rank 3 in odd characteristic; non-degenerate quadratic form in even.
bool is_irreducible(const Field& f, const Conic& c);

/// Point indices with f = 0, sorted.
std::vector<std::uint32_t> conic_point_indices(const Plane& plane, const Conic& c);
PointSet conic_points(const Plane& plane, const Conic& c);

PointClass classify_point(const Field& f, const Conic& c, const Vec3& p);

/// Dual coordinates of the tangent at a point of the conic.
Vec3 tangent_line_at(const Field& f, const Conic& c, const Vec3& p);

/// Common point of all tangents of an irreducible conic, even characteristic.
Vec3 nucleus(const Field& f, const Conic& c);

/// Hyperbolic: 2xy = k z^2. Elliptic: x^2 - alpha y^2 = k z^2.
/// Parabolic: 2yz = x^2 + k z^2.
Conic canonical_pencil(const Field& f, PencilKind kind, Elem k, std::optional<Elem> alpha = std::nullopt);

/// Parameters k for which the canonical pair (member 1 / member k, member 0 / member k
/// for Parabolic) satisfies the internal-points hypothesis in both directions.
bool admissible_k(const Field& f, PencilKind kind, Elem k);
std::vector<Elem> admissible_ks(const Field& f, PencilKind kind);

/// f o B: the conic g with g(y) = f(B y).
Conic substitute(const Field& f, const Conic& c, const Mat3& b);
/// Image of the conic's point set under x -> M x.
Conic transform(const Field& f, const Conic& c, const Mat3& m);

/// Basis of the space of conics through the given points (null space of the
/// monomial matrix). One element means a unique conic.
std::vector<Conic> conics_through(const Field& f, std::span<const Vec3> points);

}  // namespace unitals
