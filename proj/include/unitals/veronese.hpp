#pragma once

// The PG(5,n) picture of conics: a conic with coefficients
// (a11,a22,a33,a12,a13,a23) is the point with those coordinates, rank-1
// conics form the Veronese surface V, and a conic C of rank >= 2 spans the
// cone Gamma(C) of lines joining P(C) to V.

#include <vector>

#include "unitals/conic.hpp"
#include "unitals/exec.hpp"
#include "unitals/geom.hpp"

namespace unitals {

/// Normalized (a^2, b^2, c^2, ab, ac, bc).
Vec6 veronese_point(const Field& f, Elem a, Elem b, Elem c);

/// Nonzero with every 2x2 minor of the rebuilt symmetric matrix zero.
bool is_on_veronese(const Field& f, const Vec6& q) noexcept;

Vec6 conic_vpoint(const Field& f, const Conic& c);
Conic vpoint_conic(const Vec6& q) noexcept;

/// Reference membership test: Q is the apex, or one of the n+1 points of the
/// line P(C)Q lies on V.
bool cone_contains(const Field& f, const Conic& c, const Vec6& q);

/// Membership in Gamma(C) by root-finding. Q + l*P(C) has rank 1 only where a
/// fixed nonvanishing 2x2 minor of P(C) extends to a zero of a quadratic in l,
/// so at most two candidates need the full rank test.
class ConeTest {
 public:
  ConeTest(const Field& f, const Conic& apex);

  /// q must be normalized.
  bool contains(const Vec6& q) const noexcept;
  const Vec6& apex() const noexcept { return apex_; }

 private:
  const Field* f_;
  Vec6 apex_;
  int minor_ = 0;
  Elem lead_ = 0;
  Elem inv2a_ = 0;
};

std::vector<Vec6> line_meets_veronese(const Field& f, const Line5& line);
std::vector<Vec6> line_meets_veronese(const Field& f, const Vec6& p, const Vec6& q);

/// Every point of Gamma(C), in canonical order.
std::vector<Vec6> cone_points(const Field& f, const Conic& c);

enum class ResidualMethod {
  Reference,  // serial full sweep of PG(5,n) with the line-scan test
  Sweep,      // full sweep of PG(5,n) with ConeTest, OpenMP-parallel
  Cone,       // walk the generators of Gamma(C), test against Gamma(D)
};

/// Gamma(C) ∩ Gamma(D) minus the line P(C)P(D) and minus V, canonical order.
std::vector<Vec6> cone_residual_intersection(const Field& f, const Conic& c, const Conic& d,
                                             ResidualMethod method = ResidualMethod::Sweep,
                                             Exec exec = Exec::Parallel);

}  // namespace unitals
