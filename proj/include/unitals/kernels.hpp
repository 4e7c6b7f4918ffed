#pragma once

// Data-parallel inner loops. Each takes an Exec flag: Serial runs the plain
// loop, Parallel splits the index range into chunks across OpenMP threads and
// concatenates per-chunk results in chunk order, so output is identical.

#include <cstdint>
#include <vector>

#include "unitals/conic.hpp"
#include "unitals/exec.hpp"
#include "unitals/geom.hpp"

namespace unitals::kernels {

/// |L ∩ S| for every line L, indexed by line.
std::vector<std::uint32_t> line_counts(const Plane& plane, const PointSet& s, Exec exec);

/// Residual Gamma(C) ∩ Gamma(D) minus line P(C)P(D) minus V over the PG(5,n)
/// index range [begin, end), using ConeTest.
std::vector<Vec6> residual_sweep(const Field& f, const Conic& c, const Conic& d, std::uint64_t begin,
                                 std::uint64_t end, Exec exec);

/// Same range with cone_contains (n+1 point line scan), serial only.
std::vector<Vec6> residual_sweep_reference(const Field& f, const Conic& c, const Conic& d, std::uint64_t begin,
                                           std::uint64_t end);

/// Irreducible conics contained in S, found by scanning every point of PG(5,n)
/// and rejecting at the first zero outside S. Canonical order.
std::vector<Conic> contained_conics_exhaustive(const Plane& plane, const PointSet& s, Exec exec);

/// Irreducible conics contained in S, generated from S itself (odd
/// characteristic). For each triple p1<p2<p3 of S in general position, the
/// conics through them form a net, i.e. a plane of parameters; every later
/// point r of S cuts out a line of that plane. A conic whose three smallest
/// points are p1,p2,p3 and which lies in S is a parameter hit by n-2 such
/// lines. Canonical order.
std::vector<Conic> contained_conics_generator(const Plane& plane, const PointSet& s, Exec exec);

/// Irreducible conics through point p0 with no point among `forbidden`.
std::vector<Conic> conics_through_avoiding(const Plane& plane, std::uint32_t p0,
                                           const std::vector<std::uint32_t>& forbidden, Exec exec);

}  // namespace unitals::kernels
