#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "unitals/conic.hpp"
#include "unitals/exec.hpp"
#include "unitals/geom.hpp"

namespace unitals {

/// q with q^2 equal to the plane order; NotASquareOrder otherwise.
unsigned unital_q(const Plane& plane);

/// Points of x^(q+1) + y^(q+1) + z^(q+1) = 0.
PointSet hermitian_unital(const Plane& plane);

struct BehsUnital {
  PointSet points;
  std::vector<Conic> conics;  // C_a : 2yz - x^2 + a z^2 = 0, a in t*GF(q), by increasing a
  Elem t = 0;
};

/// Union of the q conics C_a, a in t*GF(q). Needs q odd and t a non-square.
BehsUnital behs_unital(const Plane& plane, Elem t);
BehsUnital behs_unital(const Plane& plane);

Conic behs_conic(const Field& f, Elem a);

struct TangentStructure {
  // (tangents, secants) seen through every point on, resp. off, the set.
  std::uint32_t tangents_on = 0;
  std::uint32_t secants_on = 0;
  std::uint32_t tangents_off = 0;
  std::uint32_t secants_off = 0;
  bool uniform = false;
  bool matches_unital_counts = false;
};

struct UnitalReport {
  unsigned q = 0;
  std::size_t size = 0;
  bool is_unital = false;
  std::map<std::uint32_t, std::uint32_t> profile;  // |L ∩ S| -> number of lines
  std::vector<std::uint32_t> failures;             // lines meeting S in neither 1 nor q+1 points
  std::optional<TangentStructure> tangents;        // filled when is_unital
};

UnitalReport is_unital(const Plane& plane, const PointSet& s, Exec exec = Exec::Parallel);

/// Per-point tangent/secant counts. Throws NotAUnital unless s passes is_unital.
TangentStructure tangent_structure(const Plane& plane, const PointSet& s, Exec exec = Exec::Parallel);

}  // namespace unitals
