#pragma once

// JSON views of the library's results. Key order is fixed, so equal inputs
// give byte-identical output. Field elements appear as indices; the field
// itself (with its modulus) is described once per report by field_json.

#include <json.hpp>

#include "unitals/analysis.hpp"
#include "unitals/unital.hpp"

namespace unitals {

using Json = nlohmann::ordered_json;

Json field_json(const Field& f);
Json vec_json(const Vec3& v);
Json vec_json(const Vec6& v);
Json conic_json(const Field& f, const Conic& c);
Json points_json(const Plane& plane, const std::vector<std::uint32_t>& pts);

Json to_json(const TangentStructure& t);
Json to_json(const UnitalReport& r);
Json to_json(const Plane& plane, const PencilReport& r);
Json to_json(const Plane& plane, const AfklReport& r);
Json to_json(const PointClassReport& r);
Json to_json(const DiffSetReport& r);
Json to_json(const Lemma2Report& r);
Json to_json(const Plane& plane, const Certificate& c);
Json to_json(const NucleusReport& r);
Json to_json(const Field& f, const ResidualCheck& r);

std::string to_string(PencilKind k);

}  // namespace unitals
