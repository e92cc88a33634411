#pragma once

#include <string>

#include <json.hpp>

#include "dyck/families.hpp"

namespace dyck::io {

using json = nlohmann::json;

json to_json(cplx z);
json to_json(const TriangleVariable& T);
json to_json(const ProjTripleC& s);
json to_json(const ShapeClass& c);
json to_json(const BlowupCoord& b);
json to_json(const SpherePoint& s);
json to_json(const TorusPoint& t);
json to_json(const SphereLoci& l);
json to_json(const PonceletConfig& cfg);
json to_json(const SeparationReport& rep);

/// {basepoint: [re, im], sides: [[re, im] x 3], directions: [6 reals],
///  arguments: [3 reals or null]}. Directions and arguments may be omitted when
/// the sides are nonzero. Errors are DomainError prefixed with the field path.
TriangleVariable triangle_from_json(const json& j, double tol = kDefaultTol);
TriangleVariable triangle_from_json(const std::string& text, double tol = kDefaultTol);

/// {sides: [[re, im] x 3], angles: [3 reals]}
ShapeClass class_from_json(const json& j);

/// Compact JSON text, used inside CSV cells.
std::string compact(const json& j);

} // namespace dyck::io
