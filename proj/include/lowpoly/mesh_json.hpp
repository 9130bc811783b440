#pragma once

#include <json.hpp>

#include "lowpoly/delaunay.hpp"

namespace lowpoly {

/// {"vertices": [[x, y], ...], "triangles": [[a, b, c], ...]}
nlohmann::json mesh_to_json(const Triangulation& mesh);

/// Inverse of mesh_to_json. Throws Error{Parameter} on malformed documents or
/// out-of-range triangle indices.
Triangulation mesh_from_json(const nlohmann::json& doc);

}  // namespace lowpoly
