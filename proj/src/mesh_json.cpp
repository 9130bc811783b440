#include "lowpoly/mesh_json.hpp"

#include <string>

#include "lowpoly/error.hpp"

namespace lowpoly {

nlohmann::json mesh_to_json(const Triangulation& mesh) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : mesh.vertices) verts.push_back({v.x, v.y});
  nlohmann::json tris = nlohmann::json::array();
  for (const auto& t : mesh.triangles) tris.push_back({t.a, t.b, t.c});
  return {{"vertices", std::move(verts)}, {"triangles", std::move(tris)}};
}

Triangulation mesh_from_json(const nlohmann::json& doc) {
  Triangulation mesh;
  try {
    for (const auto& v : doc.at("vertices")) {
      if (v.size() != 2) throw Error(ErrorKind::Parameter, "vertex must be [x, y]");
      mesh.vertices.push_back({v.at(0).get<std::int32_t>(), v.at(1).get<std::int32_t>()});
    }
    const int n = static_cast<int>(mesh.vertices.size());
    for (const auto& t : doc.at("triangles")) {
      if (t.size() != 3) throw Error(ErrorKind::Parameter, "triangle must be [a, b, c]");
      Triangle tri{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
      for (int i : {tri.a, tri.b, tri.c})
        if (i < 0 || i >= n) throw Error(ErrorKind::Parameter, "triangle index " + std::to_string(i) + " out of range");
      mesh.triangles.push_back(tri);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parameter, std::string("malformed mesh json: ") + e.what());
  }
  return mesh;
}

}  // namespace lowpoly
