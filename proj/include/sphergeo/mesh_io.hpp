#pragma once

// Mesh document format:
//   { "vertices": [[x,y,z], ...] | null, "vertex_count": int,
//     "faces": [[i,j,k,...], ...] }
// Indices are 0-based; positions, when present, are in units of sphere
// radii (unit sphere).

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sphergeo/mesh.hpp"

namespace sphergeo {

/// Parse and validate a mesh document. Parse failures and manifold
/// violations throw with a description of the offending element.
inline SurfaceMesh load_mesh(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("mesh parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("faces"))
        throw std::invalid_argument("mesh document must be an object with a \"faces\" array");

    std::vector<std::vector<int>> faces;
    try {
        faces = doc.at("faces").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("mesh parse error in \"faces\": ") + e.what());
    }

    std::vector<Vec3> positions;
    if (doc.contains("vertices") && !doc.at("vertices").is_null()) {
        for (const auto& row : doc.at("vertices")) {
            if (!row.is_array() || row.size() != 3)
                throw std::invalid_argument("mesh parse error: each vertex must be [x, y, z]");
            positions.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
        }
    }

    std::optional<std::size_t> vertex_count;
    if (doc.contains("vertex_count")) {
        if (!doc.at("vertex_count").is_number_integer() || doc.at("vertex_count").get<long long>() < 0)
            throw std::invalid_argument("mesh parse error: vertex_count must be a nonnegative integer");
        vertex_count = doc.at("vertex_count").get<std::size_t>();
    }

    return make_mesh(std::move(faces), std::move(positions), vertex_count);
}

inline SurfaceMesh load_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open mesh file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_mesh(buf.str());
}

/// Serialize a mesh back into the document format.
inline std::string save_mesh(const SurfaceMesh& m) {
    nlohmann::json doc;
    doc["vertex_count"] = m.vertex_count;
    if (m.has_positions()) {
        nlohmann::json verts = nlohmann::json::array();
        for (const Vec3& p : m.positions) verts.push_back({p.x, p.y, p.z});
        doc["vertices"] = verts;
    } else {
        doc["vertices"] = nullptr;
    }
    doc["faces"] = m.faces;
    return doc.dump(2) + "\n";
}

}  // namespace sphergeo
