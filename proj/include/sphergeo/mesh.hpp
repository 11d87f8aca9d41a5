#pragma once

// Combinatorial polygonal coverings of closed surfaces: validated
// face-vertex meshes, Euler characteristic and genus, edge
// double-counting, and the geometric angle-sum checks for meshes whose
// vertices lie on the sphere.

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphergeo/core.hpp"
#include "sphergeo/polygon.hpp"

namespace sphergeo {

/// A closed polygonal surface: faces as vertex-index cycles with a
/// derived edge set. Positions are optional; purely combinatorial checks
/// never need them. Validated and immutable after construction (see
/// make_mesh); when the mesh is orientable its faces are stored
/// consistently oriented, counterclockwise seen from outside whenever
/// positions are present.
struct SurfaceMesh {
    std::size_t vertex_count = 0;
    std::vector<std::vector<int>> faces;
    std::vector<Vec3> positions;            // empty when combinatorial only
    std::vector<std::array<int, 2>> edges;  // unordered index pairs, sorted
    bool orientable = false;
    bool connected = false;

    bool has_positions() const { return !positions.empty(); }
};

struct TopologyReport {
    std::size_t V = 0;
    std::size_t E = 0;
    std::size_t F = 0;
    long long chi = 0;  // V + F - E
    bool orientable = false;
    bool connected = false;
    std::optional<long long> genus;  // (2 - chi)/2; absent when not meaningful
    std::map<std::size_t, std::size_t> face_size_histogram;
};

namespace detail {

struct EdgeUse {
    std::size_t face;
    bool forward;  // traversed from the smaller to the larger index
};

inline std::string edge_str(int a, int b) {
    std::ostringstream os;
    os << "{" << a << "," << b << "}";
    return os.str();
}

}  // namespace detail

/// Build and validate a mesh from face cycles. Checks, in order: index
/// bounds; every cycle has length >= 3 with no repeated vertex; every
/// edge belongs to exactly two faces; every vertex belongs to at least
/// three faces whose corners close into a single cycle around it.
/// Violations are reported with the offending face, edge, or vertex.
/// A consistent face orientation is attempted; if none exists the mesh
/// still loads with orientable = false.
inline SurfaceMesh make_mesh(std::vector<std::vector<int>> faces,
                             std::vector<Vec3> positions = {},
                             std::optional<std::size_t> vertex_count = std::nullopt) {
    SurfaceMesh m;

    if (!positions.empty()) {
        m.vertex_count = positions.size();
        if (vertex_count && *vertex_count != positions.size())
            throw std::invalid_argument("vertex_count does not match the number of positions");
        for (std::size_t i = 0; i < positions.size(); ++i) {
            const Vec3& p = positions[i];
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
                throw std::invalid_argument("vertex " + std::to_string(i) +
                                            " has a non-finite position");
        }
    } else if (vertex_count) {
        m.vertex_count = *vertex_count;
    } else {
        throw std::invalid_argument("mesh needs either positions or an explicit vertex_count");
    }
    if (faces.empty()) throw std::invalid_argument("mesh has no faces");

    const int v_count = static_cast<int>(m.vertex_count);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cyc = faces[f];
        if (cyc.size() < 3)
            throw std::invalid_argument("face " + std::to_string(f) + " has fewer than 3 vertices");
        std::vector<int> sorted(cyc);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (cyc[k] < 0 || cyc[k] >= v_count)
                throw std::invalid_argument("face " + std::to_string(f) + " references vertex " +
                                            std::to_string(cyc[k]) + " outside [0, " +
                                            std::to_string(v_count) + ")");
            if (k + 1 < sorted.size() && sorted[k] == sorted[k + 1])
                throw std::invalid_argument("face " + std::to_string(f) + " repeats vertex " +
                                            std::to_string(sorted[k]));
        }
    }

    // Each unordered vertex pair must be used by exactly two faces.
    std::map<std::array<int, 2>, std::vector<detail::EdgeUse>> edge_uses;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cyc = faces[f];
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
            std::array<int, 2> key{std::min(a, b), std::max(a, b)};
            edge_uses[key].push_back({f, a < b});
        }
    }
    for (const auto& [key, uses] : edge_uses) {
        if (uses.size() != 2)
            throw std::invalid_argument("manifold violation: edge " +
                                        detail::edge_str(key[0], key[1]) + " belongs to " +
                                        std::to_string(uses.size()) + " faces (expected 2)");
    }

    // Corners per vertex: (face, neighbor toward prev, neighbor toward next).
    std::vector<std::vector<std::array<int, 3>>> corners(m.vertex_count);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cyc = faces[f];
        std::size_t len = cyc.size();
        for (std::size_t k = 0; k < len; ++k) {
            int prev = cyc[(k + len - 1) % len];
            int next = cyc[(k + 1) % len];
            corners[cyc[k]].push_back({static_cast<int>(f), prev, next});
        }
    }
    for (std::size_t v = 0; v < m.vertex_count; ++v) {
        // Valence 2 is allowed: a vertex sitting on an edge (as produced
        // by edge refinement) is still manifold. Valence below 2 cannot
        // close up.
        if (corners[v].size() < 2)
            throw std::invalid_argument("manifold violation: vertex " + std::to_string(v) +
                                        " belongs to " + std::to_string(corners[v].size()) +
                                        " faces (expected at least 2)");
        // The corners around v must close into one cycle: corners are
        // adjacent when they share an edge at v. A pinched vertex (two
        // surface sheets meeting at a point) splits into several cycles.
        std::map<int, std::vector<std::size_t>> by_neighbor;
        for (std::size_t c = 0; c < corners[v].size(); ++c) {
            by_neighbor[corners[v][c][1]].push_back(c);
            by_neighbor[corners[v][c][2]].push_back(c);
        }
        std::vector<char> seen(corners[v].size(), 0);
        std::queue<std::size_t> todo;
        todo.push(0);
        seen[0] = 1;
        std::size_t reached = 1;
        while (!todo.empty()) {
            std::size_t c = todo.front();
            todo.pop();
            for (int nb : {corners[v][c][1], corners[v][c][2]}) {
                for (std::size_t other : by_neighbor[nb]) {
                    if (!seen[other]) {
                        seen[other] = 1;
                        ++reached;
                        todo.push(other);
                    }
                }
            }
        }
        if (reached != corners[v].size())
            throw std::invalid_argument("manifold violation: vertex " + std::to_string(v) +
                                        " is pinched (its faces do not form a single cycle)");
    }

    // Attempt a consistent orientation: adjacent faces must traverse
    // their shared edge in opposite directions. BFS over the face
    // adjacency, flipping as needed; a contradiction means the surface
    // is non-orientable.
    std::vector<std::vector<std::pair<std::size_t, bool>>> neighbors(faces.size());
    for (const auto& [key, uses] : edge_uses) {
        std::size_t f = uses[0].face, g = uses[1].face;
        bool same_dir = uses[0].forward == uses[1].forward;
        neighbors[f].push_back({g, same_dir});
        neighbors[g].push_back({f, same_dir});
    }
    std::vector<int> flip(faces.size(), -1);  // -1 unvisited
    m.orientable = true;
    m.connected = true;
    for (std::size_t start = 0; start < faces.size(); ++start) {
        if (flip[start] != -1) continue;
        if (start != 0) m.connected = false;
        flip[start] = 0;
        std::queue<std::size_t> todo;
        todo.push(start);
        while (!todo.empty()) {
            std::size_t f = todo.front();
            todo.pop();
            for (auto [g, same_dir] : neighbors[f]) {
                // Opposite traversal required after flips: when the raw
                // directions agree, exactly one of the two faces flips.
                int want = same_dir ? (1 - flip[f]) : flip[f];
                if (flip[g] == -1) {
                    flip[g] = want;
                    todo.push(g);
                } else if (flip[g] != want) {
                    m.orientable = false;
                }
            }
        }
    }
    if (m.orientable) {
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (flip[f] == 1) std::reverse(faces[f].begin(), faces[f].end());
        if (!positions.empty()) {
            // Canonicalize to outward (counterclockwise from outside):
            // the signed volume of the face fans must be positive.
            double vol6 = 0.0;
            for (const auto& cyc : faces) {
                const Vec3& p0 = positions[cyc[0]];
                for (std::size_t k = 1; k + 1 < cyc.size(); ++k)
                    vol6 += dot(p0, cross(positions[cyc[k]], positions[cyc[k + 1]]));
            }
            if (vol6 < 0.0)
                for (auto& cyc : faces) std::reverse(cyc.begin(), cyc.end());
        }
    }

    m.edges.reserve(edge_uses.size());
    for (const auto& [key, uses] : edge_uses) m.edges.push_back(key);
    m.faces = std::move(faces);
    m.positions = std::move(positions);
    return m;
}

/// V, E, F counts, Euler characteristic chi = V + F - E, and genus.
/// Genus (2 - chi)/2 is reported only for connected orientable meshes;
/// otherwise it is left unset.
inline TopologyReport euler_characteristic(const SurfaceMesh& m) {
    TopologyReport rep;
    rep.V = m.vertex_count;
    rep.E = m.edges.size();
    rep.F = m.faces.size();
    rep.chi = static_cast<long long>(rep.V) + static_cast<long long>(rep.F) -
              static_cast<long long>(rep.E);
    rep.orientable = m.orientable;
    rep.connected = m.connected;
    if (m.orientable && m.connected && (2 - rep.chi) % 2 == 0)
        rep.genus = (2 - rep.chi) / 2;
    for (const auto& cyc : m.faces) ++rep.face_size_histogram[cyc.size()];
    return rep;
}

/// Sum of edge counts over all faces, and twice the edge total. Equal for
/// every closed mesh: summing sides over faces counts each edge exactly
/// twice, once per adjacent face.
struct EdgeDoubleCount {
    long long sum_over_faces = 0;
    long long twice_edges = 0;
};

inline EdgeDoubleCount edge_double_count_check(const SurfaceMesh& m) {
    EdgeDoubleCount c;
    for (const auto& cyc : m.faces) c.sum_over_faces += static_cast<long long>(cyc.size());
    c.twice_edges = 2 * static_cast<long long>(m.edges.size());
    return c;
}

namespace detail {

inline void require_spherical_positions(const SurfaceMesh& m) {
    if (!m.has_positions())
        throw std::invalid_argument("angle checks need vertex positions, "
                                    "but this mesh is combinatorial only");
    if (!m.orientable)
        throw std::invalid_argument("angle checks need an orientable mesh");
    for (std::size_t i = 0; i < m.positions.size(); ++i) {
        double n = m.positions[i].norm();
        if (std::abs(n - 1.0) > 1e-6)
            throw std::invalid_argument("vertex " + std::to_string(i) +
                                        " does not lie on the unit sphere (|p| = " +
                                        std::to_string(n) + ")");
    }
}

}  // namespace detail

/// Total spherical excess over all faces, in degrees: for each face,
/// interior angles minus the flat (V_f - 2)*180, summed. A mesh covering
/// the whole sphere totals 720 regardless of the covering.
inline double angle_sum_identity_check(const SurfaceMesh& m) {
    detail::require_spherical_positions(m);
    double total = 0.0;
    for (const auto& cyc : m.faces) {
        std::size_t len = cyc.size();
        double sum = 0.0;
        for (std::size_t k = 0; k < len; ++k) {
            sum += geodesic_interior_angle(m.positions[cyc[(k + len - 1) % len]],
                                           m.positions[cyc[k]],
                                           m.positions[cyc[(k + 1) % len]]);
        }
        total += sum - static_cast<double>(len - 2) * 180.0;
    }
    return total;
}

/// Per-vertex sum of the incident face angles, in degrees. Every entry is
/// 360 for a mesh covering the sphere: the faces around each vertex tile
/// a full turn.
inline std::vector<double> vertex_angle_sum_check(const SurfaceMesh& m) {
    detail::require_spherical_positions(m);
    std::vector<double> sums(m.vertex_count, 0.0);
    for (const auto& cyc : m.faces) {
        std::size_t len = cyc.size();
        for (std::size_t k = 0; k < len; ++k) {
            sums[cyc[k]] += geodesic_interior_angle(m.positions[cyc[(k + len - 1) % len]],
                                                    m.positions[cyc[k]],
                                                    m.positions[cyc[(k + 1) % len]]);
        }
    }
    return sums;
}

// ---------------------------------------------------------------------------
// Canonical meshes

namespace detail {

// Orient a convex-solid face outward (positive dot of its Newell normal
// with the face centroid) so every face ends up counterclockwise seen
// from outside. Only valid for convex solids centered at the origin.
inline void orient_face_outward(std::vector<int>& cyc, const std::vector<Vec3>& pos) {
    Vec3 centroid{0, 0, 0};
    for (int i : cyc) centroid = centroid + pos[i];
    centroid = centroid / static_cast<double>(cyc.size());
    Vec3 normal{0, 0, 0};
    for (std::size_t k = 0; k < cyc.size(); ++k) {
        const Vec3& a = pos[cyc[k]];
        const Vec3& b = pos[cyc[(k + 1) % cyc.size()]];
        normal = normal + cross(a - centroid, b - centroid);
    }
    if (dot(normal, centroid) < 0.0) std::reverse(cyc.begin(), cyc.end());
}

inline SurfaceMesh make_solid(std::vector<Vec3> verts, std::vector<std::vector<int>> faces) {
    for (auto& v : verts) v = v.normalized();
    for (auto& f : faces) orient_face_outward(f, verts);
    return make_mesh(std::move(faces), std::move(verts));
}

}  // namespace detail

inline SurfaceMesh tetrahedron() {
    return detail::make_solid(
        {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline SurfaceMesh cube() {
    return detail::make_solid(
        {{-1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}, {-1, 1, 1},
         {1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}},
        {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}});
}

inline SurfaceMesh octahedron() {
    return detail::make_solid(
        {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
        {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
         {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}});
}

inline SurfaceMesh icosahedron() {
    const double t = std::numbers::phi;
    return detail::make_solid(
        {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
         {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
         {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}},
        {{0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
         {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
         {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
         {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}});
}

/// The soccer ball: an icosahedron with each edge trisected and the
/// corners cut back to pentagons, all vertices projected to the unit
/// sphere. 12 pentagons, 20 hexagons, V = 60, E = 90.
inline SurfaceMesh truncated_icosahedron() {
    SurfaceMesh ico = icosahedron();
    const auto& ipos = ico.positions;

    // Two trisection points per icosahedron edge; t[{a,b}] is the one
    // nearer a.
    std::map<std::array<int, 2>, int> near;
    std::vector<Vec3> verts;
    auto trisect = [&](int a, int b) {
        auto it = near.find({a, b});
        if (it != near.end()) return it->second;
        int id = static_cast<int>(verts.size());
        verts.push_back((ipos[a] * 2.0 + ipos[b]).normalized());
        near[{a, b}] = id;
        return id;
    };

    std::vector<std::vector<int>> faces;
    for (const auto& tri : ico.faces) {
        int a = tri[0], b = tri[1], c = tri[2];
        faces.push_back({trisect(a, b), trisect(b, a), trisect(b, c),
                         trisect(c, b), trisect(c, a), trisect(a, c)});
    }

    // One pentagon per icosahedron vertex: its five trisection points,
    // ordered by angle in the tangent plane.
    std::vector<std::vector<int>> around(ipos.size());
    for (const auto& [key, id] : near) around[key[0]].push_back(id);
    for (std::size_t v = 0; v < around.size(); ++v) {
        const Vec3& axis = ipos[v];
        Vec3 ref = cross(axis, std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0}).normalized();
        Vec3 ref2 = cross(axis, ref);
        std::vector<std::pair<double, int>> order;
        for (int id : around[v])
            order.push_back({std::atan2(dot(verts[id], ref2), dot(verts[id], ref)), id});
        std::sort(order.begin(), order.end());
        std::vector<int> penta;
        for (const auto& p : order) penta.push_back(p.second);
        faces.push_back(penta);
    }

    for (auto& f : faces) detail::orient_face_outward(f, verts);
    return make_mesh(std::move(faces), std::move(verts));
}

/// Quad grid on the torus: n x m cells with wraparound in both
/// directions. V = n*m, E = 2*n*m, F = n*m, so chi = 0. Combinatorial
/// only (no positions). Needs n, m >= 3 to stay a valid 2-manifold.
inline SurfaceMesh torus_grid(int n, int m) {
    if (n < 3 || m < 3)
        throw std::invalid_argument("torus_grid needs n, m >= 3");
    auto idx = [&](int i, int j) { return ((i + n) % n) * m + (j + m) % m; };
    std::vector<std::vector<int>> faces;
    faces.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            faces.push_back({idx(i, j), idx(i, j + 1), idx(i + 1, j + 1), idx(i + 1, j)});
    return make_mesh(std::move(faces), {}, static_cast<std::size_t>(n) * m);
}

/// Genus-2 surface: two 4x4 torus grids, one quad removed from each,
/// glued along the hole boundaries (with one boundary reversed to keep
/// the orientation consistent). V = 28, E = 60, F = 30, chi = -2.
inline SurfaceMesh genus2_double_torus() {
    const int n = 4, m = 4;
    auto idx = [&](int i, int j) { return ((i + n) % n) * m + (j + m) % m; };

    std::vector<std::vector<int>> faces;
    for (int half = 0; half < 2; ++half) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i == 0 && j == 0) continue;  // the removed quad
                std::vector<int> f{idx(i, j), idx(i, j + 1), idx(i + 1, j + 1), idx(i + 1, j)};
                if (half == 1)
                    for (int& v : f) v += n * m;
                faces.push_back(f);
            }
        }
    }

    // Identify the two hole boundaries with reversed winding:
    // B(0,0)->A(0,0), B(0,1)->A(1,0), B(1,1)->A(1,1), B(1,0)->A(0,1).
    std::map<int, int> remap{{n * m + idx(0, 0), idx(0, 0)},
                             {n * m + idx(0, 1), idx(1, 0)},
                             {n * m + idx(1, 1), idx(1, 1)},
                             {n * m + idx(1, 0), idx(0, 1)}};
    int next_id = n * m;
    for (auto& f : faces) {
        for (int& v : f) {
            auto it = remap.find(v);
            if (it != remap.end()) {
                v = it->second;
            } else if (v >= n * m) {
                int id = next_id++;
                remap[v] = id;
                v = id;
            }
        }
    }
    return make_mesh(std::move(faces), {}, static_cast<std::size_t>(next_id));
}

/// Look up a canonical mesh by name. Accepts tetrahedron, cube,
/// octahedron, icosahedron, truncated_icosahedron (alias soccer_ball),
/// torus_grid or torus_grid(n,m), and genus2_double_torus; '-' and '_'
/// are interchangeable.
inline SurfaceMesh canonical_mesh(const std::string& name) {
    std::string key;
    for (char c : name)
        key += (c == '-') ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    if (key == "tetrahedron") return tetrahedron();
    if (key == "cube") return cube();
    if (key == "octahedron") return octahedron();
    if (key == "icosahedron") return icosahedron();
    if (key == "truncated_icosahedron" || key == "soccer_ball") return truncated_icosahedron();
    if (key == "genus2_double_torus" || key == "double_torus") return genus2_double_torus();
    if (key == "torus_grid") return torus_grid(4, 4);
    if (key.rfind("torus_grid(", 0) == 0 && key.back() == ')') {
        std::string args = key.substr(11, key.size() - 12);
        auto comma = args.find(',');
        if (comma != std::string::npos) {
            try {
                int n = std::stoi(args.substr(0, comma));
                int mm = std::stoi(args.substr(comma + 1));
                return torus_grid(n, mm);
            } catch (const std::logic_error&) {
                throw std::invalid_argument("bad torus_grid arguments: " + name);
            }
        }
        throw std::invalid_argument("bad torus_grid arguments: " + name);
    }
    throw std::invalid_argument("unknown canonical mesh: " + name);
}

}  // namespace sphergeo
