#pragma once

// Geodesic polygons on the sphere: interior vertex angles, spherical
// excess, area, and the planar Heron comparison.

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sphergeo/core.hpp"

namespace sphergeo {

namespace detail {

// Angular separation below which two directions are treated as the same
// (or opposite) point. Matches the library's stated resolution limit.
inline constexpr double kDegenerateRad = 1e-9;

inline void check_distinct_neighbor(const Vec3& at, const Vec3& nb) {
    double s = cross(at, nb).norm();
    double c = dot(at, nb);
    // atan2(|cross|, |dot|) is the separation from the nearest of
    // {coincident, antipodal}, robust for tiny angles.
    if (std::atan2(s, std::abs(c)) < kDegenerateRad) {
        throw std::invalid_argument(c > 0.0
            ? "degenerate neighbor: vertices coincide"
            : "degenerate neighbor: vertices are antipodal");
    }
}

}  // namespace detail

/// Interior angle of a geodesic polygon at unit vector `at`, with `prev`
/// and `next` the traversal neighbors (all unit vectors).
///
/// The two sides through `at` lie on great circles with normals
/// n1 = at x prev and n2 = next x at. The interior angle is
/// 180 - signed_angle(n1, n2), where the sign is taken around the outward
/// direction at the vertex. For a polygon traversed counterclockwise
/// (seen from outside the sphere) this equals 180 minus the unsigned
/// angle between the normals; traversing the same vertices clockwise
/// yields the complementary region's angle (360 minus it). Result is in
/// [0, 360).
inline double geodesic_interior_angle(const Vec3& prev, const Vec3& at, const Vec3& next) {
    detail::check_distinct_neighbor(at, prev);
    detail::check_distinct_neighbor(at, next);
    Vec3 n1 = cross(at, prev);
    Vec3 n2 = cross(next, at);
    double s = dot(cross(n1, n2), at);
    double c = dot(n1, n2);
    double signed_deg = rad2deg(std::atan2(s, c));  // (-180, 180]
    double interior = 180.0 - signed_deg;           // [0, 360)
    if (interior >= 360.0) interior -= 360.0;
    return interior;
}

/// Interior angle at `at` for geographic coordinates.
inline double vertex_angle(const LatLon& prev, const LatLon& at, const LatLon& next,
                           const SphereConfig& = {}) {
    return geodesic_interior_angle(unit_vector(prev), unit_vector(at), unit_vector(next));
}

/// Ordered vertex list on the sphere; sides are implicitly great-circle
/// arcs. Vertices should run counterclockwise seen from outside the
/// sphere for the report's angles to describe the enclosed region;
/// clockwise input describes the complementary region instead.
struct GeodesicPolygon {
    std::vector<LatLon> vertices;
    SphereConfig cfg;
};

struct PolygonReport {
    std::vector<double> interior_angles_deg;
    double angle_sum_deg = 0.0;
    double excess_deg = 0.0;        // angle_sum - (N-2)*180
    double spherical_area_km2 = 0.0;  // R^2 * excess * (2*pi/360)
    std::vector<double> side_lengths_km;  // side i joins vertex i to i+1
};

/// Interior angles, spherical excess, area, and side lengths of a
/// geodesic polygon. Excess may exceed 360 for polygons enclosing more
/// than a hemisphere; the same formula covers that case.
inline PolygonReport polygon_report(const GeodesicPolygon& poly) {
    const auto& v = poly.vertices;
    std::size_t n = v.size();
    if (n < 3)
        throw std::invalid_argument("polygon needs at least 3 vertices");

    std::vector<Vec3> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = unit_vector(v[i]);

    PolygonReport rep;
    rep.interior_angles_deg.reserve(n);
    rep.side_lengths_km.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& prev = u[(i + n - 1) % n];
        const Vec3& next = u[(i + 1) % n];
        rep.interior_angles_deg.push_back(geodesic_interior_angle(prev, u[i], next));
        rep.angle_sum_deg += rep.interior_angles_deg.back();
        rep.side_lengths_km.push_back(
            great_circle_distance(v[i], v[(i + 1) % n], poly.cfg));
    }
    rep.excess_deg = rep.angle_sum_deg - static_cast<double>(n - 2) * 180.0;
    double r = poly.cfg.radius_km;
    rep.spherical_area_km2 = r * r * rep.excess_deg * (2.0 * std::numbers::pi / 360.0);
    return rep;
}

/// Accumulated turning of the polygon traversal, sum over vertices of
/// (180 - interior angle). Positive for counterclockwise traversal of a
/// region smaller than a hemisphere, negative for clockwise, zero when
/// the boundary is a great circle.
inline double accumulated_turning(const GeodesicPolygon& poly) {
    PolygonReport rep = polygon_report(poly);
    return 360.0 - rep.excess_deg;
}

/// Return the polygon traversed counterclockwise around the smaller of
/// the two regions its boundary cuts out (reverses the vertex order when
/// the accumulated turning is negative).
inline GeodesicPolygon oriented_counterclockwise(GeodesicPolygon poly) {
    if (accumulated_turning(poly) < 0.0)
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

/// Heron's formula: planar triangle area from side lengths,
/// sqrt(s(s-a)(s-b)(s-c)) with s = (a+b+c)/2. Degenerate (collinear)
/// sides give 0; a triangle-inequality violation beyond 1e-9 relative is
/// an error.
inline double heron_area(double a, double b, double c) {
    if (a < 0.0 || b < 0.0 || c < 0.0)
        throw std::invalid_argument("heron_area: side lengths must be nonnegative");
    double s = (a + b + c) / 2.0;
    double ta = s - a, tb = s - b, tc = s - c;
    double scale = std::max({a, b, c});
    double tol = 1e-9 * std::max(scale, 1.0);
    if (ta < -tol || tb < -tol || tc < -tol)
        throw std::invalid_argument("not a triangle: side lengths violate the triangle inequality");
    ta = std::max(ta, 0.0);
    tb = std::max(tb, 0.0);
    tc = std::max(tc, 0.0);
    return std::sqrt(s * ta * tb * tc);
}

/// Spherical-minus-planar area of a geodesic triangle: the spherical area
/// minus the Heron area of a flat triangle with the same (great-circle
/// arc) side lengths. Triangles only.
inline double sphere_vs_plane_excess_area(const GeodesicPolygon& poly) {
    if (poly.vertices.size() != 3)
        throw std::invalid_argument("triangle comparison only");
    PolygonReport rep = polygon_report(poly);
    return rep.spherical_area_km2 -
           heron_area(rep.side_lengths_km[0], rep.side_lengths_km[1], rep.side_lengths_km[2]);
}

}  // namespace sphergeo
