#pragma once

// Core spherical geometry: geographic <-> Cartesian conversion and the
// dot/cross-product primitives everything else is built from.
//
// Conventions: angles are degrees at every API boundary (radians are an
// internal detail); latitude is North-positive in [-90, 90]; longitude is
// East-positive, normalized into (-180, 180].

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphergeo {

inline constexpr double kRadPerDeg = std::numbers::pi / 180.0;
inline constexpr double kDegPerRad = 180.0 / std::numbers::pi;

inline double deg2rad(double deg) { return deg * kRadPerDeg; }
inline double rad2deg(double rad) { return rad * kDegPerRad; }

inline double sin_deg(double deg) { return std::sin(deg2rad(deg)); }
inline double cos_deg(double deg) { return std::cos(deg2rad(deg)); }

/// Normalize a longitude into (-180, 180].
inline double wrap_longitude(double lon_deg) {
    double r = std::fmod(lon_deg, 360.0);
    if (r <= -180.0)
        r += 360.0;
    else if (r > 180.0)
        r -= 360.0;
    return r;
}

/// Reduce an angle into [0, 360).
inline double wrap_turn(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) r += 360.0;
    return r == 0.0 ? 0.0 : r;  // avoid -0
}

/// Reduce an angle into (-180, 180].
inline double wrap_pm180(double deg) {
    double r = wrap_turn(deg);
    return r > 180.0 ? r - 360.0 : r;
}

/// Cartesian triple. Kilometers for position vectors, unitless for
/// normalized directions.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& v) const { return {x + v.x, y + v.y, z + v.z}; }
    Vec3 operator-(const Vec3& v) const { return {x - v.x, y - v.y, z - v.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    Vec3 normalized() const {
        double n = norm();
        if (n == 0.0) throw std::invalid_argument("degenerate direction: cannot normalize zero vector");
        return *this / n;
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Scalar product x1*x2 + y1*y2 + z1*z2.
inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Vector product, computed as the formal determinant expansion.
/// Perpendicular to both inputs, right-hand oriented. Parallel inputs
/// yield the zero vector; callers must handle that case.
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - b.y * a.z,
            a.z * b.x - b.z * a.x,
            a.x * b.y - b.x * a.y};
}

/// Sphere model. The default radius is the Earth's, 6378 km.
struct SphereConfig {
    double radius_km = 6378.0;

    SphereConfig() = default;
    explicit SphereConfig(double r) : radius_km(r) {
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::invalid_argument("sphere radius must be positive and finite");
    }
};

/// Geographic coordinate in degrees. Latitude is validated into [-90, 90];
/// longitude is normalized into (-180, 180] on construction.
struct LatLon {
    double lat = 0.0;
    double lon = 0.0;

    LatLon() = default;
    LatLon(double lat_deg, double lon_deg) : lat(lat_deg), lon(wrap_longitude(lon_deg)) {
        if (!(lat >= -90.0 && lat <= 90.0))
            throw std::invalid_argument("latitude " + std::to_string(lat_deg) +
                                        " out of range [-90, 90]");
        if (!std::isfinite(lon))
            throw std::invalid_argument("longitude must be finite");
    }
};

/// Position vector of a geographic point:
/// (R cos(lat) cos(lon), R cos(lat) sin(lon), R sin(lat)).
inline Vec3 to_cartesian(const LatLon& p, const SphereConfig& cfg = {}) {
    double clat = cos_deg(p.lat);
    return {cfg.radius_km * clat * cos_deg(p.lon),
            cfg.radius_km * clat * sin_deg(p.lon),
            cfg.radius_km * sin_deg(p.lat)};
}

/// Unit direction vector of a geographic point.
inline Vec3 unit_vector(const LatLon& p) {
    return to_cartesian(p, SphereConfig{1.0});
}

/// Inverse of to_cartesian: lat = asin(z/|v|), lon = atan2(y, x). Any
/// vector length is accepted (the direction is what matters). At the poles
/// longitude is reported as 0 by convention.
inline LatLon to_latlon(const Vec3& v, const SphereConfig& = {}) {
    double n = v.norm();
    if (n == 0.0 || !std::isfinite(n))
        throw std::invalid_argument("degenerate direction: zero or non-finite vector");
    double z = std::clamp(v.z / n, -1.0, 1.0);
    return {rad2deg(std::asin(z)), rad2deg(std::atan2(v.y, v.x))};
}

/// Central angle between two position vectors, in [0, 180] degrees:
/// alpha = acos(a.b / (|a||b|)), with the cosine clamped to [-1, 1] to
/// absorb roundoff.
inline double central_angle(const Vec3& a, const Vec3& b) {
    double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("central_angle requires nonzero vectors");
    double c = std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
    return rad2deg(std::acos(c));
}

/// Great-circle distance: (alpha/360) * 2*pi*R. Symmetric in p, q. An
/// antipodal pair returns pi*R; the arc itself is not unique there but the
/// distance is.
inline double great_circle_distance(const LatLon& p, const LatLon& q,
                                    const SphereConfig& cfg = {}) {
    double alpha = central_angle(to_cartesian(p, cfg), to_cartesian(q, cfg));
    return alpha / 360.0 * 2.0 * std::numbers::pi * cfg.radius_km;
}

/// Planar law of cosines: the angle opposite side l3 in a triangle with
/// sides l1, l2, l3, from cos(alpha) = (l1^2 + l2^2 - l3^2) / (2 l1 l2).
/// The cosine may exceed [-1, 1] by at most 1e-9 (roundoff); beyond that
/// the sides do not form a triangle.
inline double law_of_cosines_angle(double l1, double l2, double l3) {
    if (!(l1 > 0.0) || !(l2 > 0.0))
        throw std::invalid_argument("law_of_cosines_angle: l1 and l2 must be positive");
    if (l3 < 0.0)
        throw std::invalid_argument("law_of_cosines_angle: l3 must be nonnegative");
    double c = (l1 * l1 + l2 * l2 - l3 * l3) / (2.0 * l1 * l2);
    if (c > 1.0 + 1e-9 || c < -1.0 - 1e-9)
        throw std::invalid_argument("not a triangle");
    return rad2deg(std::acos(std::clamp(c, -1.0, 1.0)));
}

}  // namespace sphergeo
