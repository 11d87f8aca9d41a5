#pragma once

// Parallel-transport bookkeeping: the frictionless-wheel walk around a
// geodesic polygon, area from the accumulated angle, and the
// latitude-circle (Foucault) formulas.
//
// Every holonomy quantity is reported two ways. The raw value is the
// signed accumulated angle, which preserves area information (regions
// larger than a hemisphere give |raw| > 360). The reduced value is a
// mod-360 representative matching what the wheel face shows; exactly one
// full turn is reported as 360, not 0, so a pole-sitter's daily reading
// comes out as a whole revolution.

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sphergeo/core.hpp"
#include "sphergeo/polygon.hpp"

namespace sphergeo {

/// Raw and reduced accumulated angle, both in degrees.
struct HolonomyReading {
    double raw_deg = 0.0;
    double reduced_deg = 0.0;  // mod-360 representative of raw
};

/// The parallel transporter: a wheel on a frictionless axle carried
/// around a piecewise-geodesic path. Each corner turn of interior angle
/// alpha advances the reading by 180 - alpha.
class TransportWalk {
public:
    /// Record a corner with the given interior angle.
    void turn(double interior_angle_deg) {
        double last = readings_.empty() ? 0.0 : readings_.back();
        turn_angles_.push_back(interior_angle_deg);
        readings_.push_back(last + (180.0 - interior_angle_deg));
    }

    std::size_t turns() const { return turn_angles_.size(); }
    const std::vector<double>& turn_angles() const { return turn_angles_; }

    /// Raw running readings, one per turn: after k turns the reading is
    /// sum over i<=k of (180 - alpha_i).
    const std::vector<double>& readings() const { return readings_; }

    double raw_reading() const { return readings_.empty() ? 0.0 : readings_.back(); }

    /// What the wheel face shows, reduced into (-180, 180].
    double reported_reading() const { return wrap_pm180(raw_reading()); }

private:
    std::vector<double> turn_angles_;
    std::vector<double> readings_;
};

/// Accumulated angle after transporting around an N-gon with the given
/// interior angles: theta = (N-2)*180 - sum(alpha). Zero on a flat
/// surface; negative for a counterclockwise spherical polygon, with
/// -theta proportional to the enclosed area.
inline HolonomyReading transport_polygon(const std::vector<double>& interior_angles_deg) {
    if (interior_angles_deg.size() < 3)
        throw std::invalid_argument("transport_polygon needs at least 3 interior angles");
    TransportWalk walk;
    for (double a : interior_angles_deg) {
        if (!(a > 0.0 && a < 360.0))
            throw std::invalid_argument("interior angles must lie in (0, 360) degrees");
        walk.turn(a);
    }
    // The walk reads N*180 - sum(alpha); dropping the full turn made in
    // going once around the loop leaves (N-2)*180 - sum(alpha).
    double raw = walk.raw_reading() - 360.0;
    return {raw, wrap_turn(raw)};
}

/// Enclosed area from the accumulated angle: A = R^2 * (-theta) * (2*pi/360).
/// Takes the raw (signed, unreduced) angle; a negative theta gives a
/// positive area.
inline double area_from_holonomy(double theta_deg, const SphereConfig& cfg = {}) {
    double r = cfg.radius_km;
    return r * r * (-theta_deg) * (2.0 * std::numbers::pi / 360.0);
}

/// The area formula flipped around: theta = -(A/R^2) * (360/2*pi).
inline double holonomy_from_area(double area_km2, const SphereConfig& cfg = {}) {
    if (area_km2 < 0.0)
        throw std::invalid_argument("holonomy_from_area: area must be nonnegative");
    double r = cfg.radius_km;
    return -(area_km2 / (r * r)) * (360.0 / (2.0 * std::numbers::pi));
}

/// Area of the polar cap north of the given latitude:
/// A = 2*pi*R^2 * (1 - sin(lat)). The whole sphere at lat = -90, a
/// hemisphere at lat = 0, zero at the pole.
inline double cap_area(double lat_deg, const SphereConfig& cfg = {}) {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
        throw std::invalid_argument("latitude out of range [-90, 90]");
    double r = cfg.radius_km;
    return 2.0 * std::numbers::pi * r * r * (1.0 - sin_deg(lat_deg));
}

/// Daily precession of a parallel-transported direction (equivalently, a
/// Foucault pendulum's swing plane) at the given latitude:
/// theta = 360 * sin(lat) degrees per revolution of the sphere. Signed:
/// odd in latitude, 0 at the equator, a full 360 at the north pole.
inline double foucault_precession(double lat_deg) {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
        throw std::invalid_argument("latitude out of range [-90, 90]");
    return 360.0 * sin_deg(lat_deg);
}

/// Holonomy of one trip around the circle of constant latitude,
/// from the cap area: raw = -(cap_area/R^2)*(360/2*pi) = 360*(sin(lat)-1).
/// The reduced representative is 360*sin(lat), the same value
/// foucault_precession reports: raw and reduced differ by one full turn.
inline HolonomyReading latitude_circle_holonomy(double lat_deg, const SphereConfig& cfg = {}) {
    double raw = holonomy_from_area(cap_area(lat_deg, cfg), cfg);
    return {raw, foucault_precession(lat_deg)};
}

/// Holonomy of a closed polyline approximating a smooth curve, traversed
/// with the enclosed region on the left. Applies transport_polygon to the
/// polyline's vertex angles; converges to the smooth-curve holonomy as
/// the discretization refines.
inline HolonomyReading smooth_curve_holonomy(const std::vector<LatLon>& curve,
                                             const SphereConfig& cfg = {}) {
    std::size_t n = curve.size();
    if (n < 3)
        throw std::invalid_argument("smooth_curve_holonomy needs at least 3 points");
    std::vector<double> angles;
    angles.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        angles.push_back(vertex_angle(curve[(i + n - 1) % n], curve[i],
                                      curve[(i + 1) % n], cfg));
    }
    return transport_polygon(angles);
}

}  // namespace sphergeo
