// Acceptance suite: every golden number the toolkit must reproduce, each
// checked at its stated tolerance with one PASS/FAIL line. Exits nonzero
// if anything fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "sphergeo/sphergeo.hpp"
#include "mesh_refine.hpp"
#include "oracles.hpp"

using namespace sphergeo;

namespace {

int g_failures = 0;

void report(const std::string& label, bool ok, const std::string& detail) {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

bool near(double value, double expected, double abs_tol) {
    return std::abs(value - expected) <= abs_tol;
}

bool near_rel(double value, double expected, double rel_tol) {
    return std::abs(value - expected) <= rel_tol * std::abs(expected);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const SphereConfig kEarth{};
const LatLon kNyc{41, -74};
const LatLon kParisPaper{49, 3};
const LatLon kFlorida{28, -81};
const LatLon kBermuda{32, -65};
const LatLon kPuertoRico{18, -66};

void criterion_1() {
    Vec3 v = to_cartesian(kNyc, kEarth);
    bool ok = near(v.x, 1327, 1) && near(v.y, -4627, 1) && near(v.z, 4184, 1);
    report("1. NYC Cartesian coordinates (1327, -4627, 4184) each +/-1 km", ok,
           "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")");
}

void criterion_2() {
    Vec3 v = to_cartesian(kParisPaper, kEarth);
    bool ok = near(v.x, 4179, 1) && near(v.y, 219, 1) && near(v.z, 4814, 1);
    report("2. Paris (49N, 3E) Cartesian coordinates (4179, 219, 4814) each +/-1 km", ok,
           "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")");
}

void criterion_3() {
    Vec3 n = to_cartesian(kNyc, kEarth), p = to_cartesian(kParisPaper, kEarth);
    double cosine = dot(n, p) / (n.norm() * p.norm());
    double alpha = central_angle(n, p);
    double d = great_circle_distance(kNyc, kParisPaper, kEarth);
    bool ok = near(cosine, 0.6065, 0.0005) && near(alpha, 52.66, 0.05) && near(d, 5862, 10);
    report("3. NYC-Paris: cos = 0.6065 +/-0.0005, angle 52.66 +/-0.05, distance 5862 +/-10",
           ok, "cos " + fmt(cosine) + ", angle " + fmt(alpha) + ", d " + fmt(d));
}

void criterion_4() {
    Vec3 f = to_cartesian(kFlorida, kEarth);
    Vec3 b = to_cartesian(kBermuda, kEarth);
    Vec3 pr = to_cartesian(kPuertoRico, kEarth);
    bool ok = near(f.x, 881, 1) && near(f.y, -5562, 1) && near(f.z, 2994, 1) &&
              near(b.x, 2286, 1) && near(b.y, -4902, 1) && near(b.z, 3380, 1) &&
              near(pr.x, 2467, 1) && near(pr.y, -5541, 1) && near(pr.z, 1971, 1);
    report("4. Bermuda-triangle Cartesian coordinates, each component +/-1 km", ok,
           "F(" + fmt(f.x) + "," + fmt(f.y) + "," + fmt(f.z) + ") B(" + fmt(b.x) + "," +
               fmt(b.y) + "," + fmt(b.z) + ") PR(" + fmt(pr.x) + "," + fmt(pr.y) + "," +
               fmt(pr.z) + ")");
}

void criterion_5() {
    Vec3 f = to_cartesian(kFlorida, kEarth);
    Vec3 b = to_cartesian(kBermuda, kEarth);
    Vec3 pr = to_cartesian(kPuertoRico, kEarth);
    LatLon fxpr = to_latlon(cross(f, pr));
    LatLon prxb = to_latlon(cross(pr, b));
    LatLon bxf = to_latlon(cross(b, f));
    bool ok = near(fxpr.lat, 48, 1) && near(fxpr.lon, 45, 1) && near(prxb.lat, 3, 1) &&
              near(prxb.lon, -157, 1) && near(bxf.lat, -56, 1) && near(bxf.lon, -43, 1);
    report("5. Cross-product exit points (48N,45E), (3N,157W), (56S,43W) each +/-1 deg", ok,
           "FxPR(" + fmt(fxpr.lat) + "," + fmt(fxpr.lon) + ") PRxB(" + fmt(prxb.lat) + "," +
               fmt(prxb.lon) + ") BxF(" + fmt(bxf.lat) + "," + fmt(bxf.lon) + ")");
}

void criterion_6() {
    GeodesicPolygon tri{{kFlorida, kPuertoRico, kBermuda}, kEarth};  // counterclockwise
    PolygonReport rep = polygon_report(tri);
    // vertex order is F, PR, B
    double at_f = rep.interior_angles_deg[0];
    double at_pr = rep.interior_angles_deg[1];
    double at_b = rep.interior_angles_deg[2];
    double heron = heron_area(rep.side_lengths_km[0], rep.side_lengths_km[1],
                              rep.side_lengths_km[2]);
    double extra = sphere_vs_plane_excess_area(tri);

    bool ok_angles = near(at_f, 52.8, 0.3) && near(at_pr, 54.8, 0.3) && near(at_b, 74.1, 0.3);
    bool ok_sum = near(rep.angle_sum_deg, 181.7, 0.3);
    bool ok_area = near_rel(rep.spherical_area_km2, 1211500, 0.01);
    bool ok_sides = near(rep.side_lengths_km[0], 1895, 10) &&
                    near(rep.side_lengths_km[1], 1562, 10) &&
                    near(rep.side_lengths_km[2], 1604, 10);
    bool ok_heron = near_rel(heron, 1200800, 0.001);
    bool ok_extra = near_rel(extra, 10700, 0.15);
    report("6. Bermuda triangle: angles 52.8/54.8/74.1 +/-0.3, sum 181.7 +/-0.3, area"
           " 1211500 +/-1%, sides 1895/1562/1604 +/-10, Heron 1200800 +/-0.1%, extra"
           " 10700 +/-15%",
           ok_angles && ok_sum && ok_area && ok_sides && ok_heron && ok_extra,
           "angles " + fmt(at_f) + "/" + fmt(at_pr) + "/" + fmt(at_b) + ", sum " +
               fmt(rep.angle_sum_deg) + ", area " + fmt(rep.spherical_area_km2) + ", sides " +
               fmt(rep.side_lengths_km[0]) + "/" + fmt(rep.side_lengths_km[1]) + "/" +
               fmt(rep.side_lengths_km[2]) + ", heron " + fmt(heron) + ", extra " + fmt(extra));
}

void criterion_7() {
    double at49 = foucault_precession(49);
    double at90 = foucault_precession(90);
    double at0 = foucault_precession(0);
    bool ok = near(at49, 272, 0.5) && at90 == 360.0 && at0 == 0.0;
    report("7. Foucault: 49 deg -> 272 +/-0.5, 90 deg -> 360 exact, 0 deg -> 0 exact", ok,
           fmt(at49) + ", " + fmt(at90) + ", " + fmt(at0));
}

void criterion_8() {
    SurfaceMesh soccer = load_mesh_file(std::string(SPHERGEO_DATA_DIR) + "/soccer-ball.json");
    TopologyReport s = euler_characteristic(soccer);
    EdgeDoubleCount dc = edge_double_count_check(soccer);
    long long tetra_chi = euler_characteristic(canonical_mesh("tetrahedron")).chi;
    long long torus_chi = euler_characteristic(canonical_mesh("torus_grid(4,4)")).chi;
    long long genus2_chi = euler_characteristic(canonical_mesh("genus2_double_torus")).chi;
    bool ok = s.V == 60 && s.F == 32 && s.E == 90 && s.chi == 2 &&
              dc.sum_over_faces == 180 && dc.twice_edges == 180 && tetra_chi == 2 &&
              torus_chi == 0 && genus2_chi == -2;
    report("8. Meshes: soccer ball V60/F32/E90/chi2, sum E_f 180 = 2E, tetra chi2,"
           " torus chi0, double torus chi-2, integer-exact",
           ok,
           "V=" + std::to_string(s.V) + " F=" + std::to_string(s.F) + " E=" +
               std::to_string(s.E) + " chi=" + std::to_string(s.chi) + " sumEf=" +
               std::to_string(dc.sum_over_faces) + " tetra=" + std::to_string(tetra_chi) +
               " torus=" + std::to_string(torus_chi) + " genus2=" + std::to_string(genus2_chi));
}

void criterion_9() {
    auto t0 = std::chrono::steady_clock::now();

    {  // 9a: conversion roundtrip
        oracle::Rng rng(101);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            LatLon p = rng.point();
            LatLon back = to_latlon(to_cartesian(p, kEarth), kEarth);
            worst = std::max({worst, std::abs(back.lat - p.lat), std::abs(back.lon - p.lon)});
        }
        report("9a. to_cartesian/to_latlon roundtrip <= 1e-9 deg over 10^4 points",
               worst <= 1e-9, "worst " + fmt(worst));
    }
    {  // 9b: dot-product angle vs law-of-cosines angle
        oracle::Rng rng(102);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            Vec3 a = to_cartesian(rng.point(), kEarth);
            Vec3 b = to_cartesian(rng.point(), kEarth);
            double gap = std::abs(central_angle(a, b) -
                                  law_of_cosines_angle(a.norm(), b.norm(), (a - b).norm()));
            worst = std::max(worst, gap);
        }
        report("9b. dot-product vs law-of-cosines angle <= 1e-6 deg over 10^4 pairs",
               worst <= 1e-6, "worst " + fmt(worst));
    }
    {  // 9c: Gauss-Bonnet equality of the two area routes
        oracle::Rng rng(103);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            auto t = rng.ccw_triangle();
            PolygonReport rep = polygon_report({{t[0], t[1], t[2]}, kEarth});
            double via_holonomy =
                area_from_holonomy(transport_polygon(rep.interior_angles_deg).raw_deg, kEarth);
            worst = std::max(worst, std::abs(via_holonomy - rep.spherical_area_km2) /
                                        rep.spherical_area_km2);
        }
        report("9c. excess-area vs holonomy-area <= 1e-9 relative over 10^3 triangles",
               worst <= 1e-9, "worst " + fmt(worst));
    }
    {  // 9d: total excess 720 for the sphere coverings
        bool ok = true;
        std::string detail;
        for (const char* name :
             {"tetrahedron", "cube", "octahedron", "truncated_icosahedron"}) {
            double total = angle_sum_identity_check(canonical_mesh(name));
            ok = ok && near(total, 720.0, 1e-3);
            detail += std::string(name) + "=" + fmt(total) + " ";
        }
        report("9d. total spherical excess 720 +/-1e-3 deg for the solid coverings", ok,
               detail);
    }
    {  // 9e: latitude-circle discretization error falls as N doubles
        double exact = latitude_circle_holonomy(49, kEarth).raw_deg;
        bool ok = true;
        std::string detail;
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 16; n <= 512; n *= 2) {
            std::vector<LatLon> pts;
            for (int k = 0; k < n; ++k) pts.push_back({49.0, -180.0 + 360.0 * k / n});
            double err = std::abs(smooth_curve_holonomy(pts, kEarth).raw_deg - exact);
            ok = ok && err < prev;
            detail += "N" + std::to_string(n) + "=" + fmt(err) + " ";
            prev = err;
        }
        report("9e. latitude-circle holonomy error decreases as N doubles 16 -> 512", ok,
               detail);
    }
    {  // 9f: chi invariant under random refinement
        oracle::Rng rng(104);
        bool ok = true;
        std::string detail;
        for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron",
                                 "truncated_icosahedron", "torus_grid(4,4)",
                                 "genus2_double_torus"}) {
            SurfaceMesh m = canonical_mesh(name);
            long long chi0 = euler_characteristic(m).chi;
            for (int step = 0; step < 100; ++step) m = mesh_refine::random_step(m, rng);
            long long chi = euler_characteristic(m).chi;
            ok = ok && chi == chi0;
            detail += std::string(name) + ":" + std::to_string(chi) + " ";
        }
        report("9f. chi invariant under 100 random refinements per canonical mesh", ok,
               detail);
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report("9g. property suite runs under 10 seconds", secs < 10.0, fmt(secs) + " s");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
