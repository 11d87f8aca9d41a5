// sphergeo command-line front end: coordinates, great-circle distances,
// spherical triangles and polygons, parallel-transport reports, Foucault
// precession, and polygonal-covering topology.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphergeo/sphergeo.hpp"

using nlohmann::json;
using namespace sphergeo;

namespace {

struct Options {
    double radius_km = 6378.0;
    std::string format = "text";
    std::string cities_path = "data/cities.csv";
    int precision = 2;  // decimals for angles in text output

    SphereConfig cfg() const { return SphereConfig{radius_km}; }
    bool json_out() const { return format == "json"; }
};

struct NamedPoint {
    std::optional<std::string> name;
    LatLon pos;

    std::string label(int precision = 2) const {
        if (name) return *name;
        std::ostringstream os;
        os.precision(precision);
        os << std::fixed << pos.lat << "," << pos.lon;
        return os.str();
    }
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// --- city table -------------------------------------------------------

struct CityTable {
    std::vector<NamedPoint> rows;

    const NamedPoint* find(const std::string& name) const {
        for (const auto& r : rows)
            if (lower(*r.name) == lower(name)) return &r;
        return nullptr;
    }
};

CityTable load_cities(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open city table: " + path);
    CityTable table;
    std::string line;
    bool header = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        if (header) {  // expect "name,lat,lon"
            header = false;
            continue;
        }
        std::istringstream row(line);
        std::string name, lat_s, lon_s;
        if (!std::getline(row, name, ',') || !std::getline(row, lat_s, ',') ||
            !std::getline(row, lon_s, ','))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected name,lat,lon");
        name = trim(name);
        if (table.find(name))
            throw std::runtime_error(path + ": duplicate city name '" + name + "'");
        try {
            table.rows.push_back(
                {name, LatLon(std::stod(trim(lat_s)), std::stod(trim(lon_s)))});
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return table;
}

// --- coordinate parsing -----------------------------------------------

// "41", "-74", "41N", "74W", "12.5s" all work; N/S is only valid for
// latitude and E/W only for longitude.
double parse_coordinate(const std::string& token, bool is_lat) {
    std::string t = trim(token);
    if (t.empty()) throw std::runtime_error("empty coordinate");
    double sign = 1.0;
    char suffix = static_cast<char>(std::toupper(static_cast<unsigned char>(t.back())));
    if (suffix == 'N' || suffix == 'S' || suffix == 'E' || suffix == 'W') {
        bool lat_suffix = (suffix == 'N' || suffix == 'S');
        if (lat_suffix != is_lat)
            throw std::runtime_error(std::string("compass suffix '") + suffix +
                                     (is_lat ? "' is not a latitude" : "' is not a longitude"));
        if (suffix == 'S' || suffix == 'W') sign = -1.0;
        t = trim(t.substr(0, t.size() - 1));
    }
    try {
        std::size_t used = 0;
        double value = std::stod(t, &used);
        if (used != t.size()) throw std::runtime_error("");
        return sign * value;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed coordinate: " + token);
    }
}

class PointResolver {
public:
    explicit PointResolver(const Options& opt) : opt_(opt) {}

    // A point argument is either "lat,lon" or a city name.
    NamedPoint resolve(const std::string& arg) {
        auto comma = arg.find(',');
        if (comma != std::string::npos) {
            double lat = parse_coordinate(arg.substr(0, comma), true);
            double lon = parse_coordinate(arg.substr(comma + 1), false);
            return {std::nullopt, LatLon(lat, lon)};
        }
        if (!table_) table_ = load_cities(opt_.cities_path);
        const NamedPoint* city = table_->find(arg);
        if (!city)
            throw std::runtime_error("unknown city '" + arg + "' (looked in " +
                                     opt_.cities_path + ")");
        return *city;
    }

private:
    const Options& opt_;
    std::optional<CityTable> table_;
};

// --- output helpers ----------------------------------------------------

long long round_int(double v) {
    double r = std::round(v);
    return static_cast<long long>(r == 0.0 ? 0.0 : r);
}

std::string fmt_deg(double v, int precision) {
    std::ostringstream os;
    os.precision(precision);
    os << std::fixed << v;
    return os.str();
}

json point_json(const NamedPoint& p) {
    json j{{"lat_deg", p.pos.lat}, {"lon_deg", p.pos.lon}};
    if (p.name) j["name"] = *p.name;
    return j;
}

void emit(const Options& opt, const json& machine, const std::string& text) {
    if (opt.json_out())
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text;
}

// --- subcommands -------------------------------------------------------

void cmd_coords(const Options& opt, const NamedPoint& p) {
    Vec3 v = to_cartesian(p.pos, opt.cfg());
    json j{{"radius_km", opt.radius_km},
           {"point", point_json(p)},
           {"cartesian_km", {v.x, v.y, v.z}}};
    std::ostringstream os;
    os << p.label() << ": lat " << fmt_deg(p.pos.lat, opt.precision) << ", lon "
       << fmt_deg(p.pos.lon, opt.precision) << "  (R = " << round_int(opt.radius_km)
       << " km)\n"
       << "(" << round_int(v.x) << ", " << round_int(v.y) << ", " << round_int(v.z)
       << ")\n";
    emit(opt, j, os.str());
}

void cmd_distance(const Options& opt, const NamedPoint& a, const NamedPoint& b) {
    SphereConfig cfg = opt.cfg();
    Vec3 va = to_cartesian(a.pos, cfg), vb = to_cartesian(b.pos, cfg);
    double cosine = dot(va, vb) / (va.norm() * vb.norm());
    double alpha = central_angle(va, vb);
    double d = great_circle_distance(a.pos, b.pos, cfg);
    json j{{"radius_km", opt.radius_km},
           {"a", point_json(a)},
           {"b", point_json(b)},
           {"cos_central_angle", cosine},
           {"central_angle_deg", alpha},
           {"distance_km", d}};
    std::ostringstream os;
    os << a.label() << " <-> " << b.label() << ":  α = "
       << fmt_deg(alpha, std::max(opt.precision, 2)) << "°, d = " << round_int(d)
       << " km\n";
    emit(opt, j, os.str());
}

// Order the vertices counterclockwise (seen from outside); reports then
// describe the enclosed region rather than its complement.
bool normalize_ccw(std::vector<NamedPoint>& pts, const SphereConfig& cfg) {
    std::vector<LatLon> lls;
    for (const auto& p : pts) lls.push_back(p.pos);
    if (accumulated_turning({lls, cfg}) < 0.0) {
        std::reverse(pts.begin(), pts.end());
        return true;
    }
    return false;
}

json vertices_json(const std::vector<NamedPoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_json(p));
    return arr;
}

void cmd_triangle(const Options& opt, std::vector<NamedPoint> pts) {
    SphereConfig cfg = opt.cfg();
    bool reversed = normalize_ccw(pts, cfg);
    GeodesicPolygon poly{{pts[0].pos, pts[1].pos, pts[2].pos}, cfg};
    PolygonReport rep = polygon_report(poly);
    double heron = heron_area(rep.side_lengths_km[0], rep.side_lengths_km[1],
                              rep.side_lengths_km[2]);
    double extra = sphere_vs_plane_excess_area(poly);

    json j{{"radius_km", opt.radius_km},
           {"vertices", vertices_json(pts)},
           {"input_reversed", reversed},
           {"interior_angles_deg", rep.interior_angles_deg},
           {"angle_sum_deg", rep.angle_sum_deg},
           {"excess_deg", rep.excess_deg},
           {"spherical_area_km2", rep.spherical_area_km2},
           {"side_lengths_km", rep.side_lengths_km},
           {"heron_area_km2", heron},
           {"excess_area_km2", extra}};

    std::ostringstream os;
    os << "Spherical triangle (R = " << round_int(opt.radius_km) << " km)";
    if (reversed) os << ", traversal reversed to counterclockwise";
    os << "\n";
    for (std::size_t i = 0; i < 3; ++i)
        os << "  angle at " << pts[i].label() << ": "
           << fmt_deg(rep.interior_angles_deg[i], std::max(opt.precision, 1)) << "°\n";
    os << "  angle sum " << fmt_deg(rep.angle_sum_deg, std::max(opt.precision, 1))
       << "°  (excess " << fmt_deg(rep.excess_deg, std::max(opt.precision, 1)) << "°)\n";
    for (std::size_t i = 0; i < 3; ++i)
        os << "  side " << pts[i].label() << " - " << pts[(i + 1) % 3].label() << ": "
           << round_int(rep.side_lengths_km[i]) << " km\n";
    os << "  spherical area " << round_int(rep.spherical_area_km2) << " km^2\n"
       << "  planar (Heron) area " << round_int(heron) << " km^2\n"
       << "  spherical - planar " << round_int(extra) << " km^2\n";
    emit(opt, j, os.str());
}

void cmd_polygon(const Options& opt, std::vector<NamedPoint> pts, bool show_walk) {
    SphereConfig cfg = opt.cfg();
    bool reversed = normalize_ccw(pts, cfg);
    std::vector<LatLon> lls;
    for (const auto& p : pts) lls.push_back(p.pos);
    PolygonReport rep = polygon_report({lls, cfg});
    HolonomyReading h = transport_polygon(rep.interior_angles_deg);
    double area = area_from_holonomy(h.raw_deg, cfg);

    json j{{"radius_km", opt.radius_km},
           {"vertices", vertices_json(pts)},
           {"input_reversed", reversed},
           {"interior_angles_deg", rep.interior_angles_deg},
           {"holonomy_raw_deg", h.raw_deg},
           {"holonomy_reduced_deg", h.reduced_deg},
           {"area_km2", area}};

    std::ostringstream os;
    int prec = std::max(opt.precision, 1);
    os << pts.size() << "-gon (R = " << round_int(opt.radius_km) << " km)";
    if (reversed) os << ", traversal reversed to counterclockwise";
    os << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << "  angle at " << pts[i].label() << ": "
           << fmt_deg(rep.interior_angles_deg[i], prec) << "°\n";
    if (show_walk) {
        TransportWalk walk;
        json steps = json::array();
        os << "  transporter wheel:\n";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            walk.turn(rep.interior_angles_deg[i]);
            steps.push_back({{"turn_deg", rep.interior_angles_deg[i]},
                             {"raw_reading_deg", walk.readings().back()},
                             {"wheel_deg", wrap_pm180(walk.readings().back())}});
            os << "    turn " << i + 1 << " by 180° - "
               << fmt_deg(rep.interior_angles_deg[i], prec) << "° -> reading "
               << fmt_deg(walk.readings().back(), prec) << "° (wheel shows "
               << fmt_deg(walk.reported_reading(), prec) << "°)\n";
        }
        j["steps"] = steps;
    }
    os << "  holonomy raw " << fmt_deg(h.raw_deg, prec) << "°, reduced "
       << fmt_deg(h.reduced_deg, prec) << "°\n"
       << "  enclosed area " << round_int(area) << " km^2\n";
    emit(opt, j, os.str());
}

void cmd_foucault(const Options& opt, double lat) {
    SphereConfig cfg = opt.cfg();
    double prec = foucault_precession(lat);
    double cap = cap_area(lat, cfg);
    HolonomyReading h = latitude_circle_holonomy(lat, cfg);
    std::string sense = lat > 0   ? "clockwise seen from above (northern hemisphere)"
                        : lat < 0 ? "counterclockwise seen from above (southern hemisphere)"
                                  : "none";
    json j{{"radius_km", opt.radius_km},
           {"latitude_deg", lat},
           {"precession_deg_per_day", prec},
           {"rotation_sense", sense},
           {"cap_area_km2", cap},
           {"holonomy_raw_deg", h.raw_deg},
           {"holonomy_reduced_deg", h.reduced_deg}};

    std::ostringstream os;
    os << "Foucault precession at latitude " << fmt_deg(lat, std::max(opt.precision, 1))
       << "°:\n";
    if (lat == 0.0) {
        os << "  0° per day — the pendulum plane does not rotate, it just swings back"
              " and forth\n";
    } else {
        os << "  " << fmt_deg(prec, std::max(opt.precision, 1)) << "° per day (≈ "
           << round_int(prec) << "°), " << sense << "\n";
    }
    os << "  latitude-circle cap area " << round_int(cap) << " km^2\n"
       << "  holonomy raw " << fmt_deg(h.raw_deg, std::max(opt.precision, 1))
       << "°, reduced " << fmt_deg(h.reduced_deg, std::max(opt.precision, 1)) << "°\n";
    emit(opt, j, os.str());
}

bool is_canonical_name(const std::string& arg) {
    static const char* names[] = {"tetrahedron", "cube",        "octahedron",
                                  "icosahedron", "soccer_ball", "truncated_icosahedron",
                                  "torus_grid",  "double_torus", "genus2_double_torus"};
    std::string key;
    for (char c : lower(arg)) key += (c == '-') ? '_' : c;
    for (const char* n : names)
        if (key == n || key.rfind("torus_grid(", 0) == 0) return true;
    return false;
}

void cmd_mesh(const Options& opt, const std::string& source, int n, int m,
              const std::string& export_path) {
    SurfaceMesh mesh;
    std::string key;
    for (char c : lower(source)) key += (c == '-') ? '_' : c;
    if (key == "torus_grid")
        mesh = torus_grid(n, m);
    else if (is_canonical_name(source))
        mesh = canonical_mesh(source);
    else
        mesh = load_mesh_file(source);

    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) throw std::runtime_error("cannot write mesh file: " + export_path);
        out << save_mesh(mesh);
    }

    TopologyReport rep = euler_characteristic(mesh);
    EdgeDoubleCount dc = edge_double_count_check(mesh);

    json hist = json::object();
    for (const auto& [size, count] : rep.face_size_histogram)
        hist[std::to_string(size)] = count;
    json j{{"source", source},
           {"V", rep.V},
           {"E", rep.E},
           {"F", rep.F},
           {"chi", rep.chi},
           {"genus", rep.genus ? json(*rep.genus) : json(nullptr)},
           {"orientable", rep.orientable},
           {"connected", rep.connected},
           {"face_size_histogram", hist},
           {"edge_double_count",
            {{"sum_over_faces", dc.sum_over_faces}, {"twice_edges", dc.twice_edges}}},
           {"angle_checks", nullptr}};

    std::ostringstream os;
    os << source << ": V=" << rep.V << " F=" << rep.F << " E=" << rep.E
       << " chi=" << rep.chi;
    if (rep.genus)
        os << " genus=" << *rep.genus;
    else
        os << " genus=" << (rep.orientable ? "n/a" : "non-orientable/unknown");
    os << "\n  face sizes:";
    for (const auto& [size, count] : rep.face_size_histogram)
        os << " " << count << "x" << size << "-gon";
    os << "\n  sum of face edge counts " << dc.sum_over_faces << " = 2E = "
       << dc.twice_edges << (dc.sum_over_faces == dc.twice_edges ? " ok" : " MISMATCH")
       << "\n";

    if (mesh.has_positions() && mesh.orientable) {
        double total = angle_sum_identity_check(mesh);
        auto sums = vertex_angle_sum_check(mesh);
        double worst = 0.0;
        for (double s : sums) worst = std::max(worst, std::abs(s - 360.0));
        j["angle_checks"] = {{"total_excess_deg", total},
                             {"max_vertex_angle_sum_deviation_deg", worst}};
        os << "  total spherical excess " << fmt_deg(total, 3) << "° (720° expected)\n"
           << "  vertex angle sums: all 360° within " << fmt_deg(worst, 6) << "°\n";
    }
    emit(opt, j, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"spherical geometry toolkit: great circles, spherical polygons,"
                 " parallel transport, and polygonal-covering topology"};
    app.require_subcommand(1);
    app.add_option("--radius", opt.radius_km, "sphere radius in km")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cities", opt.cities_path, "city table CSV (name,lat,lon)")
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "angle decimals in text output")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();

    PointResolver resolver(opt);

    // let global options (--radius, --format, ...) appear after the
    // subcommand as well
    app.fallthrough();

    auto* coords = app.add_subcommand("coords", "Cartesian coordinates of a point");
    std::string coords_place, coords_lat, coords_lon;
    coords->add_option("place", coords_place, "city name or lat,lon");
    coords->add_option("--lat", coords_lat, "latitude (e.g. 41N or -41)");
    coords->add_option("--lon", coords_lon, "longitude (e.g. 74W or -74)");
    coords->callback([&] {
        if (!coords_place.empty()) {
            cmd_coords(opt, resolver.resolve(coords_place));
        } else if (!coords_lat.empty() && !coords_lon.empty()) {
            cmd_coords(opt, {std::nullopt, LatLon(parse_coordinate(coords_lat, true),
                                                  parse_coordinate(coords_lon, false))});
        } else {
            throw CLI::ValidationError("coords", "give a place or both --lat and --lon");
        }
    });

    auto* distance = app.add_subcommand("distance", "great-circle distance between two points");
    std::vector<std::string> dist_args;
    distance->add_option("points", dist_args, "two cities or lat,lon pairs")
        ->expected(2)
        ->required();
    distance->callback(
        [&] { cmd_distance(opt, resolver.resolve(dist_args[0]), resolver.resolve(dist_args[1])); });

    auto* triangle = app.add_subcommand("triangle", "spherical triangle report with Heron comparison");
    std::vector<std::string> tri_args;
    triangle->add_option("points", tri_args, "three cities or lat,lon pairs")
        ->expected(3)
        ->required();
    triangle->callback([&] {
        std::vector<NamedPoint> pts;
        for (const auto& a : tri_args) pts.push_back(resolver.resolve(a));
        cmd_triangle(opt, std::move(pts));
    });

    auto* polygon = app.add_subcommand("polygon", "geodesic polygon report with holonomy and area");
    std::vector<std::string> poly_args;
    polygon->add_option("points", poly_args, "N >= 3 cities or lat,lon pairs")->required();
    polygon->callback([&] {
        std::vector<NamedPoint> pts;
        for (const auto& a : poly_args) pts.push_back(resolver.resolve(a));
        cmd_polygon(opt, std::move(pts), false);
    });

    auto* transport = app.add_subcommand(
        "transport", "walk the parallel transporter around a polygon, step by step");
    std::vector<std::string> walk_args;
    transport->add_option("points", walk_args, "N >= 3 cities or lat,lon pairs")->required();
    transport->callback([&] {
        std::vector<NamedPoint> pts;
        for (const auto& a : walk_args) pts.push_back(resolver.resolve(a));
        cmd_polygon(opt, std::move(pts), true);
    });

    auto* foucault = app.add_subcommand("foucault", "pendulum precession at a latitude");
    std::string foucault_lat;
    foucault->add_option("latitude", foucault_lat, "latitude in degrees")->required();
    foucault->callback([&] { cmd_foucault(opt, parse_coordinate(foucault_lat, true)); });

    auto* mesh = app.add_subcommand("mesh", "topology report for a polygonal covering");
    std::string mesh_source, mesh_export;
    int mesh_n = 4, mesh_m = 4;
    mesh->add_option("source", mesh_source,
                     "canonical name (tetrahedron, cube, octahedron, icosahedron,"
                     " soccer-ball, torus-grid, genus2-double-torus) or a mesh JSON file")
        ->required();
    mesh->add_option("--n", mesh_n, "torus grid rows")->check(CLI::Range(3, 1000));
    mesh->add_option("--m", mesh_m, "torus grid columns")->check(CLI::Range(3, 1000));
    mesh->add_option("--export", mesh_export, "write the mesh document to this path");
    mesh->callback([&] { cmd_mesh(opt, mesh_source, mesh_n, mesh_m, mesh_export); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
