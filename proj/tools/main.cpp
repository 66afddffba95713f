#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pythag/cities.hpp"
#include "pythag/curved.hpp"
#include "pythag/linalg.hpp"
#include "pythag/parallel.hpp"
#include "pythag/projections.hpp"
#include "pythag/report_json.hpp"
#include "pythag/simplex.hpp"
#include "pythag/verify.hpp"

namespace {

using pythag::report_json::format_number;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct VerifyOpts {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t cases = 1000;
    double tolerance = 1e-9;
    bool serial = false;
};

struct DistanceOpts {
    std::string kind;
    double radius = 0.0;
    bool radius_set = false;
    std::string cities_pair;
    std::string via;
    std::string from;
    std::string to;
    std::vector<double> from_xyz;
    std::vector<double> to_xyz;
    std::string cities_file = "data/cities.txt";
    bool compare = false;
    bool json = false;
};

struct SimplexOpts {
    std::vector<double> legs;
    bool json = false;
};

struct ProjectOpts {
    std::string file;
    bool complex_entries = false;
    double tolerance = 1e-9;
};

bool parse_latlon(const std::string& text, double& lat, double& lon) {
    std::stringstream ss(text);
    char comma = 0;
    return static_cast<bool>(ss >> lat >> comma >> lon) && comma == ',' && ss.eof();
}

int run_verify(const VerifyOpts& o) {
    const auto mode = o.serial ? pythag::par::Mode::serial : pythag::par::default_mode();
    const auto report = pythag::verify::run_suite(o.suite, o.seed, o.tolerance, o.cases, mode);
    std::cout << pythag::report_json::to_json(report) << "\n";
    return report.failures == 0 ? kExitOk : kExitVerifyFailure;
}

pythag::curved::Geometry geometry_from(const DistanceOpts& o) {
    if (o.kind == "euclidean" || o.kind == "flat") return pythag::curved::Geometry::euclidean();
    if (!o.radius_set) throw std::runtime_error("curved geometries need --radius");
    if (o.kind == "sphere" || o.kind == "spherical") return pythag::curved::Geometry::spherical(o.radius);
    return pythag::curved::Geometry::hyperbolic(o.radius);
}

struct NamedPoint {
    std::string label;
    pythag::curved::SurfacePoint point;
};

NamedPoint resolve_point(const DistanceOpts& o, const std::vector<pythag::cities::City>* table,
                         const std::string& spec, const pythag::curved::Geometry& g) {
    double lat = 0.0, lon = 0.0;
    if (parse_latlon(spec, lat, lon)) {
        if (g.kind() != pythag::curved::Kind::spherical) {
            throw std::runtime_error("lat,lon points are only meaningful on the sphere");
        }
        return {spec, pythag::curved::latlon_point(lat, lon, g.radius())};
    }
    if (table == nullptr) throw std::runtime_error("no city table loaded for point: " + spec);
    if (g.kind() != pythag::curved::Kind::spherical) {
        throw std::runtime_error("city points are only meaningful on the sphere");
    }
    const auto& city = pythag::cities::find(*table, spec);
    return {city.name, pythag::curved::latlon_point(city.lat_deg, city.lon_deg, g.radius())};
}

int run_distance(const DistanceOpts& o) {
    const auto g = geometry_from(o);

    std::optional<std::vector<pythag::cities::City>> table;
    NamedPoint from, to;
    std::optional<NamedPoint> via;

    if (!o.cities_pair.empty()) {
        const auto comma = o.cities_pair.find(',');
        if (comma == std::string::npos) throw std::runtime_error("--cities needs two comma-separated names");
        table = pythag::cities::load(o.cities_file);
        from = resolve_point(o, &*table, o.cities_pair.substr(0, comma), g);
        to = resolve_point(o, &*table, o.cities_pair.substr(comma + 1), g);
    } else if (!o.from.empty() && !o.to.empty()) {
        from = resolve_point(o, nullptr, o.from, g);
        to = resolve_point(o, nullptr, o.to, g);
    } else if (o.from_xyz.size() == 3 && o.to_xyz.size() == 3) {
        from = {"from", {{o.from_xyz[0], o.from_xyz[1], o.from_xyz[2]}}};
        to = {"to", {{o.to_xyz[0], o.to_xyz[1], o.to_xyz[2]}}};
    } else {
        throw std::runtime_error("need endpoints: --cities a,b or --from/--to or --from-xyz/--to-xyz");
    }

    if (!o.via.empty()) {
        double lat = 0.0, lon = 0.0;
        if (!parse_latlon(o.via, lat, lon) && !table) table = pythag::cities::load(o.cities_file);
        via = resolve_point(o, table ? &*table : nullptr, o.via, g);
    }
    if (o.compare && !via) throw std::runtime_error("--compare needs --via to define the two legs");

    const double direct = pythag::curved::geodesic_distance(g, from.point, to.point);

    std::string json = "{\"geometry\":\"";
    json += o.kind;
    json += "\"";
    if (o.radius_set) {
        json += ",\"radius\":";
        json += format_number(o.radius);
    }

    if (!via) {
        if (o.json) {
            json += ",\"from\":\"" + from.label + "\",\"to\":\"" + to.label + "\",\"distance\":";
            json += format_number(direct);
            json += "}";
            std::cout << json << "\n";
        } else {
            std::cout << "distance (" << from.label << " to " << to.label << "): " << format_number(direct)
                      << "\n";
        }
        return kExitOk;
    }

    const double leg1 = pythag::curved::geodesic_distance(g, from.point, via->point);
    const double leg2 = pythag::curved::geodesic_distance(g, via->point, to.point);
    const double hyp = pythag::curved::right_hypotenuse(g, leg1, leg2);

    if (o.json) {
        json += ",\"from\":\"" + from.label + "\",\"to\":\"" + to.label + "\",\"via\":\"" + via->label + "\"";
        json += ",\"legs\":[" + format_number(leg1) + "," + format_number(leg2) + "]";
        json += ",\"hypotenuse\":" + format_number(hyp);
        json += ",\"direct\":" + format_number(direct);
        if (o.compare) {
            const double flat = std::hypot(leg1, leg2);
            json += ",\"flat_estimate\":" + format_number(flat);
            json += ",\"discrepancy\":" + format_number(flat - hyp);
        }
        json += "}";
        std::cout << json << "\n";
    } else {
        std::cout << "leg 1 (" << from.label << " to " << via->label << "): " << format_number(leg1) << "\n";
        std::cout << "leg 2 (" << via->label << " to " << to.label << "): " << format_number(leg2) << "\n";
        std::cout << "right-angle hypotenuse: " << format_number(hyp) << "\n";
        std::cout << "direct geodesic: " << format_number(direct) << "\n";
        if (o.compare) {
            const double flat = std::hypot(leg1, leg2);
            std::cout << "flat pythagoras estimate: " << format_number(flat) << "\n";
            std::cout << "discrepancy: " << format_number(flat - hyp) << "\n";
        }
    }
    return kExitOk;
}

int run_simplex(const SimplexOpts& o) {
    const pythag::simplex::RightSimplex s(o.legs);
    const int n = s.n();
    const double v_pyth = pythag::simplex::hypotenusal_volume_pythagoras(s);
    const double v_gram = pythag::simplex::hypotenusal_volume_gram(s);
    const double identity_residual = pythag::linalg::residual_of(v_pyth, v_gram);
    const double closure = pythag::simplex::normal_closure_residual(s);

    if (o.json) {
        std::string json = "{\"n\":" + std::to_string(n) + ",\"legs\":[";
        for (int k = 1; k <= n; ++k) {
            if (k > 1) json += ',';
            json += format_number(s.leg(k));
        }
        json += "],\"leg_face_volumes\":[";
        for (int k = 1; k <= n; ++k) {
            if (k > 1) json += ',';
            json += format_number(pythag::simplex::leg_face_volume(s, k));
        }
        json += "],\"hypotenusal_pythagoras\":" + format_number(v_pyth);
        json += ",\"hypotenusal_gram\":" + format_number(v_gram);
        json += ",\"identity_residual\":" + format_number(identity_residual);
        json += ",\"heights\":[";
        for (int k = 0; k <= n; ++k) {
            if (k > 0) json += ',';
            json += format_number(pythag::simplex::height(s, k));
        }
        json += "],\"volume\":" + format_number(pythag::simplex::volume(s));
        json += ",\"normal_closure_residual\":" + format_number(closure);
        json += "}";
        std::cout << json << "\n";
    } else {
        std::cout << "n: " << n << "\nlegs:";
        for (int k = 1; k <= n; ++k) std::cout << ' ' << format_number(s.leg(k));
        std::cout << "\nleg face volumes:";
        for (int k = 1; k <= n; ++k) std::cout << ' ' << format_number(pythag::simplex::leg_face_volume(s, k));
        std::cout << "\nhypotenusal volume (pythagoras): " << format_number(v_pyth);
        std::cout << "\nhypotenusal volume (gram): " << format_number(v_gram);
        std::cout << "\nface identity residual: " << format_number(identity_residual);
        std::cout << "\nheights:";
        for (int k = 0; k <= n; ++k) std::cout << ' ' << format_number(pythag::simplex::height(s, k));
        std::cout << "\nvolume: " << format_number(pythag::simplex::volume(s));
        std::cout << "\nnormal closure residual: " << format_number(closure) << "\n";
    }
    return kExitOk;
}

int run_project(const ProjectOpts& o) {
    std::ifstream in(o.file);
    if (!in) throw std::runtime_error("cannot open frame file: " + o.file);
    std::stringstream buffer;
    buffer << in.rdbuf();

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("frame file parse error at byte " + std::to_string(e.byte) + ": " +
                                 e.what());
    }

    int n = 0, m = 0;
    nlohmann::json vectors;
    try {
        n = j.at("n").get<int>();
        m = j.at("m").get<int>();
        vectors = j.at("vectors");
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("frame file needs n, m and vectors: ") + e.what());
    }
    if (!vectors.is_array() || static_cast<int>(vectors.size()) != m) {
        throw std::runtime_error("frame file: vectors must be an array of m vectors");
    }

    pythag::proj::ProjectionReport report;
    std::string kind;
    if (o.complex_entries) {
        std::vector<std::vector<pythag::linalg::Complex>> vecs;
        for (const auto& row : vectors) {
            if (!row.is_array() || static_cast<int>(row.size()) != n) {
                throw std::runtime_error("frame file: every vector must have n entries");
            }
            std::vector<pythag::linalg::Complex> v;
            for (const auto& e : row) {
                if (!e.is_array() || e.size() != 2) {
                    throw std::runtime_error("frame file: complex entries are [re, im] pairs");
                }
                v.emplace_back(e[0].get<double>(), e[1].get<double>());
            }
            vecs.push_back(std::move(v));
        }
        const pythag::linalg::ComplexFrame frame(n, std::move(vecs));
        if (frame.m() == 1) {
            report = pythag::proj::complex_line_areas(frame.vec(0));
            kind = "complex-line";
        } else {
            report = pythag::proj::complex_subspace_volumes(frame);
            kind = "complex-subspace";
        }
    } else {
        std::vector<std::vector<double>> vecs;
        for (const auto& row : vectors) {
            if (!row.is_array() || static_cast<int>(row.size()) != n) {
                throw std::runtime_error("frame file: every vector must have n entries");
            }
            std::vector<double> v;
            for (const auto& e : row) v.push_back(e.get<double>());
            vecs.push_back(std::move(v));
        }
        const pythag::linalg::RealFrame frame(n, std::move(vecs));
        report = pythag::proj::real_projection_volumes(frame);
        kind = "real";
    }

    std::cout << pythag::report_json::to_json(report, kind, n, m) << "\n";
    return report.residual <= o.tolerance ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pythagorean identities across geometries: compute, verify, report"};
    app.require_subcommand(1);

    VerifyOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "run a randomized identity suite, JSON report on stdout");
    verify_cmd->add_option("suite", verify_opts.suite, "one of: euclid, spherical, hyperbolic, unified, proper, simplex, degua, projection, corollary, complex-line, complex-subspace, all")
        ->required();
    verify_cmd->add_option("--seed", verify_opts.seed, "RNG seed");
    verify_cmd->add_option("--cases", verify_opts.cases, "randomized cases per suite");
    verify_cmd->add_option("--tolerance", verify_opts.tolerance, "residual tolerance");
    verify_cmd->add_flag("--serial", verify_opts.serial, "run cases on one thread");

    DistanceOpts distance_opts;
    auto* distance_cmd = app.add_subcommand("distance", "geodesic distances and hypotenuse comparisons");
    distance_cmd->add_option("geometry", distance_opts.kind, "sphere|euclidean|hyperbolic")
        ->required()
        ->check(CLI::IsMember({"sphere", "spherical", "euclidean", "flat", "hyperbolic"}));
    auto* radius_opt = distance_cmd->add_option("--radius,-R", distance_opts.radius, "surface (pseudo-)radius");
    distance_cmd->add_option("--cities", distance_opts.cities_pair, "two city names, comma separated");
    distance_cmd->add_option("--via", distance_opts.via, "middle vertex (city or lat,lon)");
    distance_cmd->add_option("--from", distance_opts.from, "start point as lat,lon degrees");
    distance_cmd->add_option("--to", distance_opts.to, "end point as lat,lon degrees");
    distance_cmd->add_option("--from-xyz", distance_opts.from_xyz, "start point, embedding coordinates")
        ->expected(3);
    distance_cmd->add_option("--to-xyz", distance_opts.to_xyz, "end point, embedding coordinates")
        ->expected(3);
    distance_cmd->add_option("--cities-file", distance_opts.cities_file, "city table path");
    distance_cmd->add_flag("--compare", distance_opts.compare, "also print the flat-pythagoras estimate");
    distance_cmd->add_flag("--json", distance_opts.json, "JSON output");

    SimplexOpts simplex_opts;
    auto* simplex_cmd = app.add_subcommand("simplex", "right-corner simplex face volumes and identities");
    simplex_cmd->add_option("legs", simplex_opts.legs, "leg lengths (2 to 20 positive numbers)")
        ->required()
        ->expected(2, 20);
    simplex_cmd->add_flag("--json", simplex_opts.json, "JSON output");

    ProjectOpts project_opts;
    auto* project_cmd = app.add_subcommand("project", "projection-volume report from a JSON frame file");
    project_cmd->add_option("file", project_opts.file, "frame file: {n, m, vectors}")->required();
    project_cmd->add_flag("--complex", project_opts.complex_entries, "entries are [re, im] pairs");
    project_cmd->add_option("--tolerance", project_opts.tolerance, "residual tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    distance_opts.radius_set = radius_opt->count() > 0;

    try {
        if (verify_cmd->parsed()) {
            if (!pythag::verify::is_suite(verify_opts.suite)) {
                std::cerr << "unknown suite: " << verify_opts.suite << "\n";
                return kExitUsage;
            }
            return run_verify(verify_opts);
        }
        if (distance_cmd->parsed()) return run_distance(distance_opts);
        if (simplex_cmd->parsed()) return run_simplex(simplex_opts);
        if (project_cmd->parsed()) return run_project(project_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
