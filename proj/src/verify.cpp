#include "pythag/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pythag/curved.hpp"
#include "pythag/euclid.hpp"
#include "pythag/linalg.hpp"
#include "pythag/oracle.hpp"
#include "pythag/projections.hpp"
#include "pythag/rng.hpp"
#include "pythag/simplex.hpp"

namespace pythag::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t fnv1a(std::uint64_t hash, const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        hash ^= bytes[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

std::uint64_t fnv1a_str(const std::string& s) {
    return fnv1a(14695981039346656037ull, s.data(), s.size());
}

// Draws case inputs and folds every draw into the input digest.
class CaseRng {
public:
    explicit CaseRng(std::mt19937_64 eng) : eng_(eng) {}

    double uniform(double lo, double hi) {
        const double v = rng::uniform(eng_, lo, hi);
        absorb(v);
        return v;
    }

    int uniform_int(int lo, int hi) {
        const int v = rng::uniform_int(eng_, lo, hi);
        absorb(static_cast<double>(v));
        return v;
    }

    std::uint64_t digest() const { return digest_; }

private:
    void absorb(double v) { digest_ = fnv1a(digest_, &v, sizeof v); }

    std::mt19937_64 eng_;
    std::uint64_t digest_ = 14695981039346656037ull;
};

CaseResult make_result(const CaseRng& rng_state, double lhs, double rhs, double extra_residual = 0.0) {
    CaseResult r;
    r.input_digest = rng_state.digest();
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::max(linalg::residual_of(lhs, rhs), extra_residual);
    return r;
}

curved::Geometry draw_geometry(CaseRng& rng, int kind) {
    switch (kind) {
        case 0:
            return curved::Geometry::spherical(rng.uniform(0.5, 3.0));
        case 1:
            return curved::Geometry::euclidean();
        default:
            return curved::Geometry::hyperbolic(rng.uniform(0.5, 3.0));
    }
}

linalg::RealFrame draw_real_frame(CaseRng& rng, int n, int m) {
    std::vector<std::vector<double>> vecs(static_cast<std::size_t>(m),
                                          std::vector<double>(static_cast<std::size_t>(n)));
    for (auto& v : vecs) {
        for (auto& e : v) e = rng.uniform(-2.0, 2.0);
    }
    return linalg::RealFrame(n, std::move(vecs));
}

linalg::ComplexFrame draw_complex_frame(CaseRng& rng, int n, int m) {
    std::vector<std::vector<linalg::Complex>> vecs(static_cast<std::size_t>(m),
                                                   std::vector<linalg::Complex>(static_cast<std::size_t>(n)));
    for (auto& v : vecs) {
        for (auto& e : v) {
            const double re = rng.uniform(-2.0, 2.0);
            const double im = rng.uniform(-2.0, 2.0);
            e = {re, im};
        }
    }
    return linalg::ComplexFrame(n, std::move(vecs));
}

CaseResult case_euclid(CaseRng& rng) {
    const double b = rng.uniform(0.0, 1e6);
    const double c = rng.uniform(0.0, 1e6);
    return make_result(rng, euclid::law_of_cosines(b, c, 0.5 * kPi), euclid::hypotenuse(b, c));
}

CaseResult case_curved_oracle(CaseRng& rng, bool spherical) {
    const double radius = rng.uniform(0.5, 3.0);
    const auto g = spherical ? curved::Geometry::spherical(radius) : curved::Geometry::hyperbolic(radius);
    const double top = spherical ? 1.4 : 2.5;
    const double b = rng.uniform(0.05 * radius, top * radius);
    const double c = rng.uniform(0.05 * radius, top * radius);
    return make_result(rng, curved::right_hypotenuse(g, b, c), oracle::embedded_hypotenuse(g, b, c));
}

CaseResult case_unified(CaseRng& rng) {
    const int kind = rng.uniform_int(0, 2);
    const auto g = draw_geometry(rng, kind);
    const double scale = kind == 1 ? 1.0 : g.radius();
    const double b = rng.uniform(0.05 * scale, 1.4 * scale);
    const double c = rng.uniform(0.05 * scale, 1.4 * scale);
    const double a = curved::right_hypotenuse(g, b, c);
    const double lhs = curved::disk_area(g, a);
    const double rhs = curved::unified_hypotenuse_area(g, curved::disk_area(g, b), curved::disk_area(g, c));
    return make_result(rng, lhs, rhs);
}

CaseResult case_proper(CaseRng& rng) {
    const int kind = rng.uniform_int(0, 2);
    const auto g = draw_geometry(rng, kind);
    const double scale = kind == 1 ? 1.0 : g.radius();
    const double b = rng.uniform(0.05 * scale, 1.4 * scale);
    const double c = rng.uniform(0.05 * scale, 1.4 * scale);
    const double a = curved::proper_hypotenuse(g, b, c);
    const double lhs = curved::disk_area(g, a);
    const double rhs = curved::disk_area(g, b) + curved::disk_area(g, c);
    return make_result(rng, lhs, rhs);
}

CaseResult case_simplex(CaseRng& rng) {
    const int n = rng.uniform_int(2, 8);
    std::vector<double> legs(static_cast<std::size_t>(n));
    for (auto& a : legs) a = rng.uniform(0.5, 2.0);
    const simplex::RightSimplex s(std::move(legs));
    // Face-volume identity against the Gram oracle plus the outward-normal
    // closure, folded into one residual (closure has no suite of its own).
    return make_result(rng, simplex::hypotenusal_volume_pythagoras(s), simplex::hypotenusal_volume_gram(s),
                       simplex::normal_closure_residual(s));
}

CaseResult case_degua(CaseRng& rng) {
    std::vector<double> legs(3);
    for (auto& a : legs) a = rng.uniform(0.3, 3.0);
    const simplex::RightSimplex s(std::move(legs));
    const double a0 = simplex::hypotenusal_volume_gram(s);
    double sumsq = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const double v = simplex::leg_face_volume(s, k);
        sumsq += v * v;
    }
    return make_result(rng, a0 * a0, sumsq);
}

CaseResult case_projection(CaseRng& rng) {
    const int n = rng.uniform_int(2, 8);
    const int m = rng.uniform_int(1, std::min(4, n));
    const auto rep = proj::real_projection_volumes(draw_real_frame(rng, n, m));
    return make_result(rng, rep.identity_lhs, rep.identity_rhs);
}

CaseResult case_corollary(CaseRng& rng) {
    const int n = rng.uniform_int(2, 6);
    const int p = rng.uniform_int(1, n);
    const int m = rng.uniform_int(p, n);
    const auto check = proj::corollary_residual(draw_real_frame(rng, n, p), m);
    return make_result(rng, check.lhs, check.rhs);
}

CaseResult case_complex_line(CaseRng& rng) {
    const int n = rng.uniform_int(1, 8);
    std::vector<linalg::Complex> v(static_cast<std::size_t>(n));
    for (auto& z : v) {
        const double re = rng.uniform(-2.0, 2.0);
        const double im = rng.uniform(-2.0, 2.0);
        z = {re, im};
    }
    v[0] += linalg::Complex{3.0, 0.0};  // keep the vector away from zero
    const auto rep = proj::complex_line_areas(v);
    return make_result(rng, rep.identity_lhs, rep.identity_rhs);
}

CaseResult case_complex_subspace(CaseRng& rng) {
    const int n = rng.uniform_int(2, 6);
    const int m = rng.uniform_int(1, std::min(3, n));
    const auto rep = proj::complex_subspace_volumes(draw_complex_frame(rng, n, m));
    return make_result(rng, rep.identity_lhs, rep.identity_rhs);
}

using CaseFn = CaseResult (*)(CaseRng&);

struct SuiteSpec {
    const char* name;
    CaseFn fn;
};

constexpr SuiteSpec kSuites[] = {
    {"euclid", case_euclid},
    {"spherical", [](CaseRng& r) { return case_curved_oracle(r, true); }},
    {"hyperbolic", [](CaseRng& r) { return case_curved_oracle(r, false); }},
    {"unified", case_unified},
    {"proper", case_proper},
    {"simplex", case_simplex},
    {"degua", case_degua},
    {"projection", case_projection},
    {"corollary", case_corollary},
    {"complex-line", case_complex_line},
    {"complex-subspace", case_complex_subspace},
};

void run_single(const SuiteSpec& spec, std::uint64_t seed, std::uint64_t cases, par::Mode mode,
                VerifyReport& report) {
    const std::uint64_t suite_seed = rng::mix(seed, fnv1a_str(spec.name));
    const std::size_t base = report.per_case.size();
    report.per_case.resize(base + cases);
    par::for_each_index(cases, mode, [&](std::size_t i) {
        CaseRng draws(rng::stream(suite_seed, i));
        CaseResult result;
        try {
            result = spec.fn(draws);
        } catch (const std::exception&) {
            // An in-range draw must never throw; flag it as a hard failure
            // while keeping the report serializable.
            result = CaseResult{draws.digest(), 0.0, 0.0, 1e308};
        }
        report.per_case[base + i] = result;
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : kSuites) out.emplace_back(s.name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

VerifyReport run_suite(const std::string& suite, std::uint64_t seed, double tolerance,
                       std::uint64_t cases, par::Mode mode) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");

    VerifyReport report;
    report.suite = suite;
    report.seed = seed;
    report.tolerance = tolerance;

    if (suite == "all") {
        for (const auto& spec : kSuites) run_single(spec, seed, cases, mode, report);
    } else {
        for (const auto& spec : kSuites) {
            if (suite == spec.name) {
                run_single(spec, seed, cases, mode, report);
                break;
            }
        }
    }

    report.cases = report.per_case.size();
    for (const auto& c : report.per_case) {
        report.max_residual = std::max(report.max_residual, c.residual);
        if (c.residual > tolerance) ++report.failures;
    }
    return report;
}

}  // namespace pythag::verify
