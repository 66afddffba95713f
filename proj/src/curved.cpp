#include "pythag/curved.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace pythag::curved {

namespace {

constexpr double kPi = std::numbers::pi;

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double mdot(const Vec3& a, const Vec3& b) { return a[0] * b[0] - a[1] * b[1] - a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require_length(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be finite and >= 0");
    }
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// 1 - cos(x), evaluated as 2 sin^2(x/2); exact cancellation-free versine.
double versine(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

// cosh(x) - 1, evaluated as 2 sinh^2(x/2).
double hversine(double x) {
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s;
}

// Inverse of versine: arc with 1 - cos(arc) = u, u in [0, 2].
double arc_from_versine(double u) { return 2.0 * std::asin(std::sqrt(clamp_unit(0.5 * u))); }

// Inverse of hversine: arccosh(1 + u) for u >= 0.
double arc_from_hversine(double u) { return 2.0 * std::asinh(std::sqrt(std::max(0.5 * u, 0.0))); }

void check_spherical_leg(const Geometry& g, double leg, const char* what) {
    if (g.kind() == Kind::spherical && !(leg < kPi * g.radius())) {
        throw std::domain_error(std::string(what) + " must stay below pi*R on the sphere");
    }
}

}  // namespace

Geometry Geometry::spherical(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::domain_error("radius must be finite and > 0");
    return Geometry(Kind::spherical, 1.0 / (radius * radius), radius);
}

Geometry Geometry::euclidean() { return Geometry(Kind::euclidean, 0.0, 0.0); }

Geometry Geometry::hyperbolic(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::domain_error("radius must be finite and > 0");
    return Geometry(Kind::hyperbolic, -1.0 / (radius * radius), radius);
}

Geometry Geometry::from_curvature(double curvature) {
    if (!std::isfinite(curvature)) throw std::domain_error("curvature must be finite");
    if (curvature == 0.0) return euclidean();
    const double radius = 1.0 / std::sqrt(std::abs(curvature));
    return curvature > 0.0 ? spherical(radius) : hyperbolic(radius);
}

double Geometry::radius() const {
    if (kind_ == Kind::euclidean) throw std::domain_error("the euclidean plane has no radius");
    return radius_;
}

bool on_surface(const Geometry& g, const SurfacePoint& p, double rel_tol) {
    for (double c : p.x) {
        if (!std::isfinite(c)) return false;
    }
    switch (g.kind()) {
        case Kind::spherical:
            return std::abs(norm(p.x) / g.radius() - 1.0) <= rel_tol;
        case Kind::hyperbolic: {
            if (!(p.x[0] > 0.0)) return false;
            const double r2 = g.radius() * g.radius();
            // |Q(p) - R^2| measured against the squared coordinate scale:
            // Q is a difference of squares, so that is the attainable check.
            const double scale = std::max(r2, dot(p.x, p.x));
            return std::abs(mdot(p.x, p.x) - r2) <= rel_tol * scale;
        }
        case Kind::euclidean:
            return true;
    }
    return false;
}

SurfacePoint latlon_point(double lat_deg, double lon_deg, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::domain_error("radius must be finite and > 0");
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0)) throw std::domain_error("latitude must lie in [-90, 90]");
    if (!(lon_deg >= -180.0 && lon_deg <= 180.0)) throw std::domain_error("longitude must lie in [-180, 180]");
    const double lat = lat_deg * kPi / 180.0;
    const double lon = lon_deg * kPi / 180.0;
    return SurfacePoint{{radius * std::cos(lat) * std::cos(lon), radius * std::cos(lat) * std::sin(lon),
                         radius * std::sin(lat)}};
}

SurfacePoint base_point(const Geometry& g) {
    if (g.kind() == Kind::euclidean) return SurfacePoint{};
    return SurfacePoint{{g.radius(), 0.0, 0.0}};
}

SurfacePoint geodesic_point(const Geometry& g, const SurfacePoint& from, const Vec3& dir, double s) {
    switch (g.kind()) {
        case Kind::spherical: {
            const double r = g.radius();
            const double ca = std::cos(s / r), sa = std::sin(s / r);
            return SurfacePoint{{from.x[0] * ca + r * dir[0] * sa, from.x[1] * ca + r * dir[1] * sa,
                                 from.x[2] * ca + r * dir[2] * sa}};
        }
        case Kind::hyperbolic: {
            const double r = g.radius();
            const double ch = std::cosh(s / r), sh = std::sinh(s / r);
            return SurfacePoint{{from.x[0] * ch + r * dir[0] * sh, from.x[1] * ch + r * dir[1] * sh,
                                 from.x[2] * ch + r * dir[2] * sh}};
        }
        case Kind::euclidean:
            return SurfacePoint{{from.x[0] + s * dir[0], from.x[1] + s * dir[1], from.x[2] + s * dir[2]}};
    }
    return {};
}

double geodesic_distance(const Geometry& g, const SurfacePoint& p, const SurfacePoint& q) {
    if (!on_surface(g, p) || !on_surface(g, q)) {
        throw std::domain_error("point does not satisfy the surface invariant");
    }
    switch (g.kind()) {
        case Kind::spherical:
            // atan2 form of R*arccos(<p,q>/R^2): well conditioned at both ends.
            return g.radius() * std::atan2(norm(cross(p.x, q.x)), dot(p.x, q.x));
        case Kind::hyperbolic: {
            // <p,q>_M/R^2 - 1 == -Q(p-q)/(2R^2), cancellation-free from the
            // coordinate differences.
            const Vec3 d = sub(p.x, q.x);
            const double r2 = g.radius() * g.radius();
            const double u = std::max((d[1] * d[1] + d[2] * d[2] - d[0] * d[0]) / (2.0 * r2), 0.0);
            return g.radius() * arc_from_hversine(u);
        }
        case Kind::euclidean:
            return norm(sub(p.x, q.x));
    }
    return 0.0;
}

double right_hypotenuse(const Geometry& g, double b, double c, bool second_branch) {
    require_length(b, "leg b");
    require_length(c, "leg c");
    check_spherical_leg(g, b, "leg b");
    check_spherical_leg(g, c, "leg c");
    if (second_branch && g.kind() != Kind::spherical) {
        throw std::domain_error("the second hypotenuse branch exists only on the sphere");
    }
    switch (g.kind()) {
        case Kind::spherical: {
            const double r = g.radius();
            const double vb = versine(b / r), vc = versine(c / r);
            // ver(a/R) = 1 - cos(b/R)cos(c/R) = vb + vc - vb*vc
            const double a = r * arc_from_versine(vb + vc - vb * vc);
            return second_branch ? 2.0 * kPi * r - a : a;
        }
        case Kind::hyperbolic: {
            const double r = g.radius();
            const double hb = hversine(b / r), hc = hversine(c / r);
            // hver(a/R) = cosh(b/R)cosh(c/R) - 1 = hb + hc + hb*hc
            return r * arc_from_hversine(hb + hc + hb * hc);
        }
        case Kind::euclidean:
            return std::hypot(b, c);
    }
    return 0.0;
}

double proper_hypotenuse(const Geometry& g, double b, double c) {
    require_length(b, "leg b");
    require_length(c, "leg c");
    check_spherical_leg(g, b, "leg b");
    check_spherical_leg(g, c, "leg c");
    switch (g.kind()) {
        case Kind::spherical: {
            const double r = g.radius();
            // ver(a/R) = ver(b/R) + ver(c/R); no solution once the sum
            // exceeds 2 (i.e. cos b/R + cos c/R - 1 < -1).
            double u = versine(b / r) + versine(c / r);
            if (u > 2.0 + 1e-12) {
                throw no_proper_triangle("no spherical proper triangle with these legs");
            }
            u = std::min(u, 2.0);
            return r * arc_from_versine(u);
        }
        case Kind::hyperbolic: {
            const double r = g.radius();
            return r * arc_from_hversine(hversine(b / r) + hversine(c / r));
        }
        case Kind::euclidean:
            return std::hypot(b, c);
    }
    return 0.0;
}

double disk_area(const Geometry& g, double r) {
    require_length(r, "disk radius");
    switch (g.kind()) {
        case Kind::spherical: {
            const double rad = g.radius();
            if (!(r <= kPi * rad)) throw std::domain_error("spherical disk radius must stay within pi*R");
            return 2.0 * kPi * rad * rad * versine(r / rad);
        }
        case Kind::hyperbolic: {
            const double rad = g.radius();
            return 2.0 * kPi * rad * rad * hversine(r / rad);
        }
        case Kind::euclidean:
            return kPi * r * r;
    }
    return 0.0;
}

double unified_hypotenuse_area(const Geometry& g, double a1, double a2) {
    require_length(a1, "disk area A1");
    require_length(a2, "disk area A2");
    if (g.kind() == Kind::spherical) {
        const double full = 4.0 * kPi * g.radius() * g.radius();
        if (a1 > full || a2 > full) {
            throw std::domain_error("area exceeds the sphere's total area");
        }
    }
    return a1 + a2 - g.curvature() / (2.0 * kPi) * a1 * a2;
}

namespace {

// Unit tangents at base_point spanning the construction plane. On curved
// models coordinate 0 is the radial/timelike axis, so (0,1,0) and (0,0,1)
// are tangent; the plane uses its own first two axes.
Vec3 base_dir(const Geometry& g, double angle) {
    if (g.kind() == Kind::euclidean) return {std::cos(angle), std::sin(angle), 0.0};
    return {0.0, std::cos(angle), std::sin(angle)};
}

// Initial unit tangent at v of the geodesic toward p (surface metric).
Vec3 tangent_toward(const Geometry& g, const SurfacePoint& v, const SurfacePoint& p) {
    Vec3 t{};
    double len = 0.0;
    switch (g.kind()) {
        case Kind::spherical: {
            const double r2 = g.radius() * g.radius();
            const double proj = dot(v.x, p.x) / r2;
            t = {p.x[0] - proj * v.x[0], p.x[1] - proj * v.x[1], p.x[2] - proj * v.x[2]};
            len = norm(t);
            break;
        }
        case Kind::hyperbolic: {
            const double r2 = g.radius() * g.radius();
            const double proj = mdot(v.x, p.x) / r2;
            t = {p.x[0] - proj * v.x[0], p.x[1] - proj * v.x[1], p.x[2] - proj * v.x[2]};
            len = std::sqrt(std::max(-mdot(t, t), 0.0));
            break;
        }
        case Kind::euclidean:
            t = sub(p.x, v.x);
            len = norm(t);
            break;
    }
    if (!(len > 0.0)) throw std::domain_error("degenerate triangle: coincident or antipodal vertices");
    return {t[0] / len, t[1] / len, t[2] / len};
}

double vertex_angle(const Geometry& g, const SurfacePoint& v, const SurfacePoint& p, const SurfacePoint& q) {
    const Vec3 tp = tangent_toward(g, v, p);
    const Vec3 tq = tangent_toward(g, v, q);
    const double c = g.kind() == Kind::hyperbolic ? -mdot(tp, tq) : dot(tp, tq);
    return std::acos(clamp_unit(c));
}

}  // namespace

void validate_triangle(const GeodesicTriangle& t) {
    const double sides[3] = {t.a, t.b, t.c};
    const double dists[3] = {geodesic_distance(t.geom, t.v[1], t.v[2]),
                             geodesic_distance(t.geom, t.v[0], t.v[1]),
                             geodesic_distance(t.geom, t.v[0], t.v[2])};
    for (int i = 0; i < 3; ++i) {
        const double scale = std::max({std::abs(sides[i]), std::abs(dists[i]), 1e-30});
        if (std::abs(sides[i] - dists[i]) > 1e-10 * scale) {
            throw std::domain_error("triangle sides do not match vertex distances");
        }
        if (t.geom.kind() == Kind::spherical && !(sides[i] < kPi * t.geom.radius())) {
            throw std::domain_error("spherical triangle sides must stay below pi*R");
        }
    }
}

GeodesicTriangle build_right_triangle(const Geometry& g, double b, double c) {
    require_length(b, "leg b");
    require_length(c, "leg c");
    check_spherical_leg(g, b, "leg b");
    check_spherical_leg(g, c, "leg c");
    const SurfacePoint a0 = base_point(g);
    const SurfacePoint vb = geodesic_point(g, a0, base_dir(g, 0.0), b);
    const SurfacePoint vc = geodesic_point(g, a0, base_dir(g, 0.5 * kPi), c);
    return GeodesicTriangle{g, {a0, vb, vc}, geodesic_distance(g, vb, vc), b, c};
}

GeodesicTriangle triangle_from_sides(const Geometry& g, double a, double b, double c) {
    require_length(a, "side a");
    require_length(b, "side b");
    require_length(c, "side c");
    if (!(b > 0.0 && c > 0.0)) throw std::domain_error("legs must be positive to place the triangle");
    check_spherical_leg(g, a, "side a");
    check_spherical_leg(g, b, "side b");
    check_spherical_leg(g, c, "side c");
    double cos_alpha = 0.0;
    switch (g.kind()) {
        case Kind::spherical: {
            const double r = g.radius();
            cos_alpha = (std::cos(a / r) - std::cos(b / r) * std::cos(c / r)) /
                        (std::sin(b / r) * std::sin(c / r));
            break;
        }
        case Kind::hyperbolic: {
            const double r = g.radius();
            cos_alpha = (std::cosh(b / r) * std::cosh(c / r) - std::cosh(a / r)) /
                        (std::sinh(b / r) * std::sinh(c / r));
            break;
        }
        case Kind::euclidean:
            cos_alpha = (b * b + c * c - a * a) / (2.0 * b * c);
            break;
    }
    if (std::abs(cos_alpha) > 1.0 + 1e-9) {
        throw std::domain_error("sides do not close a triangle in this geometry");
    }
    const double alpha = std::acos(clamp_unit(cos_alpha));
    const SurfacePoint a0 = base_point(g);
    const SurfacePoint vb = geodesic_point(g, a0, base_dir(g, 0.0), b);
    const SurfacePoint vc = geodesic_point(g, a0, base_dir(g, alpha), c);
    return GeodesicTriangle{g, {a0, vb, vc}, a, b, c};
}

TriangleAngles triangle_angles(const GeodesicTriangle& t) {
    validate_triangle(t);
    if (!(t.a > 0.0 && t.b > 0.0 && t.c > 0.0)) {
        throw std::domain_error("degenerate triangle: zero-length side");
    }
    return TriangleAngles{vertex_angle(t.geom, t.v[0], t.v[1], t.v[2]),
                          vertex_angle(t.geom, t.v[1], t.v[0], t.v[2]),
                          vertex_angle(t.geom, t.v[2], t.v[0], t.v[1])};
}

}  // namespace pythag::curved
