#pragma once

#include <array>
#include <stdexcept>

namespace pythag::curved {

enum class Kind { spherical, euclidean, hyperbolic };

// Raised when a spherical proper triangle with the requested legs does not
// exist (cos b/R + cos c/R - 1 falls outside [-1, 1]).
class no_proper_triangle : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Constant-curvature surface. K is the Gaussian curvature; for K != 0 the
// (pseudo-)radius is R = 1/sqrt(|K|).
class Geometry {
public:
    static Geometry spherical(double radius);
    static Geometry euclidean();
    static Geometry hyperbolic(double radius);
    static Geometry from_curvature(double curvature);

    Kind kind() const { return kind_; }
    double curvature() const { return curvature_; }
    double radius() const;  // throws std::domain_error for the euclidean plane

private:
    Geometry(Kind kind, double curvature, double radius)
        : kind_(kind), curvature_(curvature), radius_(radius) {}

    Kind kind_;
    double curvature_;
    double radius_;
};

// Embedding coordinates. Conventions:
//   spherical:  ||x|| = R                       (sphere of radius R in R^3)
//   hyperbolic: x0^2 - x1^2 - x2^2 = R^2, x0>0  (upper hyperboloid sheet)
//   euclidean:  plane, x2 = 0 by construction
struct SurfacePoint {
    std::array<double, 3> x{0.0, 0.0, 0.0};
};

bool on_surface(const Geometry& g, const SurfacePoint& p, double rel_tol = 1e-12);

// Spherical embedding of (latitude, longitude) in decimal degrees.
SurfacePoint latlon_point(double lat_deg, double lon_deg, double radius);

// Reference point used by the triangle constructions: (R,0,0) on the curved
// models, the origin on the plane.
SurfacePoint base_point(const Geometry& g);

// Point at arc length s along the geodesic from `from` with unit tangent
// `dir` (dir must be tangent at `from`; unit in the surface metric).
SurfacePoint geodesic_point(const Geometry& g, const SurfacePoint& from,
                            const std::array<double, 3>& dir, double s);

// Geodesic distance:
//   spherical:  R * arccos(<p,q>/R^2)           (evaluated via atan2)
//   hyperbolic: R * arccosh(<p,q>_Minkowski/R^2)
//   euclidean:  ||p - q||
double geodesic_distance(const Geometry& g, const SurfacePoint& p, const SurfacePoint& q);

// Hypotenuse of the right triangle with legs b, c:
//   spherical:  cos a/R  = cos b/R  * cos c/R
//   hyperbolic: cosh a/R = cosh b/R * cosh c/R
//   euclidean:  a^2 = b^2 + c^2
// second_branch (spherical only) selects the reflex great-circle root
// 2*pi*R - a instead of the principal a in (0, pi*R).
double right_hypotenuse(const Geometry& g, double b, double c, bool second_branch = false);

// Hypotenuse of the proper triangle (one angle equal to the sum of the
// others) with legs b, c:
//   spherical:  1 + cos a/R  = cos b/R  + cos c/R
//   hyperbolic: 1 + cosh a/R = cosh b/R + cosh c/R
//   euclidean:  a^2 = b^2 + c^2
double proper_hypotenuse(const Geometry& g, double b, double c);

// Geodesic disk area: 2*pi*R^2*(1 - cos r/R), pi*r^2, 2*pi*R^2*(cosh r/R - 1).
double disk_area(const Geometry& g, double r);

// A1 + A2 - K/(2 pi) * A1 * A2; reduces to A1 + A2 at K = 0.
double unified_hypotenuse_area(const Geometry& g, double a1, double a2);

// Sides: a = d(v[1], v[2]) opposite the distinguished vertex v[0];
// b = d(v[0], v[1]); c = d(v[0], v[2]).
struct GeodesicTriangle {
    Geometry geom;
    std::array<SurfacePoint, 3> v;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// Checks that the stored sides match the vertex distances (1e-10 relative)
// and that spherical sides stay below pi*R. Throws std::domain_error.
void validate_triangle(const GeodesicTriangle& t);

// Right angle at the distinguished vertex; legs b, c along orthogonal
// geodesics from it.
GeodesicTriangle build_right_triangle(const Geometry& g, double b, double c);

// General three-side construction (law of cosines at the distinguished
// vertex). Throws std::domain_error when the sides close no triangle.
GeodesicTriangle triangle_from_sides(const Geometry& g, double a, double b, double c);

struct TriangleAngles {
    double alpha = 0.0;  // at the distinguished vertex
    double beta = 0.0;
    double gamma = 0.0;
};

// Vertex angles from normalized geodesic tangents. Degenerate (zero-length
// side) triangles throw std::domain_error.
TriangleAngles triangle_angles(const GeodesicTriangle& t);

}  // namespace pythag::curved
