#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pythag/rng.hpp"
#include "pythag/simplex.hpp"
#include "test_util.hpp"

using namespace pythag;
using testutil::rel_close;

namespace {

simplex::RightSimplex random_simplex(std::mt19937_64& g, int n) {
    std::vector<double> legs(n);
    for (auto& a : legs) a = rng::uniform(g, 0.3, 3.0);
    return simplex::RightSimplex(std::move(legs));
}

}  // namespace

TEST_CASE("construction limits") {
    CHECK_THROWS_AS(simplex::RightSimplex({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(simplex::RightSimplex({1.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(simplex::RightSimplex({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(simplex::RightSimplex(std::vector<double>(21, 1.0)), std::invalid_argument);
    CHECK(simplex::RightSimplex(std::vector<double>(20, 1.0)).n() == 20);
}

TEST_CASE("leg face volumes") {
    const simplex::RightSimplex unit({1.0, 1.0, 1.0});
    CHECK(simplex::leg_face_volume(unit, 1) == 0.5);

    const simplex::RightSimplex s({3.0, 4.0, 12.0});
    CHECK(simplex::leg_face_volume(s, 1) == 24.0);
    CHECK(simplex::leg_face_volume(s, 2) == 18.0);
    CHECK(simplex::leg_face_volume(s, 3) == 6.0);

    // n = 2: the faces are the legs themselves
    const simplex::RightSimplex tri({3.0, 4.0});
    CHECK(simplex::leg_face_volume(tri, 1) == 4.0);
    CHECK(simplex::leg_face_volume(tri, 2) == 3.0);

    CHECK_THROWS_AS(simplex::leg_face_volume(s, 0), std::domain_error);
    CHECK_THROWS_AS(simplex::leg_face_volume(s, 4), std::domain_error);
}

TEST_CASE("hypotenusal volume: both routes on named simplexes") {
    const simplex::RightSimplex unit({1.0, 1.0, 1.0});
    CHECK(rel_close(simplex::hypotenusal_volume_gram(unit), std::sqrt(3.0) / 2.0, 1e-14));
    CHECK(rel_close(simplex::hypotenusal_volume_pythagoras(unit), std::sqrt(3.0) / 2.0, 1e-14));

    const simplex::RightSimplex s({3.0, 4.0, 12.0});
    CHECK(rel_close(simplex::hypotenusal_volume_gram(s), 6.0 * std::sqrt(26.0), 1e-13));
    CHECK(rel_close(simplex::hypotenusal_volume_pythagoras(s), std::sqrt(936.0), 1e-14));

    // n = 2 reduction: the machinery reproduces the plane theorem
    const simplex::RightSimplex tri({3.0, 4.0});
    CHECK(rel_close(simplex::hypotenusal_volume_gram(tri), 5.0, 1e-14));
    CHECK(rel_close(simplex::hypotenusal_volume_pythagoras(tri), 5.0, 1e-14));
}

TEST_CASE("heights") {
    const simplex::RightSimplex unit({1.0, 1.0, 1.0});
    CHECK(rel_close(simplex::height(unit, 0), 1.0 / std::sqrt(3.0), 1e-14));

    const simplex::RightSimplex s({3.0, 4.0, 12.0});
    CHECK(rel_close(simplex::height(s, 0), 12.0 / std::sqrt(26.0), 1e-14));
    CHECK(simplex::height(s, 2) == 4.0);
    CHECK_THROWS_AS(simplex::height(s, 4), std::domain_error);
}

TEST_CASE("volume and the height cross-check") {
    const simplex::RightSimplex s({3.0, 4.0, 12.0});
    CHECK(simplex::volume(s) == 24.0);
    CHECK(rel_close(simplex::hypotenusal_volume_gram(s) * simplex::height(s, 0) / 3.0, 24.0, 1e-13));

    CHECK(rel_close(simplex::volume(simplex::RightSimplex({1.0, 1.0, 1.0, 1.0})), 1.0 / 24.0, 1e-15));
    CHECK(simplex::volume(simplex::RightSimplex({3.0, 4.0})) == 6.0);
}

TEST_CASE("height consistency: V_k h_k = n V for every k") {
    auto g = rng::stream(51, 0);
    for (int n = 2; n <= 8; ++n) {
        const auto s = random_simplex(g, n);
        const double nv = n * simplex::volume(s);
        CHECK(rel_close(simplex::hypotenusal_volume_gram(s) * simplex::height(s, 0), nv, 1e-12));
        for (int k = 1; k <= n; ++k) {
            CHECK(rel_close(simplex::leg_face_volume(s, k) * simplex::height(s, k), nv, 1e-12));
        }
    }
}

TEST_CASE("outward normals") {
    const simplex::RightSimplex unit({1.0, 1.0, 1.0});
    const auto normals = simplex::outward_normals(unit);
    REQUIRE(normals.size() == 4);
    for (double c : normals[0]) CHECK(rel_close(c, 1.0 / std::sqrt(3.0), 1e-14));

    const simplex::RightSimplex s({3.0, 4.0, 12.0});
    const auto ns = simplex::outward_normals(s);
    // n_0 proportional to (1/3, 1/4, 1/12)
    CHECK(rel_close(ns[0][0] / ns[0][1], 4.0 / 3.0, 1e-14));
    CHECK(rel_close(ns[0][1] / ns[0][2], 3.0, 1e-14));
    // leg normals are orthogonal coordinate directions
    double dot12 = 0.0, unit1 = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        dot12 += ns[1][j] * ns[2][j];
        unit1 += ns[1][j] * ns[1][j];
    }
    CHECK(dot12 == 0.0);
    CHECK(std::abs(std::sqrt(unit1) - 1.0) <= 1e-14);
    double unit0 = 0.0;
    for (double c : ns[0]) unit0 += c * c;
    CHECK(std::abs(std::sqrt(unit0) - 1.0) <= 1e-14);
}

TEST_CASE("normal closure over random simplexes") {
    auto g = rng::stream(52, 0);
    for (int i = 0; i < 300; ++i) {
        const int n = rng::uniform_int(g, 2, 8);
        CHECK(simplex::normal_closure_residual(random_simplex(g, n)) <= 1e-12);
    }
}

TEST_CASE("two hypotenusal routes agree on random simplexes") {
    auto g = rng::stream(53, 0);
    for (int i = 0; i < 300; ++i) {
        const int n = rng::uniform_int(g, 2, 8);
        const auto s = random_simplex(g, n);
        CHECK(rel_close(simplex::hypotenusal_volume_gram(s), simplex::hypotenusal_volume_pythagoras(s),
                        1e-12));
    }
}

TEST_CASE("power-of-two scaling is exact") {
    auto g = rng::stream(54, 0);
    const auto s = random_simplex(g, 5);
    std::vector<double> doubled = s.legs();
    for (auto& a : doubled) a *= 2.0;
    const simplex::RightSimplex s2(std::move(doubled));

    CHECK(simplex::volume(s2) == 32.0 * simplex::volume(s));  // t^n
    for (int k = 1; k <= 5; ++k) {                            // t^(n-1)
        CHECK(simplex::leg_face_volume(s2, k) == 16.0 * simplex::leg_face_volume(s, k));
    }
    CHECK(simplex::hypotenusal_volume_pythagoras(s2) == 16.0 * simplex::hypotenusal_volume_pythagoras(s));
}
