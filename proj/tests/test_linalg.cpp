#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pythag/linalg.hpp"
#include "pythag/rng.hpp"
#include "test_util.hpp"

using namespace pythag;
using linalg::Complex;
using linalg::ComplexFrame;
using linalg::MultiIndex;
using linalg::RealFrame;
using testutil::rel_close;

namespace {

RealFrame random_real_frame(std::mt19937_64& g, int n, int m) {
    std::vector<std::vector<double>> vecs(m, std::vector<double>(n));
    for (auto& v : vecs) {
        for (auto& e : v) e = rng::uniform(g, -2.0, 2.0);
    }
    return RealFrame(n, std::move(vecs));
}

ComplexFrame random_complex_frame(std::mt19937_64& g, int n, int m) {
    std::vector<std::vector<Complex>> vecs(m, std::vector<Complex>(n));
    for (auto& v : vecs) {
        for (auto& e : v) e = {rng::uniform(g, -2.0, 2.0), rng::uniform(g, -2.0, 2.0)};
    }
    return ComplexFrame(n, std::move(vecs));
}

std::vector<double> cross3(const std::vector<double>& a, const std::vector<double>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

TEST_CASE("multiindices enumeration") {
    const auto& i32 = linalg::multiindices(3, 2);
    REQUIRE(i32.size() == 3);
    CHECK(i32[0].idx == std::vector<int>{1, 2});
    CHECK(i32[1].idx == std::vector<int>{1, 3});
    CHECK(i32[2].idx == std::vector<int>{2, 3});

    const auto& full = linalg::multiindices(5, 5);
    REQUIRE(full.size() == 1);
    CHECK(full[0].idx == std::vector<int>{1, 2, 3, 4, 5});

    CHECK(linalg::multiindices(4, 2).size() == 6);  // the six terms of the R^4 area identity
    CHECK_THROWS_AS(linalg::multiindices(2, 3), std::domain_error);
    CHECK_THROWS_AS(linalg::multiindices(3, 0), std::domain_error);
}

TEST_CASE("binomial") {
    CHECK(linalg::binomial(4, 2) == 6);
    CHECK(linalg::binomial(6, 0) == 1);
    CHECK(linalg::binomial(3, 1) == 3);
    CHECK(linalg::binomial(2, 3) == 0);
}

TEST_CASE("frame validation") {
    CHECK_THROWS_AS(RealFrame(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(RealFrame(2, {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(RealFrame(3, {{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(RealFrame(2, {{1.0, std::nan("")}}), std::invalid_argument);
}

TEST_CASE("gram volume") {
    CHECK(rel_close(linalg::gram_volume(RealFrame(3, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}})), 1.0, 1e-15));

    const std::vector<double> v1{1.0, 0.0, 1.0}, v2{0.0, 1.0, 1.0};
    const auto c = cross3(v1, v2);
    const double oracle = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    CHECK(rel_close(linalg::gram_volume(RealFrame(3, {v1, v2})), oracle, 1e-14));
    CHECK(rel_close(oracle, std::sqrt(3.0), 1e-15));

    CHECK(rel_close(linalg::gram_volume(RealFrame(3, {{2.0, 3.0, 6.0}})), 7.0, 1e-15));
    CHECK(linalg::gram_volume(RealFrame(3, {{1.0, 1.0, 0.0}, {2.0, 2.0, 0.0}})) == 0.0);
}

TEST_CASE("m=1 gram volume reproduces the orthogonal norm decomposition") {
    auto g = rng::stream(31, 0);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> v(6);
        double sumsq = 0.0;
        for (auto& e : v) {
            e = rng::uniform(g, -5.0, 5.0);
            sumsq += e * e;
        }
        const double norm = linalg::gram_volume(RealFrame(6, {v}));
        CHECK(rel_close(norm * norm, sumsq, 1e-13));
    }
}

TEST_CASE("complex gram 2m-volume") {
    CHECK(rel_close(linalg::complex_gram_2m_volume(ComplexFrame(2, {{{1.0, 0.0}, {0.0, 0.0}}})), 1.0, 1e-15));
    // ||(1+2i, 3+4i)||^2 = 1 + 4 + 9 + 16 = 30
    CHECK(rel_close(linalg::complex_gram_2m_volume(ComplexFrame(2, {{{1.0, 2.0}, {3.0, 4.0}}})), 30.0,
                    1e-15));
    // orthogonal pair, each of norm sqrt(2): volume 2 * 2 = 4
    const ComplexFrame pair(2, {{{1.0, 1.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, -1.0}}});
    CHECK(rel_close(linalg::complex_gram_2m_volume(pair), 4.0, 1e-15));
}

TEST_CASE("minors") {
    const RealFrame id(3, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
    CHECK(linalg::minor_det(id, MultiIndex{{1, 2}}) == 1.0);

    const RealFrame f(3, {{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}});
    CHECK(linalg::minor_det(f, MultiIndex{{2, 3}}) == -1.0);

    const RealFrame zrow(3, {{1.0, 0.0, 0.0}, {2.0, 0.0, 1.0}});
    CHECK(linalg::minor_det(zrow, MultiIndex{{1, 2}}) == 0.0);

    CHECK_THROWS_AS(linalg::minor_det(f, MultiIndex{{1, 4}}), std::domain_error);
    CHECK_THROWS_AS(linalg::minor_det(f, MultiIndex{{2, 2}}), std::domain_error);
    CHECK_THROWS_AS(linalg::minor_det(f, MultiIndex{{1}}), std::domain_error);
}

TEST_CASE("cauchy-binet: hand example and square case") {
    const RealFrame f(3, {{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}});
    const auto check = linalg::cauchy_binet_residual(f);
    CHECK(rel_close(check.lhs, 3.0, 1e-14));
    CHECK(rel_close(check.rhs, 3.0, 1e-14));
    CHECK(check.residual <= 1e-14);

    const RealFrame square(2, {{1.0, 2.0}, {3.0, 4.0}});
    const auto sq = linalg::cauchy_binet_residual(square);
    CHECK(rel_close(sq.lhs, 4.0, 1e-13));  // det = -2, squared
    CHECK(sq.residual <= 1e-13);
}

TEST_CASE("cauchy-binet: randomized real and complex frames") {
    auto g = rng::stream(32, 0);
    for (int i = 0; i < 1000; ++i) {
        const int n = rng::uniform_int(g, 2, 6);
        const int m = rng::uniform_int(g, 1, n);
        CHECK(linalg::cauchy_binet_residual(random_real_frame(g, n, m)).residual <= 1e-10);
        CHECK(linalg::cauchy_binet_residual(random_complex_frame(g, n, m)).residual <= 1e-10);
    }
}

TEST_CASE("wedge norm") {
    const RealFrame f(3, {{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}});
    CHECK(rel_close(linalg::wedge_norm(f), std::sqrt(3.0), 1e-14));
    CHECK(linalg::wedge_norm(RealFrame(3, {{1.0, 2.0, 0.0}, {2.0, 4.0, 0.0}})) == 0.0);

    // basis blade e1 ^ e2 in R^5
    const RealFrame blade(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
    CHECK(linalg::wedge_norm(blade) == 1.0);
}

TEST_CASE("gram and wedge routes agree on random frames") {
    auto g = rng::stream(33, 0);
    int checked = 0;
    while (checked < 500) {
        const int n = rng::uniform_int(g, 2, 8);
        const int m = rng::uniform_int(g, 1, std::min(4, n));
        const auto f = random_real_frame(g, n, m);
        // Near-collapsed frames push the *relative* comparison beyond what
        // double precision can deliver; keep the volume a sane fraction of
        // the product of the vector norms.
        double norms = 1.0;
        for (const auto& v : f.vectors()) {
            double s = 0.0;
            for (double e : v) s += e * e;
            norms *= std::sqrt(s);
        }
        if (linalg::gram_volume(f) < 1e-2 * norms) continue;
        CHECK(rel_close(linalg::gram_volume(f), linalg::wedge_norm(f), 1e-12));
        ++checked;
    }
}

TEST_CASE("swapping two frame vectors negates minors, preserves volumes") {
    auto g = rng::stream(34, 0);
    for (int i = 0; i < 100; ++i) {
        const int n = rng::uniform_int(g, 3, 6);
        const int m = rng::uniform_int(g, 2, n);
        const auto f = random_real_frame(g, n, m);

        auto vecs = f.vectors();
        std::swap(vecs[0], vecs[1]);
        const RealFrame swapped(n, std::move(vecs));

        for (const auto& I : linalg::multiindices(n, m)) {
            CHECK(linalg::minor_det(swapped, I) == -linalg::minor_det(f, I));
        }
        CHECK(linalg::gram_volume(swapped) == linalg::gram_volume(f));
        CHECK(linalg::wedge_norm(swapped) == linalg::wedge_norm(f));
    }
}

TEST_CASE("realified complex frame carries the 2m-volume") {
    auto g = rng::stream(35, 0);
    for (int i = 0; i < 200; ++i) {
        const int n = rng::uniform_int(g, 1, 4);
        const int m = rng::uniform_int(g, 1, n);
        const auto f = random_complex_frame(g, n, m);
        const auto real = linalg::realify(f);
        CHECK(real.n() == 2 * n);
        CHECK(real.m() == 2 * m);
        CHECK(rel_close(linalg::complex_gram_2m_volume(f), linalg::gram_volume(real), 1e-11));
    }
}
