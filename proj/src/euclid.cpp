#include "pythag/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pythag::euclid {

namespace {

void require_leg(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string("leg ") + name + " must be finite and >= 0");
    }
}

// Floor of sqrt(x) in exact integer arithmetic.
std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

double hypotenuse(double b, double c) {
    require_leg(b, "b");
    require_leg(c, "c");
    return std::hypot(b, c);
}

double law_of_cosines(double b, double c, double theta) {
    require_leg(b, "b");
    require_leg(c, "c");
    if (!(theta >= 0.0 && theta <= 4.0 * std::atan(1.0))) {
        throw std::domain_error("angle must lie in [0, pi]");
    }
    const double sq = b * b + c * c - 2.0 * b * c * std::cos(theta);
    return std::sqrt(std::max(sq, 0.0));
}

std::vector<Triple> pythagorean_triples(std::uint64_t limit) {
    std::vector<Triple> out;
    // Scan (m2, m3) pairs and recover m1 by exact integer square root; this
    // stays an exhaustive scan (no parametrization) but skips the cubic loop.
    for (std::uint64_t m3 = 5; m3 <= limit; ++m3) {
        for (std::uint64_t m2 = 1; m2 < m3; ++m2) {
            const std::uint64_t rest = m3 * m3 - m2 * m2;
            const std::uint64_t m1 = isqrt(rest);
            if (m1 * m1 == rest && m1 >= 1 && m1 <= m2) {
                out.push_back({m1, m2, m3});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pythag::euclid
