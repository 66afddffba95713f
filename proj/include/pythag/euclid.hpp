#pragma once

#include <cstdint>
#include <vector>

namespace pythag::euclid {

// Integer triple with m1 <= m2 < m3 and m1^2 + m2^2 = m3^2 exactly.
struct Triple {
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::uint64_t m3 = 0;

    auto operator<=>(const Triple&) const = default;
};

// sqrt(b^2 + c^2). Negative or non-finite input -> std::domain_error.
double hypotenuse(double b, double c);

// sqrt(b^2 + c^2 - 2bc cos theta), theta in radians, [0, pi].
double law_of_cosines(double b, double c, double theta);

// All triples with m3 <= limit (non-primitive included), lexicographic order.
std::vector<Triple> pythagorean_triples(std::uint64_t limit);

}  // namespace pythag::euclid
