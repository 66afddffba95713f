#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pythag/parallel.hpp"

namespace pythag::verify {

struct CaseResult {
    std::uint64_t input_digest = 0;  // FNV-1a over the sampled input doubles
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;

    bool operator==(const CaseResult&) const = default;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::uint64_t cases = 0;     // entries actually run ("all" concatenates)
    std::uint64_t failures = 0;  // residual > tolerance
    double max_residual = 0.0;
    std::vector<CaseResult> per_case;

    bool operator==(const VerifyReport&) const = default;
};

// Canonical order; "all" runs everything else in this order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs `cases` randomized checks of the named identity. Unknown suite ->
// std::invalid_argument. Deterministic for fixed (suite, seed, cases),
// independent of mode and thread count.
VerifyReport run_suite(const std::string& suite, std::uint64_t seed, double tolerance,
                       std::uint64_t cases, par::Mode mode = par::default_mode());

}  // namespace pythag::verify
