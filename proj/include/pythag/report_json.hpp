#pragma once

#include <string>

#include "pythag/projections.hpp"
#include "pythag/verify.hpp"

namespace pythag::report_json {

// Numbers carry 17 significant digits so doubles round-trip exactly and the
// bytes are fixed across platforms and thread counts.
std::string format_number(double v);

std::string to_json(const verify::VerifyReport& report);

// Inverse of to_json; lossless round-trip. Throws std::runtime_error on
// malformed input.
verify::VerifyReport verify_report_from_json(const std::string& text);

// kind is "real", "complex-line" or "complex-subspace".
std::string to_json(const proj::ProjectionReport& report, const std::string& kind, int n, int m);

}  // namespace pythag::report_json
