#pragma once

#include <string>
#include <vector>

namespace pythag::cities {

struct City {
    std::string name;
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

// Parses "name, lat, lon" records; '#' starts a comment. Throws
// std::runtime_error on I/O or parse problems.
std::vector<City> load(const std::string& path);

// Case-insensitive lookup; throws std::runtime_error when missing.
const City& find(const std::vector<City>& table, const std::string& name);

}  // namespace pythag::cities
