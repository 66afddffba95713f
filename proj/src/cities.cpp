#include "pythag/cities.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pythag::cities {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

std::vector<City> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open city table: " + path);

    std::vector<City> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        std::stringstream ss(line);
        std::string name, lat, lon;
        if (!std::getline(ss, name, ',') || !std::getline(ss, lat, ',') || !std::getline(ss, lon)) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected name, lat, lon");
        }
        City city;
        city.name = lower(trim(name));
        try {
            city.lat_deg = std::stod(trim(lat));
            city.lon_deg = std::stod(trim(lon));
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad coordinate");
        }
        if (city.name.empty()) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty city name");
        }
        out.push_back(std::move(city));
    }
    return out;
}

const City& find(const std::vector<City>& table, const std::string& name) {
    const std::string key = lower(name);
    for (const auto& c : table) {
        if (c.name == key) return c;
    }
    throw std::runtime_error("unknown city: " + name);
}

}  // namespace pythag::cities
