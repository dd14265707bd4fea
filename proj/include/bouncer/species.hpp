// Species table for the macroscopic regime estimator.
//
// Config file format (BOUNCER_CONFIG or --config): one [label] section per
// species, keys mass_kg and gravity, '#' comments. Example:
//
//   [caesium]
//   mass_kg = 2.2069469e-25
//   gravity = 9.81

#ifndef BOUNCER_SPECIES_HPP
#define BOUNCER_SPECIES_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bouncer {

struct Species {
    std::string label;
    double mass_kg = 0.0;
    double gravity = 9.81;
};

/// CODATA neutron mass; atomic masses from standard atomic weights.
inline std::vector<Species> builtin_species() {
    return {
        {"neutron", 1.67492749804e-27, 9.81},
        {"sodium", 3.81754035e-26, 9.81},    // 22.98976928 u
        {"caesium", 2.20694650e-25, 9.81},   // 132.90545196 u
    };
}

namespace species_detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace species_detail

inline std::vector<Species> parse_species_config(std::istream& in) {
    std::vector<Species> result;
    Species current;
    bool open = false;
    std::string line;
    auto flush = [&] {
        if (!open) return;
        if (!(current.mass_kg > 0.0))
            throw std::runtime_error("species config: [" + current.label +
                                     "] is missing a positive mass_kg");
        result.push_back(current);
        open = false;
    };
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = species_detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            flush();
            current = Species{};
            current.label = species_detail::lower(
                species_detail::trim(line.substr(1, line.size() - 2)));
            open = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || !open)
            throw std::runtime_error("species config: cannot parse line '" + line + "'");
        const std::string key = species_detail::lower(species_detail::trim(line.substr(0, eq)));
        const std::string value = species_detail::trim(line.substr(eq + 1));
        if (key == "mass_kg")
            current.mass_kg = std::stod(value);
        else if (key == "gravity")
            current.gravity = std::stod(value);
        else
            throw std::runtime_error("species config: unknown key '" + key + "'");
    }
    flush();
    return result;
}

inline std::vector<Species> load_species(const std::string& config_path) {
    if (config_path.empty()) return builtin_species();
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("species config: cannot open " + config_path);
    return parse_species_config(in);
}

/// Look a species up by label; accepts the common aliases cs/cesium and na.
inline const Species* find_species(const std::vector<Species>& table,
                                   const std::string& label) {
    std::string key = species_detail::lower(species_detail::trim(label));
    if (key == "cs" || key == "cesium") key = "caesium";
    if (key == "na") key = "sodium";
    for (const auto& s : table)
        if (s.label == key) return &s;
    return nullptr;
}

}  // namespace bouncer

#endif  // BOUNCER_SPECIES_HPP
