#pragma once

// Plain key = value configuration for the verification suite.  Unknown keys,
// duplicate keys, and malformed lines are hard errors that carry the line
// number; missing keys fall back to the defaults below, so an empty file (or
// no file at all) configures the standard desk-scale run.

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace colorice {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int max_palette = 3;       // palette sizes 1..max_palette
    int max_rank = 3;          // row counts 1..max_rank
    long long max_mu = 6;      // largest allowed top part of mu
    int max_n = 3;             // largest residue modulus / substitution degree
    long long max_weight = 4;  // largest |lambda| in the character grids
    long long energy_bound = 8;
    int degree_bound = 3;      // spectral-series truncation degree
    int commutator_range = 3;  // current indices 1..commutator_range
    int braid_degree = 6;      // total monomial degree for operator relations
    bool run_twists = true;
    bool run_fock = true;
};

namespace detail {

inline std::string config_trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline long long config_int(const std::string& value, int line, const std::string& key) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != value.size())
        throw ConfigError("line " + std::to_string(line) + ": expected an integer for '" +
                          key + "', got '" + value + "'");
    return v;
}

inline bool config_bool(const std::string& value, int line, const std::string& key) {
    if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "off" || value == "no") return false;
    throw ConfigError("line " + std::to_string(line) + ": expected a boolean for '" + key +
                      "', got '" + value + "'");
}

}  // namespace detail

inline Config parse_config(std::istream& in) {
    Config cfg;
    std::map<std::string, int> seen;  // key -> first line
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::config_trim(raw);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        std::string key = detail::config_trim(s.substr(0, eq));
        std::string value = detail::config_trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        auto [it, fresh] = seen.emplace(key, line);
        if (!fresh)
            throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + key +
                              "' (first set on line " + std::to_string(it->second) + ")");

        auto want_positive = [&](long long v, long long lo) {
            if (v < lo)
                throw ConfigError("line " + std::to_string(line) + ": '" + key +
                                  "' must be at least " + std::to_string(lo));
            return v;
        };
        if (key == "max_palette")
            cfg.max_palette = static_cast<int>(want_positive(detail::config_int(value, line, key), 1));
        else if (key == "max_rank")
            cfg.max_rank = static_cast<int>(want_positive(detail::config_int(value, line, key), 1));
        else if (key == "max_mu")
            cfg.max_mu = want_positive(detail::config_int(value, line, key), 0);
        else if (key == "max_n")
            cfg.max_n = static_cast<int>(want_positive(detail::config_int(value, line, key), 1));
        else if (key == "max_weight")
            cfg.max_weight = want_positive(detail::config_int(value, line, key), 0);
        else if (key == "energy_bound")
            cfg.energy_bound = want_positive(detail::config_int(value, line, key), 0);
        else if (key == "degree_bound")
            cfg.degree_bound = static_cast<int>(want_positive(detail::config_int(value, line, key), 0));
        else if (key == "commutator_range")
            cfg.commutator_range = static_cast<int>(want_positive(detail::config_int(value, line, key), 0));
        else if (key == "braid_degree")
            cfg.braid_degree = static_cast<int>(want_positive(detail::config_int(value, line, key), 0));
        else if (key == "run_twists")
            cfg.run_twists = detail::config_bool(value, line, key);
        else if (key == "run_fock")
            cfg.run_fock = detail::config_bool(value, line, key);
        else
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    return cfg;
}

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace colorice
