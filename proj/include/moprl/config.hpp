#pragma once

#include "moprl/measure.hpp"
#include "moprl/multi_index.hpp"
#include "moprl/polynomial.hpp"
#include "moprl/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace moprl {

// Config/usage problem: bad file, bad field, violated hypothesis. Maps to
// exit code 3 in the CLI.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

struct MeasureSpec {
    std::vector<std::pair<Rational, Rational>> atoms;  // (point, weight)
    std::optional<Interval> interval;
};

struct SystemSpec {
    SystemKind kind = SystemKind::Explicit;
    std::vector<MeasureSpec> measures;  // explicit / angelesco / AT base
    std::vector<Rational> poles;        // AT only
    std::vector<MeasureSpec> sigmas;    // Nikishin only
};

// Command-specific options; every key is validated at parse time, unknown
// keys are rejected.
struct ConfigOptions {
    std::optional<int> kmax;
    std::optional<Rational> width;
    std::optional<std::string> criterion;
    std::optional<int> trials;
    std::optional<int> count;
    std::optional<int> j;
    std::optional<int> l;
    std::optional<int> k;
    std::optional<std::string> type;
    std::optional<std::vector<int>> path_start;
    std::optional<std::vector<int>> path_steps;
    std::optional<std::vector<Rational>> q;
    std::optional<int> precision;
};

struct RunConfig {
    SystemSpec system;
    std::vector<MultiIndex> indices;
    uint64_t seed = 0;
    ConfigOptions options;
};

// Rationals are carried as strings ("p/q"); the parser rejects any JSON
// float, any non-string rational, and any unknown field, with field-path
// diagnostics.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

MeasureSystem build_system(const SystemSpec& spec);

// Canonical serialization of the system (atoms sorted, rationals canonical);
// identical systems fingerprint identically.
std::string canonical_system_string(const SystemSpec& spec);
std::string system_fingerprint(const SystemSpec& spec);

}  // namespace moprl
