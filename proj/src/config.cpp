#include "moprl/config.hpp"

#include "moprl/records.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace moprl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path + ": " + message);
}

void reject_floats(const json& node, const std::string& path) {
    if (node.is_number_float()) {
        fail(path, "floating-point literals are not accepted; use rational strings");
    }
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) reject_floats(value, path + "." + key);
    } else if (node.is_array()) {
        size_t i = 0;
        for (const auto& value : node) reject_floats(value, path + "[" + std::to_string(i++) + "]");
    }
}

void check_keys(const json& node, const std::set<std::string>& allowed, const std::string& path) {
    for (const auto& [key, value] : node.items()) {
        (void)value;
        if (!allowed.contains(key)) fail(path, "unknown field '" + key + "'");
    }
}

Rational parse_rational(const json& node, const std::string& path) {
    if (node.is_number_integer()) return Rational(node.get<long>());
    if (!node.is_string()) fail(path, "expected a rational string");
    try {
        return rational_from_string(node.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

int parse_int(const json& node, const std::string& path) {
    if (!node.is_number_integer()) fail(path, "expected an integer");
    return node.get<int>();
}

std::vector<int> parse_int_list(const json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected a list of integers");
    std::vector<int> out;
    size_t i = 0;
    for (const auto& value : node) out.push_back(parse_int(value, path + "[" + std::to_string(i++) + "]"));
    return out;
}

MeasureSpec parse_measure(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected a measure object");
    check_keys(node, {"atoms", "interval"}, path);
    if (!node.contains("atoms")) fail(path, "missing 'atoms'");
    MeasureSpec spec;
    const json& atoms = node["atoms"];
    if (!atoms.is_array()) fail(path + ".atoms", "expected a list of [point, weight] pairs");
    size_t i = 0;
    for (const auto& pair : atoms) {
        std::string apath = path + ".atoms[" + std::to_string(i++) + "]";
        if (!pair.is_array() || pair.size() != 2) fail(apath, "expected a [point, weight] pair");
        spec.atoms.emplace_back(parse_rational(pair[0], apath + ".point"),
                                parse_rational(pair[1], apath + ".weight"));
    }
    if (node.contains("interval")) {
        const json& iv = node["interval"];
        if (!iv.is_array() || iv.size() != 2) fail(path + ".interval", "expected [lo, hi]");
        Rational lo = parse_rational(iv[0], path + ".interval.lo");
        Rational hi = parse_rational(iv[1], path + ".interval.hi");
        if (lo >= hi) fail(path + ".interval", "needs lo < hi");
        spec.interval = Interval(std::move(lo), std::move(hi));
    }
    return spec;
}

SystemKind parse_kind(const json& node, const std::string& path) {
    if (!node.is_string()) fail(path, "expected a kind string");
    const std::string kind = node.get<std::string>();
    if (kind == "explicit") return SystemKind::Explicit;
    if (kind == "angelesco") return SystemKind::Angelesco;
    if (kind == "at_cauchy_vandermonde") return SystemKind::ATCauchyVandermonde;
    if (kind == "nikishin") return SystemKind::Nikishin;
    fail(path, "unknown system kind '" + kind + "'");
}

SystemSpec parse_system(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected a system object");
    check_keys(node, {"kind", "measures", "poles", "sigmas"}, path);
    if (!node.contains("kind")) fail(path, "missing 'kind'");
    SystemSpec spec;
    spec.kind = parse_kind(node["kind"], path + ".kind");

    const bool wants_sigmas = spec.kind == SystemKind::Nikishin;
    const bool wants_poles = spec.kind == SystemKind::ATCauchyVandermonde;
    if (node.contains("sigmas") != wants_sigmas) {
        fail(path, wants_sigmas ? "nikishin systems need 'sigmas'" : "'sigmas' only applies to nikishin");
    }
    if (node.contains("poles") != wants_poles) {
        fail(path, wants_poles ? "AT systems need 'poles'" : "'poles' only applies to AT systems");
    }
    if (wants_sigmas) {
        size_t i = 0;
        for (const auto& entry : node["sigmas"]) {
            spec.sigmas.push_back(parse_measure(entry, path + ".sigmas[" + std::to_string(i++) + "]"));
        }
    } else {
        if (!node.contains("measures")) fail(path, "missing 'measures'");
        size_t i = 0;
        for (const auto& entry : node["measures"]) {
            spec.measures.push_back(
                parse_measure(entry, path + ".measures[" + std::to_string(i++) + "]"));
        }
    }
    if (wants_poles) {
        size_t i = 0;
        for (const auto& entry : node["poles"]) {
            spec.poles.push_back(parse_rational(entry, path + ".poles[" + std::to_string(i++) + "]"));
        }
        if (spec.measures.size() != 1) fail(path, "AT systems carry exactly one base measure");
    }
    return spec;
}

std::vector<MultiIndex> parse_indices(const json& node, const std::string& path) {
    std::vector<MultiIndex> indices;
    if (node.is_object()) {
        check_keys(node, {"grid"}, path);
        if (!node.contains("grid")) fail(path, "expected 'grid' bounds");
        std::vector<int> bounds = parse_int_list(node["grid"], path + ".grid");
        if (bounds.empty()) fail(path + ".grid", "empty grid bounds");
        for (int b : bounds) {
            if (b < 0) fail(path + ".grid", "negative grid bound");
        }
        // lexicographic enumeration of the full rectangle
        std::vector<int> current(bounds.size(), 0);
        while (true) {
            indices.emplace_back(current);
            size_t pos = bounds.size();
            while (pos-- > 0) {
                if (++current[pos] <= bounds[pos]) break;
                current[pos] = 0;
                if (pos == 0) return indices;
            }
        }
    }
    if (!node.is_array()) fail(path, "expected an index list or {\"grid\": [...]}");
    size_t i = 0;
    for (const auto& entry : node) {
        std::vector<int> parts = parse_int_list(entry, path + "[" + std::to_string(i++) + "]");
        for (int v : parts) {
            if (v < 0) fail(path, "negative index part");
        }
        indices.emplace_back(std::move(parts));
    }
    return indices;
}

ConfigOptions parse_options(const json& node, const std::string& path) {
    check_keys(node,
               {"kmax", "width", "criterion", "trials", "count", "j", "l", "k", "type",
                "path_start", "path_steps", "q", "precision"},
               path);
    ConfigOptions options;
    if (node.contains("kmax")) options.kmax = parse_int(node["kmax"], path + ".kmax");
    if (node.contains("width")) options.width = parse_rational(node["width"], path + ".width");
    if (node.contains("criterion")) {
        if (!node["criterion"].is_string()) fail(path + ".criterion", "expected a string");
        options.criterion = node["criterion"].get<std::string>();
    }
    if (node.contains("trials")) options.trials = parse_int(node["trials"], path + ".trials");
    if (node.contains("count")) options.count = parse_int(node["count"], path + ".count");
    if (node.contains("j")) options.j = parse_int(node["j"], path + ".j");
    if (node.contains("l")) options.l = parse_int(node["l"], path + ".l");
    if (node.contains("k")) options.k = parse_int(node["k"], path + ".k");
    if (node.contains("type")) {
        if (!node["type"].is_string()) fail(path + ".type", "expected \"i\" or \"ii\"");
        options.type = node["type"].get<std::string>();
    }
    if (node.contains("path_start")) {
        options.path_start = parse_int_list(node["path_start"], path + ".path_start");
    }
    if (node.contains("path_steps")) {
        options.path_steps = parse_int_list(node["path_steps"], path + ".path_steps");
    }
    if (node.contains("q")) {
        std::vector<Rational> coeffs;
        size_t i = 0;
        if (!node["q"].is_array()) fail(path + ".q", "expected a coefficient list");
        for (const auto& entry : node["q"]) {
            coeffs.push_back(parse_rational(entry, path + ".q[" + std::to_string(i++) + "]"));
        }
        options.q = std::move(coeffs);
    }
    if (node.contains("precision")) {
        options.precision = parse_int(node["precision"], path + ".precision");
    }
    return options;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: expected a JSON object");
    reject_floats(root, "config");
    check_keys(root, {"system", "indices", "seed", "options"}, "config");
    if (!root.contains("system")) throw ConfigError("config: missing 'system'");

    RunConfig config;
    config.system = parse_system(root["system"], "config.system");
    if (root.contains("indices")) {
        config.indices = parse_indices(root["indices"], "config.indices");
    }
    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer()) {
            throw ConfigError("config.seed: expected an unsigned integer");
        }
        long long seed = root["seed"].get<long long>();
        if (seed < 0) throw ConfigError("config.seed: expected an unsigned integer");
        config.seed = static_cast<uint64_t>(seed);
    }
    if (root.contains("options")) {
        config.options = parse_options(root["options"], "config.options");
    }
    return config;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

namespace {

DiscreteMeasure build_measure(const MeasureSpec& spec) {
    std::vector<Atom> atoms;
    atoms.reserve(spec.atoms.size());
    for (const auto& [point, weight] : spec.atoms) atoms.push_back({point, weight});
    return DiscreteMeasure(std::move(atoms), spec.interval);
}

}  // namespace

MeasureSystem build_system(const SystemSpec& spec) {
    try {
        switch (spec.kind) {
            case SystemKind::Explicit: {
                std::vector<DiscreteMeasure> measures;
                for (const MeasureSpec& m : spec.measures) measures.push_back(build_measure(m));
                return MeasureSystem::explicit_system(std::move(measures));
            }
            case SystemKind::Angelesco: {
                std::vector<DiscreteMeasure> measures;
                for (const MeasureSpec& m : spec.measures) measures.push_back(build_measure(m));
                return MeasureSystem::angelesco(std::move(measures));
            }
            case SystemKind::ATCauchyVandermonde:
                return MeasureSystem::at_cauchy(build_measure(spec.measures.at(0)), spec.poles);
            case SystemKind::Nikishin: {
                std::vector<DiscreteMeasure> sigmas;
                for (const MeasureSpec& m : spec.sigmas) sigmas.push_back(build_measure(m));
                return MeasureSystem::nikishin(sigmas);
            }
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config.system: ") + e.what());
    }
    throw ConfigError("config.system: unknown kind");
}

std::string canonical_system_string(const SystemSpec& spec) {
    nlohmann::ordered_json out;
    out["kind"] = [&] {
        switch (spec.kind) {
            case SystemKind::Explicit: return "explicit";
            case SystemKind::Angelesco: return "angelesco";
            case SystemKind::ATCauchyVandermonde: return "at_cauchy_vandermonde";
            case SystemKind::Nikishin: return "nikishin";
        }
        return "explicit";
    }();
    auto measure_json = [](const MeasureSpec& m) {
        nlohmann::ordered_json entry;
        auto atoms = m.atoms;
        std::sort(atoms.begin(), atoms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        nlohmann::ordered_json alist = nlohmann::ordered_json::array();
        for (const auto& [point, weight] : atoms) {
            alist.push_back({to_string(point), to_string(weight)});
        }
        entry["atoms"] = std::move(alist);
        if (m.interval) {
            entry["interval"] = {to_string(m.interval->lo), to_string(m.interval->hi)};
        }
        return entry;
    };
    if (spec.kind == SystemKind::Nikishin) {
        nlohmann::ordered_json sigmas = nlohmann::ordered_json::array();
        for (const MeasureSpec& m : spec.sigmas) sigmas.push_back(measure_json(m));
        out["sigmas"] = std::move(sigmas);
    } else {
        nlohmann::ordered_json measures = nlohmann::ordered_json::array();
        for (const MeasureSpec& m : spec.measures) measures.push_back(measure_json(m));
        out["measures"] = std::move(measures);
        if (spec.kind == SystemKind::ATCauchyVandermonde) {
            nlohmann::ordered_json poles = nlohmann::ordered_json::array();
            for (const Rational& p : spec.poles) poles.push_back(to_string(p));
            out["poles"] = std::move(poles);
        }
    }
    return out.dump();
}

std::string system_fingerprint(const SystemSpec& spec) {
    return hex64(fnv1a64(canonical_system_string(spec)));
}

}  // namespace moprl
