#include "moprl/records.hpp"

namespace moprl {

uint64_t fnv1a64(std::string_view data) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Rational& c : p.coefficients()) coeffs.push_back(to_string(c));
    return coeffs;
}

nlohmann::ordered_json index_to_json(const MultiIndex& n) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int v : n.parts) out.push_back(v);
    return out;
}

nlohmann::ordered_json interval_to_json(const IsolatingInterval& interval, int decimal_digits) {
    nlohmann::ordered_json out;
    out["lo"] = to_string(interval.lo);
    out["hi"] = to_string(interval.hi);
    out["multiplicity"] = interval.multiplicity;
    out["midpoint"] = to_string(interval.midpoint());
    out["midpoint_decimal"] = decimal_string(interval.midpoint(), decimal_digits);
    return out;
}

nlohmann::ordered_json report_to_json(const CriterionReport& report) {
    nlohmann::ordered_json out;
    out["criterion"] = report.criterion;
    out["system"] = report.system_summary;
    out["index"] = index_to_json(report.index);
    out["verdict"] = to_string(report.verdict);
    out["seed"] = report.seed;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const Witness& w : report.witnesses) {
        nlohmann::ordered_json entry;
        entry["label"] = w.label;
        entry["value"] = to_string(w.value);
        witnesses.push_back(std::move(entry));
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

}  // namespace moprl
