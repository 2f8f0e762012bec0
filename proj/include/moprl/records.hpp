#pragma once

#include "moprl/criteria.hpp"
#include "moprl/multi_index.hpp"
#include "moprl/polynomial.hpp"
#include "moprl/sturm.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace moprl {

uint64_t fnv1a64(std::string_view data);
std::string hex64(uint64_t value);

nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
nlohmann::ordered_json index_to_json(const MultiIndex& n);
nlohmann::ordered_json interval_to_json(const IsolatingInterval& interval, int decimal_digits);
nlohmann::ordered_json report_to_json(const CriterionReport& report);

}  // namespace moprl
