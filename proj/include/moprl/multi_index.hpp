#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace moprl {

// Multi-index n = (n_1, ..., n_r), all parts >= 0.
struct MultiIndex {
    std::vector<int> parts;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> p) : parts(std::move(p)) { validate(); }
    MultiIndex(std::initializer_list<int> p) : parts(p) { validate(); }

    size_t order() const { return parts.size(); }
    int total() const {
        int sum = 0;
        for (int v : parts) sum += v;
        return sum;
    }
    int operator[](size_t j) const { return parts.at(j); }

    MultiIndex plus(size_t j) const {
        MultiIndex m = *this;
        m.parts.at(j) += 1;
        return m;
    }
    MultiIndex minus(size_t j) const {
        MultiIndex m = *this;
        if (m.parts.at(j) == 0) throw std::invalid_argument("multi-index part would become negative");
        m.parts.at(j) -= 1;
        return m;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.parts < b.parts; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        s += ")";
        return s;
    }

private:
    void validate() const {
        for (int v : parts) {
            if (v < 0) throw std::invalid_argument("multi-index parts must be non-negative");
        }
    }
};

}  // namespace moprl
