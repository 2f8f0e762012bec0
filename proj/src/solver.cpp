#include "moprl/solver.hpp"

#include "moprl/linalg.hpp"

#include <stdexcept>

namespace moprl {

namespace {

void check_order(const MeasureSystem& system, const MultiIndex& n) {
    if (n.order() != system.size()) {
        throw std::invalid_argument("multi-index order does not match the system");
    }
}

bool richness(const MeasureSystem& system, const MultiIndex& n,
              const ChristoffelSpec* transform) {
    size_t union_needed = static_cast<size_t>(n.total());
    bool any_transform = false;
    for (size_t j = 0; j < system.size(); ++j) {
        int d = transform ? transform->degree_for(j) : 0;
        if (d > 0) any_transform = true;
        if (system.measure(j).atom_count() < static_cast<size_t>(n[j] + d)) return false;
    }
    if (any_transform) union_needed += 1;
    return system.distinct_atom_count() >= union_needed;
}

std::vector<Rational> moments_up_to(const DiscreteMeasure& m, unsigned max_k) {
    std::vector<Rational> c;
    c.reserve(max_k + 1);
    std::vector<Rational> powers(m.atom_count(), Rational(1));
    for (unsigned k = 0; k <= max_k; ++k) {
        Rational sum(0);
        for (size_t i = 0; i < m.atom_count(); ++i) {
            sum += m.atoms()[i].weight * powers[i];
            powers[i] *= m.atoms()[i].point;
        }
        c.push_back(std::move(sum));
    }
    return c;
}

}  // namespace

bool support_richness_ok(const MeasureSystem& system, const MultiIndex& n) {
    check_order(system, n);
    return richness(system, n, nullptr);
}

bool support_richness_ok(const MeasureSystem& system, const MultiIndex& n,
                         const ChristoffelSpec& transform) {
    check_order(system, n);
    return richness(system, n, &transform);
}

void require_support_richness(const MeasureSystem& system, const MultiIndex& n) {
    if (!support_richness_ok(system, n)) {
        throw std::invalid_argument("insufficient support for index " + n.str());
    }
}

void require_support_richness(const MeasureSystem& system, const MultiIndex& n,
                              const ChristoffelSpec& transform) {
    if (!support_richness_ok(system, n, transform)) {
        throw std::invalid_argument("insufficient support for index " + n.str());
    }
}

MomentMatrix build_H(const MeasureSystem& system, const MultiIndex& n) {
    require_support_richness(system, n);
    const int size = n.total();
    MomentMatrix matrix{n, {}};
    matrix.entries.reserve(static_cast<size_t>(size));
    for (size_t j = 0; j < system.size(); ++j) {
        if (n[j] == 0) continue;
        const unsigned max_k = static_cast<unsigned>(n[j] - 1 + size - 1);
        std::vector<Rational> c = moments_up_to(system.measure(j), max_k);
        for (int k = 0; k < n[j]; ++k) {
            std::vector<Rational> row;
            row.reserve(static_cast<size_t>(size));
            for (int l = 0; l < size; ++l) row.push_back(c[static_cast<size_t>(k + l)]);
            matrix.entries.push_back(std::move(row));
        }
    }
    return matrix;
}

Rational det_exact(const MomentMatrix& matrix) {
    return bareiss_determinant(matrix.entries);
}

bool is_normal(const MeasureSystem& system, const MultiIndex& n) {
    return det_exact(build_H(system, n)) != 0;
}

Polynomial solve_type_ii(const MeasureSystem& system, const MultiIndex& n) {
    check_order(system, n);
    require_support_richness(system, n);
    const int size = n.total();
    if (size == 0) return Polynomial::constant(Rational(1));

    MomentMatrix h = build_H(system, n);
    std::vector<Rational> rhs;
    rhs.reserve(static_cast<size_t>(size));
    for (size_t j = 0; j < system.size(); ++j) {
        if (n[j] == 0) continue;
        for (int k = 0; k < n[j]; ++k) {
            rhs.push_back(-system.measure(j).moment(static_cast<unsigned>(size + k)));
        }
    }
    auto solution = solve_linear(h.entries, rhs);
    if (!solution) throw NotNormalError(n);

    std::vector<Rational> coeffs = std::move(*solution);
    coeffs.push_back(Rational(1));
    Polynomial p(std::move(coeffs));

    for (size_t j = 0; j < system.size(); ++j) {
        for (int k = 0; k < n[j]; ++k) {
            if (system.measure(j).integrate(p, static_cast<unsigned>(k)) != 0) {
                throw std::logic_error("type II solution failed verification");
            }
        }
    }
    return p;
}

TypeIVector solve_type_i(const MeasureSystem& system, const MultiIndex& n) {
    check_order(system, n);
    require_support_richness(system, n);
    const int size = n.total();
    if (size < 1) throw std::invalid_argument("type I undefined for |n| = 0");

    // Unknowns are the stacked coefficients of the A^{(j)}; the moment matrix
    // of the k-th condition row is H_n transposed.
    std::vector<std::vector<Rational>> matrix(static_cast<size_t>(size),
                                              std::vector<Rational>(static_cast<size_t>(size)));
    size_t col = 0;
    for (size_t j = 0; j < system.size(); ++j) {
        if (n[j] == 0) continue;
        const unsigned max_k = static_cast<unsigned>(n[j] - 1 + size - 1);
        std::vector<Rational> c = moments_up_to(system.measure(j), max_k);
        for (int i = 0; i < n[j]; ++i) {
            for (int k = 0; k < size; ++k) {
                matrix[static_cast<size_t>(k)][col] = c[static_cast<size_t>(i + k)];
            }
            ++col;
        }
    }
    std::vector<Rational> rhs(static_cast<size_t>(size), Rational(0));
    rhs.back() = Rational(1);
    auto solution = solve_linear(std::move(matrix), std::move(rhs));
    if (!solution) throw NotNormalError(n);

    TypeIVector result;
    size_t offset = 0;
    for (size_t j = 0; j < system.size(); ++j) {
        std::vector<Rational> coeffs(solution->begin() + static_cast<long>(offset),
                                     solution->begin() + static_cast<long>(offset) + n[j]);
        offset += static_cast<size_t>(n[j]);
        result.components.emplace_back(std::move(coeffs));
    }

    for (int k = 0; k < size; ++k) {
        Rational acc(0);
        for (size_t j = 0; j < system.size(); ++j) {
            acc += system.measure(j).integrate(result.components[j], static_cast<unsigned>(k));
        }
        if (acc != Rational(k == size - 1 ? 1 : 0)) {
            throw std::logic_error("type I solution failed verification");
        }
    }
    return result;
}

Polynomial det_H_in_z(const MeasureSystem& system, const MultiIndex& n,
                      const ChristoffelSpec& transform) {
    check_order(system, n);
    require_support_richness(system, n, transform);
    const int size = n.total();
    if (size == 0) return Polynomial::constant(Rational(1));

    std::vector<std::vector<Polynomial>> matrix;
    matrix.reserve(static_cast<size_t>(size));
    for (size_t j = 0; j < system.size(); ++j) {
        if (n[j] == 0) continue;
        const int d = transform.degree_for(j);
        const unsigned max_k = static_cast<unsigned>(n[j] - 1 + size - 1 + d);
        std::vector<Rational> c = moments_up_to(system.measure(j), max_k);

        // binomials for (x - z)^d
        std::vector<Rational> binom(static_cast<size_t>(d) + 1, Rational(1));
        for (int i = 1; i <= d; ++i) {
            binom[static_cast<size_t>(i)] =
                binom[static_cast<size_t>(i - 1)] * Rational(d - i + 1) / Rational(i);
        }
        for (int k = 0; k < n[j]; ++k) {
            std::vector<Polynomial> row;
            row.reserve(static_cast<size_t>(size));
            for (int l = 0; l < size; ++l) {
                // integral of x^{k+l} (x-z)^d dmu_j as a polynomial in z
                std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
                for (int i = 0; i <= d; ++i) {
                    Rational term = binom[static_cast<size_t>(i)] * c[static_cast<size_t>(k + l + i)];
                    if ((d - i) % 2 != 0) term = -term;
                    coeffs[static_cast<size_t>(d - i)] = std::move(term);
                }
                row.emplace_back(std::move(coeffs));
            }
            matrix.push_back(std::move(row));
        }
    }
    return bareiss_determinant(std::move(matrix));
}

}  // namespace moprl
