#pragma once

#include "moprl/polynomial.hpp"
#include "moprl/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace moprl {

namespace detail {

template <typename T>
struct ring_ops;

template <>
struct ring_ops<Rational> {
    static bool is_zero(const Rational& v) { return v == 0; }
    static Rational one() { return Rational(1); }
    static Rational divide(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct ring_ops<Polynomial> {
    static bool is_zero(const Polynomial& v) { return v.is_zero(); }
    static Polynomial one() { return Polynomial::constant(Rational(1)); }
    static Polynomial divide(const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); }
};

}  // namespace detail

// Fraction-free Bareiss determinant. The interior divisions are exact in any
// integral domain (Sylvester identity), which is what makes this usable over
// the polynomial ring as well as over the rationals. Rows are swapped when a
// pivot vanishes; a fully zero pivot column means determinant zero.
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
    using ops = detail::ring_ops<T>;
    const size_t n = m.size();
    if (n == 0) return ops::one();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    }
    bool negate = false;
    T prev = ops::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ops::is_zero(m[k][k])) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i) {
                if (!ops::is_zero(m[i][k])) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == k) return T{};
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = ops::divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return negate ? T{} - det : det;
}

// Solves A x = b exactly: fraction-free forward elimination on the augmented
// matrix, then exact rational back-substitution. Returns nullopt when A is
// singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

}  // namespace moprl
