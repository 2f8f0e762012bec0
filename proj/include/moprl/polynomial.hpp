#pragma once

#include "moprl/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace moprl {

// Dense univariate polynomial over Rational. coefficients()[i] multiplies
// x^i; trailing zeros are trimmed, so the zero polynomial stores nothing and
// reports degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial constant(Rational value);
    static Polynomial variable();
    static Polynomial monomial(int degree, Rational coefficient);
    static Polynomial from_roots(std::span<const Rational> roots);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(size_t i) const;
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& s);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// Quotient and remainder over the field of rationals; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

// Division that must leave no remainder; throws std::domain_error otherwise.
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);

// Positive rescaling to coprime integer coefficients.
Polynomial primitive_part(const Polynomial& p);

// Monic gcd via a primitive remainder sequence; gcd(0, 0) is zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), made monic. Nonzero constants normalize to 1.
// Throws std::invalid_argument on the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

// Yun decomposition: pairwise coprime squarefree factors with their
// multiplicities, p = lc * prod f_i^{m_i}. Constants decompose to {}.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Determinant of the matrix whose row k holds the k-th derivatives,
// expanded exactly over the polynomial ring (fraction-free elimination).
Polynomial wronskian(std::span<const Polynomial> polys);
Polynomial wronskian(std::initializer_list<Polynomial> polys);

Polynomial pow(const Polynomial& base, unsigned exponent);

std::string to_string(const Polynomial& p, const std::string& variable = "x");

}  // namespace moprl
