#include "moprl/polynomial.hpp"

#include "moprl/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace moprl {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational value) {
    Polynomial p;
    if (value != 0) p.coeffs_.push_back(std::move(value));
    return p;
}

Polynomial Polynomial::variable() { return monomial(1, Rational(1)); }

Polynomial Polynomial::monomial(int degree, Rational coefficient) {
    if (degree < 0) throw std::invalid_argument("monomial of negative degree");
    Polynomial p;
    if (coefficient != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = std::move(coefficient);
    }
    return p;
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    Polynomial p = constant(Rational(1));
    for (const Rational& r : roots) {
        p = p * Polynomial({-r, Rational(1)});
    }
    return p;
}

Rational Polynomial::coefficient(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("monic form of the zero polynomial");
    Rational inv = Rational(1) / leading_coefficient();
    return inv * *this;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r += b;
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r -= b;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return Polynomial{};
    std::vector<Rational> c(p.coeffs_.size());
    for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] = s * p.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Polynomial quotient;
    Polynomial remainder = dividend;
    const int db = divisor.degree();
    const Rational lead_inv = Rational(1) / divisor.leading_coefficient();
    while (!remainder.is_zero() && remainder.degree() >= db) {
        const int shift = remainder.degree() - db;
        Rational factor = remainder.leading_coefficient() * lead_inv;
        Polynomial term = Polynomial::monomial(shift, factor);
        quotient += term;
        remainder -= term * divisor;
    }
    return {std::move(quotient), std::move(remainder)};
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero()) throw std::domain_error("polynomial division left a remainder");
    return q;
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1);
    for (const Rational& c : p.coefficients()) {
        mpz_class d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class num_gcd(0);
    for (const Rational& c : p.coefficients()) {
        mpz_class z = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), z.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    return scale * p;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    // primitive remainder sequence; plain rational Euclid swells coefficients
    Polynomial u = a.is_zero() ? a : primitive_part(a);
    Polynomial v = b.is_zero() ? b : primitive_part(b);
    while (!v.is_zero()) {
        Polynomial r = divmod(u, v).second;
        u = std::move(v);
        v = r.is_zero() ? std::move(r) : primitive_part(r);
    }
    return u.is_zero() ? u : u.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no squarefree part");
    if (p.is_constant()) return Polynomial::constant(Rational(1));
    return divide_exact(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no squarefree decomposition");
    std::vector<std::pair<Polynomial, int>> factors;
    if (p.is_constant()) return factors;
    // Yun's algorithm over a field of characteristic zero.
    Polynomial f = p.monic();
    Polynomial g = gcd(f, f.derivative());
    if (g.is_constant()) {
        factors.emplace_back(f, 1);
        return factors;
    }
    Polynomial w = divide_exact(f, g);
    Polynomial y = divide_exact(f.derivative(), g);
    int multiplicity = 1;
    while (w.degree() > 0) {
        Polynomial z = y - w.derivative();
        Polynomial fac = gcd(w, z);
        if (fac.degree() > 0) factors.emplace_back(fac, multiplicity);
        w = divide_exact(w, fac);
        y = divide_exact(z, fac);
        ++multiplicity;
    }
    return factors;
}

Polynomial wronskian(std::span<const Polynomial> polys) {
    if (polys.empty()) throw std::invalid_argument("Wronskian of an empty list");
    const size_t n = polys.size();
    if (n == 1) return polys[0];
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (size_t j = 0; j < n; ++j) m[0][j] = polys[j];
    for (size_t k = 1; k < n; ++k) {
        for (size_t j = 0; j < n; ++j) m[k][j] = m[k - 1][j].derivative();
    }
    return bareiss_determinant(std::move(m));
}

Polynomial wronskian(std::initializer_list<Polynomial> polys) {
    return wronskian(std::span<const Polynomial>(polys.begin(), polys.size()));
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * base;
    return result;
}

std::string to_string(const Polynomial& p, const std::string& variable) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        Rational c = p.coefficient(static_cast<size_t>(d));
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (d == 0 || a != 1) out << a.get_str();
        if (d > 0) {
            if (a != 1) out << "*";
            out << variable;
            if (d > 1) out << "^" << d;
        }
        first = false;
    }
    return out.str();
}

}  // namespace moprl
