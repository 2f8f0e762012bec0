#pragma once

#include "moprl/multi_index.hpp"
#include "moprl/polynomial.hpp"
#include "moprl/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace moprl {

struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h);
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool interior_contains(const Rational& x) const { return lo < x && x < hi; }
    friend bool operator==(const Interval& a, const Interval& b) = default;
};

bool interiors_disjoint(const Interval& a, const Interval& b);

struct Atom {
    Rational point;
    Rational weight;
    friend bool operator==(const Atom& a, const Atom& b) = default;
};

// Finite atomic measure with exact rational atoms and (possibly signed)
// nonzero weights. Atoms are kept sorted by point.
class DiscreteMeasure {
public:
    DiscreteMeasure(std::vector<Atom> atoms, std::optional<Interval> support = std::nullopt);

    const std::vector<Atom>& atoms() const { return atoms_; }
    size_t atom_count() const { return atoms_.size(); }
    const std::optional<Interval>& support() const { return support_; }
    bool has_atom_at(const Rational& x) const;
    bool sign_definite() const;

    // c_k = sum w_i t_i^k
    Rational moment(unsigned k) const;
    // sum w_i / (t_i - x); throws at atom points ("pole of m-function").
    Rational m_function(const Rational& x) const;
    // sum over atoms of w_i * p(t_i) * t_i^k
    Rational integrate(const Polynomial& p, unsigned power = 0) const;

    // Weights scaled by (t - z0); atoms whose weight vanishes are dropped.
    DiscreteMeasure christoffel1(const Rational& z0) const;
    // Weights scaled by (t - z0)^2.
    DiscreteMeasure christoffel2(const Rational& z0) const;
    // Weights scaled by (t - a)^2 + b^2 (|t - (a+ib)|^2); requires b != 0.
    DiscreteMeasure christoffel_abs2(const Rational& a, const Rational& b) const;

    DiscreteMeasure with_support(std::optional<Interval> support) const;

private:
    std::vector<Atom> atoms_;
    std::optional<Interval> support_;
};

// Atoms of s1 reweighted by the m-function of s2 (the <s1, s2> measure).
// Requires disjoint support interiors and no shared atom point.
DiscreteMeasure nikishin_bracket(const DiscreteMeasure& s1, const DiscreteMeasure& s2);

enum class SystemKind { Explicit, Angelesco, ATCauchyVandermonde, Nikishin };

const char* to_string(SystemKind kind);

// Ordered system of r measures, with interval metadata depending on the
// kind: Angelesco keeps the (sorted) supports, AT keeps r copies of the base
// interval, Nikishin keeps the sigma chain intervals Gamma_1..Gamma_r.
class MeasureSystem {
public:
    static MeasureSystem explicit_system(std::vector<DiscreteMeasure> measures);

    // Validates pairwise supports intersecting in at most one point and
    // per-measure sign-definiteness; reorders measures so the support
    // intervals increase (the determinant positivity statement needs this).
    static MeasureSystem angelesco(std::vector<DiscreteMeasure> measures);

    // Cauchy-Vandermonde AT instance: measure j reweights the base atoms by
    // 1/(pole_j - t). Poles must be pairwise distinct and strictly outside
    // the base support, all on the same side.
    static MeasureSystem at_cauchy(const DiscreteMeasure& base, std::vector<Rational> poles);

    // mu_1 = sigma_1, mu_2 = <sigma_1, sigma_2>, mu_3 = <sigma_1, <sigma_2,
    // sigma_3>>; depth capped at r in {2, 3}.
    static MeasureSystem nikishin(const std::vector<DiscreteMeasure>& sigmas);

    size_t size() const { return measures_.size(); }
    const DiscreteMeasure& measure(size_t j) const { return measures_.at(j); }
    SystemKind kind() const { return kind_; }
    bool has_intervals() const { return !intervals_.empty(); }
    const Interval& interval(size_t j) const { return intervals_.at(j); }
    const std::vector<Rational>& poles() const { return poles_; }

    size_t distinct_atom_count() const;
    std::string summary() const;

    // (mu_1, mu_2 + q * mu_1) combined atomwise; r = 2 only. The result is an
    // explicit system (interval metadata does not survive the combination).
    MeasureSystem perturb_second_measure(const Polynomial& q) const;

private:
    MeasureSystem(SystemKind kind, std::vector<DiscreteMeasure> measures,
                  std::vector<Interval> intervals, std::vector<Rational> poles = {});

    SystemKind kind_;
    std::vector<DiscreteMeasure> measures_;
    std::vector<Interval> intervals_;
    std::vector<Rational> poles_;
};

// Samples `trials` strictly increasing rational tuples inside the AT base
// interval and checks that the Cauchy-Vandermonde determinants all carry one
// strict sign. False never arises for a correct construction.
bool chebyshev_sample_check(const MeasureSystem& system, const MultiIndex& n, int trials,
                            uint64_t seed = 1);

// The simple-pole Cauchy-Vandermonde family is an AT system exactly for the
// indices with at most one slot >= 2: the identity
// (x - b_j) w_j + (b_k - x) w_k = 0 makes {w_j, x w_j, w_k, x w_k} linearly
// dependent whenever two slots carry two or more powers.
bool cauchy_vandermonde_at_index(const MultiIndex& n);

}  // namespace moprl
