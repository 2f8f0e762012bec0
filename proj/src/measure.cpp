#include "moprl/measure.hpp"

#include "moprl/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace moprl {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo >= hi) throw std::invalid_argument("interval needs lo < hi");
}

bool interiors_disjoint(const Interval& a, const Interval& b) {
    return a.hi <= b.lo || b.hi <= a.lo;
}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, std::optional<Interval> support)
    : atoms_(std::move(atoms)), support_(std::move(support)) {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.point < b.point; });
    for (size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].weight == 0) throw std::invalid_argument("atom with zero weight");
        if (i > 0 && atoms_[i].point == atoms_[i - 1].point) {
            throw std::invalid_argument("duplicate atom point " + to_string(atoms_[i].point));
        }
        if (support_ && !support_->contains(atoms_[i].point)) {
            throw std::invalid_argument("atom " + to_string(atoms_[i].point) +
                                        " outside the support interval");
        }
    }
}

bool DiscreteMeasure::has_atom_at(const Rational& x) const {
    return std::any_of(atoms_.begin(), atoms_.end(),
                       [&](const Atom& a) { return a.point == x; });
}

bool DiscreteMeasure::sign_definite() const {
    if (atoms_.empty()) return false;
    int s = sgn(atoms_.front().weight);
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [&](const Atom& a) { return sgn(a.weight) == s; });
}

Rational DiscreteMeasure::moment(unsigned k) const {
    Rational sum(0);
    for (const Atom& a : atoms_) {
        Rational power(1);
        for (unsigned i = 0; i < k; ++i) power *= a.point;
        sum += a.weight * power;
    }
    return sum;
}

Rational DiscreteMeasure::m_function(const Rational& x) const {
    Rational sum(0);
    for (const Atom& a : atoms_) {
        if (a.point == x) throw std::invalid_argument("pole of m-function at " + to_string(x));
        sum += a.weight / (a.point - x);
    }
    return sum;
}

Rational DiscreteMeasure::integrate(const Polynomial& p, unsigned power) const {
    Rational sum(0);
    for (const Atom& a : atoms_) {
        Rational xk(1);
        for (unsigned i = 0; i < power; ++i) xk *= a.point;
        sum += a.weight * p.evaluate(a.point) * xk;
    }
    return sum;
}

namespace {

// Multipliers return Rational by value; gmp expression templates must not
// escape the lambda body.
template <typename Multiplier>
DiscreteMeasure rescaled(const DiscreteMeasure& m, Multiplier&& multiplier) {
    std::vector<Atom> atoms;
    atoms.reserve(m.atom_count());
    for (const Atom& a : m.atoms()) {
        Rational w = a.weight * multiplier(a.point);
        if (w != 0) atoms.push_back({a.point, std::move(w)});
    }
    return DiscreteMeasure(std::move(atoms), m.support());
}

}  // namespace

DiscreteMeasure DiscreteMeasure::christoffel1(const Rational& z0) const {
    return rescaled(*this, [&](const Rational& t) -> Rational { return t - z0; });
}

DiscreteMeasure DiscreteMeasure::christoffel2(const Rational& z0) const {
    return rescaled(*this, [&](const Rational& t) -> Rational { return (t - z0) * (t - z0); });
}

DiscreteMeasure DiscreteMeasure::christoffel_abs2(const Rational& a, const Rational& b) const {
    if (b == 0) throw std::invalid_argument("use christoffel2 for a real transform point");
    return rescaled(*this, [&](const Rational& t) -> Rational { return (t - a) * (t - a) + b * b; });
}

DiscreteMeasure DiscreteMeasure::with_support(std::optional<Interval> support) const {
    return DiscreteMeasure(atoms_, std::move(support));
}

DiscreteMeasure nikishin_bracket(const DiscreteMeasure& s1, const DiscreteMeasure& s2) {
    if (!s1.support() || !s2.support()) {
        throw std::invalid_argument("nikishin bracket needs support intervals");
    }
    if (!interiors_disjoint(*s1.support(), *s2.support())) {
        throw std::invalid_argument("not a Nikishin pair: support interiors overlap");
    }
    for (const Atom& a : s1.atoms()) {
        if (s2.has_atom_at(a.point)) {
            throw std::invalid_argument("bracket undefined at common point " + to_string(a.point));
        }
    }
    return rescaled(s1, [&](const Rational& t) -> Rational { return s2.m_function(t); });
}

const char* to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::Explicit: return "explicit";
        case SystemKind::Angelesco: return "angelesco";
        case SystemKind::ATCauchyVandermonde: return "at_cauchy_vandermonde";
        case SystemKind::Nikishin: return "nikishin";
    }
    return "unknown";
}

MeasureSystem::MeasureSystem(SystemKind kind, std::vector<DiscreteMeasure> measures,
                             std::vector<Interval> intervals, std::vector<Rational> poles)
    : kind_(kind),
      measures_(std::move(measures)),
      intervals_(std::move(intervals)),
      poles_(std::move(poles)) {
    if (measures_.empty()) throw std::invalid_argument("measure system needs r >= 1");
}

MeasureSystem MeasureSystem::explicit_system(std::vector<DiscreteMeasure> measures) {
    std::vector<Interval> intervals;
    bool all_supported = std::all_of(measures.begin(), measures.end(),
                                     [](const DiscreteMeasure& m) { return m.support().has_value(); });
    if (all_supported) {
        for (const DiscreteMeasure& m : measures) intervals.push_back(*m.support());
    }
    return MeasureSystem(SystemKind::Explicit, std::move(measures), std::move(intervals));
}

MeasureSystem MeasureSystem::angelesco(std::vector<DiscreteMeasure> measures) {
    for (const DiscreteMeasure& m : measures) {
        if (!m.support()) throw std::invalid_argument("Angelesco measures need support intervals");
        if (!m.sign_definite()) throw std::invalid_argument("Angelesco measures must be sign-definite");
    }
    std::sort(measures.begin(), measures.end(),
              [](const DiscreteMeasure& a, const DiscreteMeasure& b) {
                  return a.support()->lo < b.support()->lo;
              });
    std::vector<Interval> intervals;
    for (const DiscreteMeasure& m : measures) intervals.push_back(*m.support());
    for (size_t i = 0; i + 1 < intervals.size(); ++i) {
        if (intervals[i].hi > intervals[i + 1].lo) {
            throw std::invalid_argument("Angelesco supports intersect in more than one point");
        }
    }
    return MeasureSystem(SystemKind::Angelesco, std::move(measures), std::move(intervals));
}

MeasureSystem MeasureSystem::at_cauchy(const DiscreteMeasure& base, std::vector<Rational> poles) {
    if (!base.support()) throw std::invalid_argument("AT base measure needs a support interval");
    if (!base.sign_definite()) throw std::invalid_argument("AT base measure must be sign-definite");
    if (poles.empty()) throw std::invalid_argument("AT system needs at least one pole");
    const Interval gamma = *base.support();
    bool any_left = false;
    bool any_right = false;
    for (size_t i = 0; i < poles.size(); ++i) {
        for (size_t k = i + 1; k < poles.size(); ++k) {
            if (poles[i] == poles[k]) throw std::invalid_argument("duplicate AT poles");
        }
        if (poles[i] < gamma.lo) {
            any_left = true;
        } else if (poles[i] > gamma.hi) {
            any_right = true;
        } else {
            throw std::invalid_argument("AT pole " + to_string(poles[i]) +
                                        " lies inside the base interval");
        }
    }
    if (any_left && any_right) {
        throw std::invalid_argument("AT poles must lie on one side of the base interval");
    }
    std::vector<DiscreteMeasure> measures;
    std::vector<Interval> intervals;
    measures.reserve(poles.size());
    for (const Rational& pole : poles) {
        std::vector<Atom> atoms;
        for (const Atom& a : base.atoms()) {
            atoms.push_back({a.point, a.weight / (pole - a.point)});
        }
        measures.emplace_back(std::move(atoms), gamma);
        intervals.push_back(gamma);
    }
    return MeasureSystem(SystemKind::ATCauchyVandermonde, std::move(measures), std::move(intervals),
                         std::move(poles));
}

MeasureSystem MeasureSystem::nikishin(const std::vector<DiscreteMeasure>& sigmas) {
    if (sigmas.size() != 2 && sigmas.size() != 3) {
        throw std::invalid_argument("Nikishin depth capped at r in {2, 3}");
    }
    std::vector<Interval> intervals;
    for (const DiscreteMeasure& s : sigmas) {
        if (!s.support()) throw std::invalid_argument("Nikishin sigmas need support intervals");
        if (!s.sign_definite()) throw std::invalid_argument("Nikishin sigmas must be sign-definite");
        intervals.push_back(*s.support());
    }
    for (size_t j = 0; j + 1 < sigmas.size(); ++j) {
        if (!interiors_disjoint(intervals[j], intervals[j + 1])) {
            throw std::invalid_argument("not a Nikishin pair: support interiors overlap");
        }
    }
    std::vector<DiscreteMeasure> measures;
    measures.push_back(sigmas[0]);
    measures.push_back(nikishin_bracket(sigmas[0], sigmas[1]));
    if (sigmas.size() == 3) {
        measures.push_back(nikishin_bracket(sigmas[0], nikishin_bracket(sigmas[1], sigmas[2])));
    }
    return MeasureSystem(SystemKind::Nikishin, std::move(measures), std::move(intervals));
}

size_t MeasureSystem::distinct_atom_count() const {
    std::vector<Rational> points;
    for (const DiscreteMeasure& m : measures_) {
        for (const Atom& a : m.atoms()) points.push_back(a.point);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points.size();
}

std::string MeasureSystem::summary() const {
    std::ostringstream os;
    os << to_string(kind_) << " r=" << measures_.size() << " atoms=";
    for (size_t j = 0; j < measures_.size(); ++j) {
        if (j) os << "+";
        os << measures_[j].atom_count();
    }
    return os.str();
}

MeasureSystem MeasureSystem::perturb_second_measure(const Polynomial& q) const {
    if (measures_.size() != 2) {
        throw std::invalid_argument("perturbation needs exactly two measures");
    }
    const DiscreteMeasure& mu1 = measures_[0];
    const DiscreteMeasure& mu2 = measures_[1];
    std::vector<Atom> combined;
    for (const Atom& a : mu2.atoms()) combined.push_back(a);
    for (const Atom& a : mu1.atoms()) {
        Rational add = q.evaluate(a.point) * a.weight;
        if (add == 0) continue;
        auto it = std::find_if(combined.begin(), combined.end(),
                               [&](const Atom& b) { return b.point == a.point; });
        if (it == combined.end()) {
            combined.push_back({a.point, std::move(add)});
        } else {
            it->weight += add;
        }
    }
    std::erase_if(combined, [](const Atom& a) { return a.weight == 0; });
    std::vector<DiscreteMeasure> measures;
    measures.push_back(mu1);
    measures.emplace_back(std::move(combined), std::nullopt);
    return MeasureSystem(SystemKind::Explicit, std::move(measures), {});
}

bool cauchy_vandermonde_at_index(const MultiIndex& n) {
    int big_slots = 0;
    for (int part : n.parts) {
        if (part >= 2) ++big_slots;
    }
    return big_slots <= 1;
}

bool chebyshev_sample_check(const MeasureSystem& system, const MultiIndex& n, int trials,
                            uint64_t seed) {
    if (system.kind() != SystemKind::ATCauchyVandermonde) {
        throw std::invalid_argument("Chebyshev sampling applies to AT systems only");
    }
    if (n.order() != system.size()) throw std::invalid_argument("index order mismatch");
    const int size = n.total();
    if (size == 0) return true;
    const Interval gamma = system.interval(0);
    const Rational span = gamma.hi - gamma.lo;

    std::mt19937_64 rng(seed);
    const long denominator = 64 * size + 1;
    int overall_sign = 0;
    for (int t = 0; t < trials; ++t) {
        // strictly increasing tuple inside the open interval; duplicates are
        // rejected before evaluation
        std::vector<long> ticks;
        while (static_cast<int>(ticks.size()) < size) {
            long candidate = 1 + static_cast<long>(rng() % static_cast<uint64_t>(denominator - 1));
            if (std::find(ticks.begin(), ticks.end(), candidate) == ticks.end()) {
                ticks.push_back(candidate);
            }
        }
        std::sort(ticks.begin(), ticks.end());
        std::vector<Rational> xs;
        xs.reserve(ticks.size());
        for (long k : ticks) {
            xs.push_back(gamma.lo + span * Rational(k, denominator));
        }

        // rows ordered w_1, x w_1, ..., x^{n_1-1} w_1, w_2, ...
        std::vector<std::vector<Rational>> matrix;
        matrix.reserve(static_cast<size_t>(size));
        for (size_t j = 0; j < system.size(); ++j) {
            const Rational& pole = system.poles().at(j);
            for (int k = 0; k < n[j]; ++k) {
                std::vector<Rational> row;
                row.reserve(xs.size());
                for (const Rational& x : xs) {
                    Rational xk(1);
                    for (int e = 0; e < k; ++e) xk *= x;
                    row.push_back(xk / (pole - x));
                }
                matrix.push_back(std::move(row));
            }
        }
        Rational det = bareiss_determinant(std::move(matrix));
        int s = sgn(det);
        if (s == 0) return false;
        if (overall_sign == 0) overall_sign = s;
        if (s != overall_sign) return false;
    }
    return true;
}

}  // namespace moprl
