#include "moprl/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace moprl {

long uniform_long(std::mt19937_64& rng, long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

Rational random_positive_weight(std::mt19937_64& rng) {
    return make_rational(uniform_long(rng, 1, 9), uniform_long(rng, 1, 9));
}

DiscreteMeasure random_measure_on(std::mt19937_64& rng, const Interval& gamma, size_t atom_count) {
    if (atom_count > 63) throw std::invalid_argument("atom budget exceeds the sampling grid");
    std::vector<long> ticks;
    while (ticks.size() < atom_count) {
        long t = uniform_long(rng, 1, 63);
        if (std::find(ticks.begin(), ticks.end(), t) == ticks.end()) ticks.push_back(t);
    }
    std::sort(ticks.begin(), ticks.end());
    const Rational span = gamma.hi - gamma.lo;
    std::vector<Atom> atoms;
    atoms.reserve(atom_count);
    for (long t : ticks) {
        atoms.push_back({gamma.lo + span * make_rational(t, 64), random_positive_weight(rng)});
    }
    return DiscreteMeasure(std::move(atoms), gamma);
}

MeasureSystem random_angelesco(std::mt19937_64& rng, size_t r, size_t atoms_per_measure) {
    std::vector<DiscreteMeasure> measures;
    Rational left(uniform_long(rng, -3, 0));
    for (size_t j = 0; j < r; ++j) {
        Rational right = left + Rational(uniform_long(rng, 1, 2));
        measures.push_back(random_measure_on(rng, Interval(left, right), atoms_per_measure));
        // mostly touching supports, occasionally a gap
        left = right + Rational(uniform_long(rng, 0, 2) == 0 ? 1 : 0);
    }
    return MeasureSystem::angelesco(std::move(measures));
}

MeasureSystem random_nikishin(std::mt19937_64& rng, size_t min_atoms, size_t max_atoms) {
    const size_t m1 = static_cast<size_t>(
        uniform_long(rng, static_cast<long>(min_atoms), static_cast<long>(max_atoms)));
    const size_t m2 = static_cast<size_t>(
        uniform_long(rng, static_cast<long>(m1), static_cast<long>(max_atoms)));
    DiscreteMeasure sigma1 = random_measure_on(rng, Interval(Rational(0), Rational(1)), m1);
    DiscreteMeasure sigma2 = random_measure_on(rng, Interval(Rational(2), Rational(3)), m2);
    return MeasureSystem::nikishin({sigma1, sigma2});
}

MeasureSystem random_at_cauchy(std::mt19937_64& rng, size_t r, size_t base_atoms) {
    const Interval gamma(Rational(0), Rational(1));
    DiscreteMeasure base = random_measure_on(rng, gamma, base_atoms);
    const bool right_side = uniform_long(rng, 0, 3) != 0;
    std::vector<Rational> poles;
    std::vector<long> picks;
    while (poles.size() < r) {
        long k = uniform_long(rng, 2, 24);
        if (std::find(picks.begin(), picks.end(), k) != picks.end()) continue;
        picks.push_back(k);
        poles.push_back(right_side ? Rational(gamma.hi + make_rational(k, 4))
                                   : Rational(gamma.lo - make_rational(k, 4)));
    }
    return MeasureSystem::at_cauchy(base, std::move(poles));
}

Polynomial random_real_rooted(std::mt19937_64& rng, int degree, bool allow_repeated_roots) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < degree) {
        Rational root = make_rational(uniform_long(rng, -8, 8), 4);
        if (!allow_repeated_roots &&
            std::find(roots.begin(), roots.end(), root) != roots.end()) {
            continue;
        }
        roots.push_back(std::move(root));
    }
    Rational scale = make_rational(uniform_long(rng, 1, 5), uniform_long(rng, 1, 3));
    if (uniform_long(rng, 0, 1) == 1) scale = -scale;
    return scale * Polynomial::from_roots(roots);
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
    while (true) {
        const int degree = static_cast<int>(uniform_long(rng, 0, max_degree));
        std::vector<Rational> coeffs;
        coeffs.reserve(static_cast<size_t>(degree) + 1);
        for (int i = 0; i <= degree; ++i) {
            coeffs.push_back(make_rational(uniform_long(rng, -9, 9), uniform_long(rng, 1, 4)));
        }
        Polynomial p(std::move(coeffs));
        if (!p.is_zero()) return p;
    }
}

}  // namespace moprl
