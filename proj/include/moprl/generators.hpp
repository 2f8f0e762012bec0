#pragma once

#include "moprl/measure.hpp"
#include "moprl/polynomial.hpp"

#include <random>

namespace moprl {

// Bounded draws straight off mt19937_64 output. std::uniform_int_distribution
// is not pinned across standard libraries; suite reproducibility needs the
// exact sequence, so the sampling is done by hand.
long uniform_long(std::mt19937_64& rng, long lo, long hi);

Rational random_positive_weight(std::mt19937_64& rng);

// atom_count distinct atoms strictly inside gamma (64ths of the interval),
// positive random weights.
DiscreteMeasure random_measure_on(std::mt19937_64& rng, const Interval& gamma, size_t atom_count);

// Ordered intervals with integer endpoints, usually touching, sometimes
// separated by a gap.
MeasureSystem random_angelesco(std::mt19937_64& rng, size_t r, size_t atoms_per_measure);

// sigma_1 on [0,1], sigma_2 on [2,3]. sigma_2 never has fewer atoms than
// sigma_1, so every index inside support-richness stays clear of the
// rational-m-function degeneracy.
MeasureSystem random_nikishin(std::mt19937_64& rng, size_t min_atoms, size_t max_atoms);

MeasureSystem random_at_cauchy(std::mt19937_64& rng, size_t r, size_t base_atoms);

// Product of (x - root) factors with a random nonzero leading scale.
Polynomial random_real_rooted(std::mt19937_64& rng, int degree, bool allow_repeated_roots);

// Random nonzero polynomial of degree <= max_degree.
Polynomial random_polynomial(std::mt19937_64& rng, int max_degree);

}  // namespace moprl
