#pragma once

// Shared hand-checked fixtures.

#include "moprl/measure.hpp"

namespace fixtures {

using namespace moprl;

// mu_1 = {(-3/4, 1/2), (-1/4, 1/2)} on [-1, 0],
// mu_2 = {(1/4, 1/2), (3/4, 1/2)} on [0, 1]; supports touch at 0.
inline MeasureSystem angelesco_pair() {
    DiscreteMeasure mu1({{make_rational(-3, 4), make_rational(1, 2)},
                         {make_rational(-1, 4), make_rational(1, 2)}},
                        Interval(Rational(-1), Rational(0)));
    DiscreteMeasure mu2({{make_rational(1, 4), make_rational(1, 2)},
                         {make_rational(3, 4), make_rational(1, 2)}},
                        Interval(Rational(0), Rational(1)));
    return MeasureSystem::angelesco({mu1, mu2});
}

// symmetric three-atom measure {(-1, 1/3), (0, 1/3), (1, 1/3)}
inline DiscreteMeasure symmetric_three_atoms() {
    return DiscreteMeasure({{Rational(-1), make_rational(1, 3)},
                            {Rational(0), make_rational(1, 3)},
                            {Rational(1), make_rational(1, 3)}},
                           Interval(Rational(-2), Rational(2)));
}

inline MeasureSystem symmetric_three_atom_system() {
    return MeasureSystem::explicit_system({symmetric_three_atoms()});
}

// sigma_1 = {(1/4, 1/2), (3/4, 1/2)} on [0, 1], sigma_2 = {(2, 1/2), (3, 1/2)} on [2, 3]
inline DiscreteMeasure nikishin_sigma1() {
    return DiscreteMeasure({{make_rational(1, 4), make_rational(1, 2)},
                            {make_rational(3, 4), make_rational(1, 2)}},
                           Interval(Rational(0), Rational(1)));
}

inline DiscreteMeasure nikishin_sigma2() {
    return DiscreteMeasure({{Rational(2), make_rational(1, 2)},
                            {Rational(3), make_rational(1, 2)}},
                           Interval(Rational(2), Rational(3)));
}

inline MeasureSystem nikishin_pair() {
    return MeasureSystem::nikishin({nikishin_sigma1(), nikishin_sigma2()});
}

// base {(0, 1/2), (1/2, 1/4), (1, 1/4)} on [0, 1] with poles {2, 3}
inline MeasureSystem at_cauchy_example() {
    DiscreteMeasure base({{Rational(0), make_rational(1, 2)},
                          {make_rational(1, 2), make_rational(1, 4)},
                          {Rational(1), make_rational(1, 4)}},
                         Interval(Rational(0), Rational(1)));
    return MeasureSystem::at_cauchy(base, {Rational(2), Rational(3)});
}

// symmetric four-atom measure {(+-1/2, 1/4), (+-3/2, 1/4)}
inline DiscreteMeasure symmetric_four_atoms() {
    return DiscreteMeasure({{make_rational(-3, 2), make_rational(1, 4)},
                            {make_rational(-1, 2), make_rational(1, 4)},
                            {make_rational(1, 2), make_rational(1, 4)},
                            {make_rational(3, 2), make_rational(1, 4)}},
                           Interval(Rational(-2), Rational(2)));
}

}  // namespace fixtures
