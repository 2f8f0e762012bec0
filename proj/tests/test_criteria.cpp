#include "moprl/criteria.hpp"

#include "moprl/generators.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace moprl;

namespace {

const Polynomial* witness_poly(const CriterionReport& report, const char* label) {
    const Witness* w = report.find(label);
    REQUIRE(w != nullptr);
    return std::get_if<Polynomial>(&w->value);
}

}  // namespace

TEST_CASE("zero criterion type II hand fixtures") {
    CriterionReport report = verify_zero_criterion_type_ii(fixtures::angelesco_pair(),
                                                           MultiIndex{1, 1});
    CHECK(report.passed());
    const Polynomial expected(
        std::vector<Rational>{make_rational(-5, 16), Rational(0), Rational(1)});
    CHECK(*witness_poly(report, "D") == expected);
    CHECK(*witness_poly(report, "P") == expected);
    const Witness* exact = report.find("exact_constant_multiple");
    REQUIRE(exact != nullptr);
    CHECK(std::get<std::string>(exact->value) == "true");

    CriterionReport single = verify_zero_criterion_type_ii(fixtures::symmetric_three_atom_system(),
                                                           MultiIndex{1});
    CHECK(single.passed());
    CHECK(*witness_poly(single, "D") == Polynomial({0, -1}));
    CHECK(*witness_poly(single, "P") == Polynomial({0, 1}));

    CHECK(verify_zero_criterion_type_ii(fixtures::angelesco_pair(), MultiIndex{0, 0}).passed());
}

TEST_CASE("zero criterion type I hand fixtures") {
    // A^{(1)} = -1 has no zeros and D is the untransformed mu_2 moment
    CriterionReport report = verify_zero_criterion_type_i(fixtures::angelesco_pair(),
                                                          MultiIndex{1, 1}, 0);
    CHECK(report.passed());
    CHECK(*witness_poly(report, "D") == Polynomial::constant(Rational(1)));

    CHECK_THROWS_AS(verify_zero_criterion_type_i(fixtures::angelesco_pair(), MultiIndex{0, 1}, 0),
                    std::invalid_argument);

    // r=1, n=(2): A = (3/2) x vanishes at 0 and D(z) = -z
    CriterionReport single = verify_zero_criterion_type_i(fixtures::symmetric_three_atom_system(),
                                                          MultiIndex{2}, 0);
    CHECK(single.passed());
    CHECK(*witness_poly(single, "D") == Polynomial({0, -1}));
    CHECK(*witness_poly(single, "A") ==
          Polynomial(std::vector<Rational>{Rational(0), make_rational(3, 2)}));
}

TEST_CASE("interlacing criterion type II hand fixtures") {
    CriterionReport report = verify_interlace_criterion_type_ii(fixtures::angelesco_pair(),
                                                                MultiIndex{0, 0}, 0);
    CHECK(report.passed());
    CHECK(*witness_poly(report, "W") == Polynomial::constant(Rational(-1)));
    CHECK(*witness_poly(report, "D") == Polynomial::constant(Rational(1)));

    // r=1 classical pair P_2, P_1: W = -(x^2 + 2/3), D = z^2 + 2/3
    CriterionReport single = verify_interlace_criterion_type_ii(
        fixtures::symmetric_three_atom_system(), MultiIndex{1}, 0);
    CHECK(single.passed());
    const Polynomial expected_sf(
        std::vector<Rational>{make_rational(2, 3), Rational(0), Rational(1)});
    CHECK(*witness_poly(single, "sf(D)") == expected_sf);
    CHECK(*witness_poly(single, "sf(W)") == expected_sf);
    const Witness* crossed = single.find("interlace");
    REQUIRE(crossed != nullptr);
    CHECK(std::get<std::string>(crossed->value) == "interlace");
}

TEST_CASE("repeated-measure degenerate system fails with a determinant witness") {
    DiscreteMeasure m = fixtures::symmetric_three_atoms();
    MeasureSystem twin = MeasureSystem::explicit_system({m, m});

    CriterionReport zero = verify_zero_criterion_type_ii(twin, MultiIndex{1, 1});
    CHECK(zero.verdict == Verdict::Fail);
    REQUIRE(!zero.witnesses.empty());
    CHECK(std::get<Rational>(zero.witnesses[0].value) == Rational(0));

    CriterionReport interlace = verify_interlace_criterion_type_ii(twin, MultiIndex{1, 0}, 1);
    CHECK(interlace.verdict == Verdict::Fail);
    CHECK(interlace.find("det H at (1,1)") != nullptr);
}

TEST_CASE("neighbor interlacing hand fixtures") {
    CriterionReport report = verify_interlace_criterion_neighbors(fixtures::angelesco_pair(),
                                                                  MultiIndex{0, 0}, 0, 1);
    CHECK(report.passed());
    CHECK(*witness_poly(report, "W") == Polynomial::constant(Rational(1)));
    CHECK(*witness_poly(report, "D") == Polynomial::constant(Rational(1)));

    CHECK_THROWS_AS(
        verify_interlace_criterion_neighbors(fixtures::angelesco_pair(), MultiIndex{0, 0}, 1, 1),
        std::invalid_argument);
}

TEST_CASE("interlacing criterion type I hand fixture") {
    // r=1, n=(3) on the symmetric four-atom measure:
    // A_(3) = x^2 - 5/4, A_(2) = (4/5) x, sf(W) = sf(D) = z^2 + 5/4
    MeasureSystem system = MeasureSystem::explicit_system({fixtures::symmetric_four_atoms()});
    CriterionReport report = verify_interlace_criterion_type_i(system, MultiIndex{3}, 0, 0);
    CHECK(report.passed());
    const Polynomial expected_sf(
        std::vector<Rational>{make_rational(5, 4), Rational(0), Rational(1)});
    CHECK(*witness_poly(report, "sf(D)") == expected_sf);
    CHECK(*witness_poly(report, "sf(W)") == expected_sf);

    CHECK_THROWS_AS(verify_interlace_criterion_type_i(system, MultiIndex{1}, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("andreief identity hand fixture") {
    DiscreteMeasure m({{Rational(0), make_rational(1, 2)}, {Rational(1), make_rational(1, 2)}});
    std::vector<Polynomial> basis{Polynomial::constant(Rational(1)), Polynomial::variable()};
    CriterionReport report = verify_andreief(m, basis, basis, {});
    CHECK(report.passed());
    CHECK(std::get<Rational>(report.find("lhs")->value) == make_rational(1, 4));
    CHECK(std::get<Rational>(report.find("rhs")->value) == make_rational(1, 4));

    // M = 1 reduces to linearity of the integral
    std::vector<Polynomial> one{Polynomial::constant(Rational(1))};
    std::vector<std::vector<Rational>> a{{Rational(2), Rational(3)}};
    CHECK(verify_andreief(m, one, basis, a).passed());

    // equal psi columns force both sides to zero
    std::vector<Polynomial> repeated{Polynomial::variable(), Polynomial::variable()};
    CriterionReport degenerate = verify_andreief(m, basis, repeated, {});
    CHECK(degenerate.passed());
    CHECK(std::get<Rational>(degenerate.find("lhs")->value) == Rational(0));

    CHECK_THROWS_AS(verify_andreief(m, basis, one, {}), std::invalid_argument);
}

TEST_CASE("andreief holds on random instances") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        DiscreteMeasure m = random_measure_on(rng, Interval(Rational(-1), Rational(1)),
                                              static_cast<size_t>(uniform_long(rng, 2, 5)));
        const size_t nn = static_cast<size_t>(uniform_long(rng, 1, 4));
        const size_t mm = static_cast<size_t>(uniform_long(rng, 1, static_cast<long>(nn)));
        std::vector<Polynomial> phis;
        std::vector<Polynomial> psis;
        for (size_t i = 0; i < mm; ++i) phis.push_back(random_polynomial(rng, 3));
        for (size_t i = 0; i < nn; ++i) psis.push_back(random_polynomial(rng, 3));
        std::vector<std::vector<Rational>> a(nn - mm, std::vector<Rational>(nn));
        for (auto& row : a) {
            for (auto& v : row) v = make_rational(uniform_long(rng, -4, 4), uniform_long(rng, 1, 3));
        }
        CHECK(verify_andreief(m, phis, psis, a).passed());
    }
}

TEST_CASE("perturbation lemma hand fixtures") {
    MeasureSystem system = fixtures::angelesco_pair();
    CHECK(verify_perturbation_lemma(system, Polynomial{}, MultiIndex{1, 1}).passed());
    CHECK(verify_perturbation_lemma(system, Polynomial::constant(Rational(1)), MultiIndex{1, 1})
              .passed());

    // q = x with n = (2, 1) on a 3+3-atom system
    DiscreteMeasure mu1({{make_rational(-3, 4), make_rational(1, 2)},
                         {make_rational(-1, 2), make_rational(1, 3)},
                         {make_rational(-1, 4), make_rational(1, 2)}},
                        Interval(Rational(-1), Rational(0)));
    DiscreteMeasure mu2({{make_rational(1, 4), make_rational(1, 2)},
                         {make_rational(1, 2), make_rational(1, 5)},
                         {make_rational(3, 4), make_rational(1, 2)}},
                        Interval(Rational(0), Rational(1)));
    MeasureSystem bigger = MeasureSystem::angelesco({mu1, mu2});
    CHECK(verify_perturbation_lemma(bigger, Polynomial::variable(), MultiIndex{2, 1}).passed());

    CHECK_THROWS_WITH_AS(
        verify_perturbation_lemma(system, Polynomial::variable(), MultiIndex{1, 1}),
        "lemma hypotheses not met: need n_2 <= n_1 - deg q", std::invalid_argument);
}

TEST_CASE("angelesco zero count hand fixtures") {
    CHECK(verify_angelesco_zero_count(fixtures::angelesco_pair(), MultiIndex{1, 1}).passed());
    CHECK(verify_angelesco_zero_count(fixtures::angelesco_pair(), MultiIndex{1, 0}).passed());
    CHECK(verify_angelesco_zero_count(fixtures::angelesco_pair(), MultiIndex{0, 0}).passed());
    CHECK_THROWS_AS(verify_angelesco_zero_count(fixtures::symmetric_three_atom_system(),
                                                MultiIndex{1}),
                    std::invalid_argument);
}

TEST_CASE("AT zero location hand fixtures") {
    CHECK(verify_at_zero_location(fixtures::at_cauchy_example(), MultiIndex{1, 1}).passed());

    // atoms strictly inside the interval keep the conclusion valid up to the
    // full atom budget
    DiscreteMeasure base({{make_rational(1, 8), make_rational(1, 2)},
                          {make_rational(1, 2), make_rational(1, 4)},
                          {make_rational(7, 8), make_rational(1, 4)}},
                         Interval(Rational(0), Rational(1)));
    MeasureSystem pair = MeasureSystem::at_cauchy(base, {Rational(2), Rational(3)});
    CHECK(verify_at_zero_location(pair, MultiIndex{2, 1}).passed());
    MeasureSystem single = MeasureSystem::at_cauchy(base, {Rational(2)});
    CHECK(verify_at_zero_location(single, MultiIndex{2}).passed());

    CHECK_THROWS_AS(verify_at_zero_location(fixtures::at_cauchy_example(), MultiIndex{3, 3}),
                    std::invalid_argument);
}

TEST_CASE("nikishin type I location fixtures") {
    std::mt19937_64 rng(73);
    DiscreteMeasure sigma1 = random_measure_on(rng, Interval(Rational(0), Rational(1)), 5);
    DiscreteMeasure sigma2 = random_measure_on(rng, Interval(Rational(2), Rational(3)), 5);
    MeasureSystem rich = MeasureSystem::nikishin({sigma1, sigma2});

    // constant components are vacuous passes
    CHECK(verify_nikishin_type_i_location(rich, MultiIndex{1, 2}, 0).passed());
    CHECK(verify_nikishin_type_i_location(rich, MultiIndex{2, 1}, 1).passed());

    // n = (2,3), j = 1: deg A^{(1)} = 1, the root must land inside (2, 3)
    CriterionReport report = verify_nikishin_type_i_location(rich, MultiIndex{2, 3}, 0);
    CHECK(report.passed());
    CHECK(witness_poly(report, "A")->degree() == 1);

    CHECK_THROWS_WITH_AS(verify_nikishin_type_i_location(rich, MultiIndex{3, 1}, 0),
                         "outside theorem hypotheses for index (3,1)", std::invalid_argument);
    CHECK_THROWS_AS(verify_nikishin_type_i_location(fixtures::angelesco_pair(), MultiIndex{1, 2}, 0),
                    std::invalid_argument);
}

TEST_CASE("nikishin type I interlacing fixtures") {
    std::mt19937_64 rng(79);
    DiscreteMeasure sigma1 = random_measure_on(rng, Interval(Rational(0), Rational(1)), 8);
    DiscreteMeasure sigma2 = random_measure_on(rng, Interval(Rational(2), Rational(3)), 8);
    MeasureSystem rich = MeasureSystem::nikishin({sigma1, sigma2});

    // small-degree regimes are vacuous
    CHECK(verify_nikishin_type_i_interlacing(rich, MultiIndex{1, 2}, 0).passed());

    CHECK(verify_nikishin_type_i_interlacing(rich, MultiIndex{3, 4}, 0).passed());
    CHECK(verify_nikishin_type_i_interlacing(rich, MultiIndex{4, 3}, 1).passed());

    // the (2,3) triple contains the step-line member A^{(1)}_(2,2); interlacing
    // certifies its real-rootedness
    CriterionReport step = verify_nikishin_type_i_interlacing(rich, MultiIndex{2, 3}, 0);
    CHECK(step.passed());
    Polynomial a_22 = solve_type_i(rich, MultiIndex{2, 2}).components[0];
    CHECK(a_22.degree() == 1);
    CHECK(is_real_rooted(a_22));

    CHECK_THROWS_AS(verify_nikishin_type_i_interlacing(rich, MultiIndex{4, 2}, 0),
                    std::invalid_argument);
}

TEST_CASE("higher wronskian consistency reductions") {
    MeasureSystem system = fixtures::angelesco_pair();

    // order 1 reduces to the zero-location criteria
    CriterionReport high1 = verify_higher_wronskian(system, IncreasingPath(MultiIndex{1, 1}, {}),
                                                    PolynomialFamily::TypeII);
    CriterionReport zero = verify_zero_criterion_type_ii(system, MultiIndex{1, 1});
    CHECK(high1.passed());
    CHECK(*witness_poly(high1, "sf(D)") == *witness_poly(zero, "sf(D)"));
    CHECK(*witness_poly(high1, "sf(W)") == *witness_poly(zero, "sf(P)"));

    // order 2 reduces to the interlacing criteria (path direction = slot)
    CriterionReport high2 = verify_higher_wronskian(system, IncreasingPath(MultiIndex{0, 0}, {0}),
                                                    PolynomialFamily::TypeII);
    CriterionReport inter = verify_interlace_criterion_type_ii(system, MultiIndex{0, 0}, 0);
    CHECK(high2.passed());
    CHECK(*witness_poly(high2, "sf(D)") == *witness_poly(inter, "sf(D)"));
    CHECK(*witness_poly(high2, "sf(W)") == *witness_poly(inter, "sf(W)"));

    MeasureSystem four = MeasureSystem::explicit_system({fixtures::symmetric_four_atoms()});
    CriterionReport high_i = verify_higher_wronskian(four, IncreasingPath(MultiIndex{2}, {0}),
                                                     PolynomialFamily::TypeI, 0);
    CriterionReport inter_i = verify_interlace_criterion_type_i(four, MultiIndex{3}, 0, 0);
    CHECK(high_i.passed());
    CHECK(*witness_poly(high_i, "sf(D)") == *witness_poly(inter_i, "sf(D)"));
    CHECK(*witness_poly(high_i, "sf(W)") == *witness_poly(inter_i, "sf(W)"));
}

TEST_CASE("higher wronskian order four on the extended angelesco example") {
    DiscreteMeasure mu1({{make_rational(-7, 8), make_rational(1, 2)},
                         {make_rational(-5, 8), make_rational(1, 4)},
                         {make_rational(-3, 8), make_rational(1, 4)},
                         {make_rational(-1, 8), make_rational(1, 2)}},
                        Interval(Rational(-1), Rational(0)));
    DiscreteMeasure mu2({{make_rational(1, 8), make_rational(1, 2)},
                         {make_rational(3, 8), make_rational(1, 4)},
                         {make_rational(5, 8), make_rational(1, 4)},
                         {make_rational(7, 8), make_rational(1, 2)}},
                        Interval(Rational(0), Rational(1)));
    MeasureSystem system = MeasureSystem::angelesco({mu1, mu2});
    IncreasingPath step_line(MultiIndex{0, 0}, {0, 1, 0});
    CHECK(verify_higher_wronskian(system, step_line, PolynomialFamily::TypeII).passed());
    CHECK(verify_even_wronskian_nonvanishing(system, step_line, PolynomialFamily::TypeII).passed());
}

TEST_CASE("even wronskian hand fixtures") {
    CriterionReport classical = verify_even_wronskian_nonvanishing(
        fixtures::symmetric_three_atom_system(), IncreasingPath(MultiIndex{1}, {0}),
        PolynomialFamily::TypeII);
    CHECK(classical.passed());
    CHECK(*witness_poly(classical, "W") ==
          Polynomial(std::vector<Rational>{make_rational(2, 3), Rational(0), Rational(1)}));

    CriterionReport angelesco = verify_even_wronskian_nonvanishing(
        fixtures::angelesco_pair(), IncreasingPath(MultiIndex{0, 0}, {0}),
        PolynomialFamily::TypeII);
    CHECK(angelesco.passed());

    CHECK_THROWS_AS(
        verify_even_wronskian_nonvanishing(fixtures::angelesco_pair(),
                                           IncreasingPath(MultiIndex{0, 0}, {0, 1}),
                                           PolynomialFamily::TypeII),
        std::invalid_argument);
}

TEST_CASE("quasi-orthogonality fixtures") {
    // P_n of a single measure has exactly n roots inside
    Polynomial p2 = solve_type_ii(fixtures::symmetric_three_atom_system(), MultiIndex{2});
    CHECK(verify_quasiorthogonality(fixtures::symmetric_three_atoms(), p2, 2).passed());

    // P_(1,1) against mu_1 alone with one condition
    Polynomial p11 = solve_type_ii(fixtures::angelesco_pair(), MultiIndex{1, 1});
    CHECK(verify_quasiorthogonality(fixtures::angelesco_pair().measure(0), p11, 1).passed());

    CHECK(verify_quasiorthogonality(fixtures::symmetric_three_atoms(),
                                    Polynomial::constant(Rational(3)), 0)
              .passed());

    CHECK_THROWS_WITH_AS(
        verify_quasiorthogonality(fixtures::symmetric_three_atoms(), Polynomial::variable(), 2),
        "p is not quasi-orthogonal", std::invalid_argument);
}

TEST_CASE("conjecture probe: determinant is an exact constant multiple") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        MeasureSystem system = random_angelesco(rng, 2, 5);
        CriterionReport report = verify_zero_criterion_type_ii(system, MultiIndex{2, 1});
        CHECK(report.passed());
        // leading-coefficient analysis predicts kappa = (-1)^{|n|} det H_n
        const Witness* kappa = report.find("kappa");
        REQUIRE(kappa != nullptr);
        Rational expected = -det_exact(build_H(system, MultiIndex{2, 1}));
        CHECK(std::get<Rational>(kappa->value) == expected);
    }
}
