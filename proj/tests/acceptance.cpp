// Acceptance suite: one pass/fail line per criterion, exact (zero-tolerance)
// checks throughout. Returns the number of failed criteria.

#include "moprl/criteria.hpp"
#include "moprl/generators.hpp"
#include "moprl/interlace.hpp"
#include "moprl/parallel.hpp"
#include "moprl/solver.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace moprl;

namespace {

constexpr uint64_t kAngelescoSeed = 0xA73C0;
constexpr uint64_t kNikishinSeed = 0x41B5E;
constexpr uint64_t kAtSeed = 0x26D11;
constexpr uint64_t kPairSeed = 0x5EED5;

struct Tally {
    long checks = 0;
    long passes = 0;
    long probe_hits = 0;   // conjecture probe: exact constant multiple
    long probe_total = 0;
    long control_hits = 0;  // negative control: conclusion held anyway
    long control_total = 0;
    std::vector<std::string> failures;

    void note(const std::string& label, bool ok) {
        ++checks;
        if (ok) {
            ++passes;
        } else if (failures.size() < 5) {
            failures.push_back(label);
        }
    }
    void merge(const Tally& other) {
        checks += other.checks;
        passes += other.passes;
        probe_hits += other.probe_hits;
        probe_total += other.probe_total;
        control_hits += other.control_hits;
        control_total += other.control_total;
        for (const auto& f : other.failures) {
            if (failures.size() < 5) failures.push_back(f);
        }
    }
    bool all_pass() const { return checks > 0 && passes == checks; }
};

std::vector<MultiIndex> indices_up_to(int cap) {
    std::vector<MultiIndex> out;
    for (int n1 = 0; n1 <= cap; ++n1) {
        for (int n2 = 0; n2 + n1 <= cap; ++n2) out.push_back(MultiIndex{n1, n2});
    }
    return out;
}

std::vector<MeasureSystem> angelesco_suite(size_t count) {
    std::vector<size_t> ids(count);
    for (size_t i = 0; i < count; ++i) ids[i] = i;
    return parallel_map(ids, [](size_t i) {
        std::mt19937_64 rng(kAngelescoSeed + i);
        return random_angelesco(rng, 2, 8);
    });
}

std::vector<MeasureSystem> nikishin_suite(size_t count) {
    std::vector<size_t> ids(count);
    for (size_t i = 0; i < count; ++i) ids[i] = i;
    return parallel_map(ids, [](size_t i) {
        std::mt19937_64 rng(kNikishinSeed + i);
        return random_nikishin(rng, 5, 8);
    });
}

std::vector<MeasureSystem> at_suite(size_t count) {
    std::vector<size_t> ids(count);
    for (size_t i = 0; i < count; ++i) ids[i] = i;
    return parallel_map(ids, [](size_t i) {
        std::mt19937_64 rng(kAtSeed + i);
        return random_at_cauchy(rng, i % 4 == 0 ? 3 : 2, 8);
    });
}

bool probe_exact_multiple(const CriterionReport& report) {
    const Witness* w = report.find("exact_constant_multiple");
    return w != nullptr && std::get<std::string>(w->value) == "true";
}

// --- criterion 1 -----------------------------------------------------------

Tally fixture_exactness() {
    Tally tally;

    DiscreteMeasure mu1({{make_rational(-3, 4), make_rational(1, 2)},
                         {make_rational(-1, 4), make_rational(1, 2)}},
                        Interval(Rational(-1), Rational(0)));
    DiscreteMeasure mu2({{make_rational(1, 4), make_rational(1, 2)},
                         {make_rational(3, 4), make_rational(1, 2)}},
                        Interval(Rational(0), Rational(1)));
    MeasureSystem angelesco = MeasureSystem::angelesco({mu1, mu2});
    const Polynomial x2_m516(
        std::vector<Rational>{make_rational(-5, 16), Rational(0), Rational(1)});

    tally.note("P_(1,1)", solve_type_ii(angelesco, MultiIndex{1, 1}) == x2_m516);

    TypeIVector a = solve_type_i(angelesco, MultiIndex{1, 1});
    tally.note("A_(1,1)", a.components[0] == Polynomial::constant(Rational(-1)) &&
                              a.components[1] == Polynomial::constant(Rational(1)));

    DiscreteMeasure symmetric({{Rational(-1), make_rational(1, 3)},
                               {Rational(0), make_rational(1, 3)},
                               {Rational(1), make_rational(1, 3)}});
    MeasureSystem classical = MeasureSystem::explicit_system({symmetric});
    tally.note("P_2",
               solve_type_ii(classical, MultiIndex{2}) ==
                   Polynomial(std::vector<Rational>{make_rational(-2, 3), Rational(0), Rational(1)}));

    tally.note("D(z) Deg1All",
               det_H_in_z(angelesco, MultiIndex{1, 1}, ChristoffelSpec::all(1)) == x2_m516);

    DiscreteMeasure two_point(
        {{Rational(0), make_rational(1, 2)}, {Rational(1), make_rational(1, 2)}});
    std::vector<Polynomial> basis{Polynomial::constant(Rational(1)), Polynomial::variable()};
    CriterionReport andreief = verify_andreief(two_point, basis, basis, {});
    tally.note("Andreief 1/4",
               andreief.passed() &&
                   std::get<Rational>(andreief.find("lhs")->value) == make_rational(1, 4));
    return tally;
}

// --- criteria 2-4: the Angelesco suite --------------------------------------

Tally zero_location_suite(const std::vector<MeasureSystem>& systems) {
    std::vector<size_t> ids(systems.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [&](size_t i) {
        Tally tally;
        const MeasureSystem& system = systems[i];
        for (const MultiIndex& n : indices_up_to(6)) {
            CriterionReport zero_ii = verify_zero_criterion_type_ii(system, n);
            zero_ii.seed = kAngelescoSeed + i;
            tally.note("system " + std::to_string(i) + " zero-ii " + n.str(), zero_ii.passed());
            tally.probe_total += 1;
            if (probe_exact_multiple(zero_ii)) tally.probe_hits += 1;
            for (size_t j = 0; j < system.size(); ++j) {
                if (n[j] < 1) continue;
                tally.note("system " + std::to_string(i) + " zero-i " + n.str(),
                           verify_zero_criterion_type_i(system, n, j).passed());
            }
        }
        return tally;
    });
    Tally total;
    for (const Tally& t : parts) total.merge(t);
    return total;
}

Tally interlacing_suite(const std::vector<MeasureSystem>& systems) {
    // Angelesco polynomials are always real-rooted, so every passing check
    // must also carry a positive interlace confirmation.
    auto passed_and_interlaced = [](const CriterionReport& report) {
        const Witness* confirmation = report.find("interlace");
        return report.passed() && confirmation != nullptr &&
               std::get<std::string>(confirmation->value) == "interlace";
    };
    std::vector<size_t> ids(systems.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [&](size_t i) {
        Tally tally;
        const MeasureSystem& system = systems[i];
        for (const MultiIndex& n : indices_up_to(6)) {
            for (size_t j = 0; j < system.size(); ++j) {
                tally.note("system " + std::to_string(i) + " interlace-ii " + n.str(),
                           passed_and_interlaced(
                               verify_interlace_criterion_type_ii(system, n, j)));
            }
            tally.note("system " + std::to_string(i) + " neighbors " + n.str(),
                       passed_and_interlaced(
                           verify_interlace_criterion_neighbors(system, n, 0, 1)));
            for (size_t j = 0; j < system.size(); ++j) {
                if (n[j] < 2) continue;
                for (size_t l = 0; l < system.size(); ++l) {
                    if (n[l] < 1) continue;
                    tally.note("system " + std::to_string(i) + " interlace-i " + n.str(),
                               passed_and_interlaced(
                                   verify_interlace_criterion_type_i(system, n, l, j)));
                }
            }
        }
        return tally;
    });
    Tally total;
    for (const Tally& t : parts) total.merge(t);
    return total;
}

Tally angelesco_count_suite(const std::vector<MeasureSystem>& systems) {
    std::vector<size_t> ids(systems.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [&](size_t i) {
        Tally tally;
        for (const MultiIndex& n : indices_up_to(6)) {
            tally.note("system " + std::to_string(i) + " count " + n.str(),
                       verify_angelesco_zero_count(systems[i], n).passed());
        }
        return tally;
    });
    Tally total;
    for (const Tally& t : parts) total.merge(t);
    return total;
}

// --- criterion 5: Nikishin type I -------------------------------------------

Tally nikishin_suite_checks(const std::vector<MeasureSystem>& systems) {
    std::vector<size_t> ids(systems.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [&](size_t i) {
        Tally tally;
        const MeasureSystem& system = systems[i];
        for (const MultiIndex& n : indices_up_to(6)) {
            if (!support_richness_ok(system, n)) continue;
            for (size_t j = 0; j < 2; ++j) {
                const bool in_regime = (j == 0) ? (n[0] + 1 <= n[1]) : (n[0] + 1 >= n[1]);
                if (!in_regime) continue;
                if (n[static_cast<size_t>(j)] >= 1) {
                    tally.note("system " + std::to_string(i) + " location " + n.str(),
                               verify_nikishin_type_i_location(system, n, j).passed());
                }
                if (n[0] >= 1 && n[1] >= 1) {
                    tally.note("system " + std::to_string(i) + " interlacing " + n.str(),
                               verify_nikishin_type_i_interlacing(system, n, j).passed());
                }
            }
        }
        // negative control, recorded but never asserted: A^{(1)} at the
        // out-of-regime index (2,1)
        MultiIndex control{2, 1};
        if (support_richness_ok(system, control)) {
            NikishinRootObservation obs = observe_nikishin_type_i_roots(system, control, 0);
            tally.control_total += 1;
            if (obs.real_rooted && obs.all_simple && obs.all_in_gamma2) tally.control_hits += 1;
        }
        return tally;
    });
    Tally total;
    for (const Tally& t : parts) total.merge(t);
    return total;
}

// --- criterion 6: perfectness evidence ---------------------------------------

Tally perfectness_suite(const std::vector<MeasureSystem>& angelesco,
                        const std::vector<MeasureSystem>& nikishin,
                        const std::vector<MeasureSystem>& at_systems) {
    Tally total;

    std::vector<size_t> ids(angelesco.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [&](size_t i) {
        Tally tally;
        const MeasureSystem& system = angelesco[i];
        for (int n1 = 0; n1 <= 8; ++n1) {
            for (int n2 = 0; n2 <= 8; ++n2) {
                MultiIndex n{n1, n2};
                if (!support_richness_ok(system, n)) continue;
                tally.note("angelesco " + std::to_string(i) + " det>0 " + n.str(),
                           det_exact(build_H(system, n)) > 0);
            }
        }
        return tally;
    });
    for (const Tally& t : parts) total.merge(t);

    ids.assign(nikishin.size(), 0);
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    parts = parallel_map(ids, [&](size_t i) {
        Tally tally;
        const MeasureSystem& system = nikishin[i];
        for (int n1 = 0; n1 <= 8; ++n1) {
            for (int n2 = 0; n2 <= 8; ++n2) {
                MultiIndex n{n1, n2};
                if (!support_richness_ok(system, n)) continue;
                tally.note("nikishin " + std::to_string(i) + " normal " + n.str(),
                           det_exact(build_H(system, n)) != 0);
            }
        }
        return tally;
    });
    for (const Tally& t : parts) total.merge(t);

    ids.assign(at_systems.size(), 0);
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    parts = parallel_map(ids, [&](size_t i) {
        Tally tally;
        const MeasureSystem& system = at_systems[i];
        const size_t r = system.size();
        std::vector<int> bounds(r, 8);
        std::vector<int> current(r, 0);
        while (true) {
            MultiIndex n{current};
            // the simple-pole CV family is AT only for these indices
            if (support_richness_ok(system, n) && cauchy_vandermonde_at_index(n)) {
                tally.note("at " + std::to_string(i) + " normal " + n.str(),
                           det_exact(build_H(system, n)) != 0);
            }
            size_t pos = r;
            bool done = true;
            while (pos-- > 0) {
                if (++current[pos] <= bounds[pos]) {
                    done = false;
                    break;
                }
                current[pos] = 0;
                if (pos == 0) break;
            }
            if (done) break;
        }

        // AT invariants: sampled Chebyshev sign, zero location, interlacing
        MultiIndex sample{std::vector<int>(r, 1)};
        tally.note("at " + std::to_string(i) + " chebyshev",
                   chebyshev_sample_check(system, sample, 30, kAtSeed + i));
        for (const MultiIndex& n : indices_up_to(3)) {
            if (n.order() != r) break;  // r = 3 systems skip the 2d enumeration
            tally.note("at " + std::to_string(i) + " location " + n.str(),
                       verify_at_zero_location(system, n).passed());
            if (n.total() <= 2) {
                for (size_t j = 0; j < r; ++j) {
                    tally.note("at " + std::to_string(i) + " interlace " + n.str(),
                               verify_interlace_criterion_type_ii(system, n, j).passed());
                }
            }
        }
        return tally;
    });
    for (const Tally& t : parts) total.merge(t);
    return total;
}

// --- criterion 7: Andreief --------------------------------------------------

Tally andreief_suite() {
    std::vector<size_t> ids(100);
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [](size_t i) {
        Tally tally;
        std::mt19937_64 rng(kPairSeed + i);
        DiscreteMeasure m = random_measure_on(rng, Interval(Rational(-1), Rational(1)),
                                              static_cast<size_t>(uniform_long(rng, 2, 6)));
        const size_t nn = static_cast<size_t>(uniform_long(rng, 1, 5));
        const size_t mm = static_cast<size_t>(uniform_long(rng, 1, static_cast<long>(nn)));
        std::vector<Polynomial> phis;
        std::vector<Polynomial> psis;
        for (size_t q = 0; q < mm; ++q) phis.push_back(random_polynomial(rng, 3));
        for (size_t q = 0; q < nn; ++q) psis.push_back(random_polynomial(rng, 3));
        std::vector<std::vector<Rational>> a(nn - mm, std::vector<Rational>(nn));
        for (auto& row : a) {
            for (auto& v : row) v = make_rational(uniform_long(rng, -4, 4), uniform_long(rng, 1, 3));
        }
        tally.note("andreief " + std::to_string(i), verify_andreief(m, phis, psis, a).passed());
        return tally;
    });
    Tally total;
    for (const Tally& t : parts) total.merge(t);
    return total;
}

// --- criterion 8: perturbation lemma -----------------------------------------

Tally perturbation_suite() {
    std::vector<size_t> ids(50);
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [](size_t i) {
        Tally tally;
        std::mt19937_64 rng(kPairSeed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
        MeasureSystem system = random_angelesco(rng, 2, 8);
        const int deg_q = static_cast<int>(uniform_long(rng, 0, 2));
        std::vector<Rational> coeffs;
        for (int d = 0; d <= deg_q; ++d) {
            coeffs.push_back(make_rational(uniform_long(rng, -4, 4), uniform_long(rng, 1, 3)));
        }
        if (coeffs.back() == 0) coeffs.back() = Rational(1);
        Polynomial q(coeffs);
        const int n1 = static_cast<int>(uniform_long(rng, std::max(1L, long(deg_q)), 5));
        const int n2 = static_cast<int>(uniform_long(rng, 0, n1 - deg_q));
        tally.note("perturbation " + std::to_string(i),
                   verify_perturbation_lemma(system, q, MultiIndex{n1, n2}).passed());
        return tally;
    });
    Tally total;
    for (const Tally& t : parts) total.merge(t);
    return total;
}

// --- criterion 9: higher Wronskians -------------------------------------------

Tally higher_wronskian_suite(const std::vector<MeasureSystem>& angelesco,
                             const std::vector<MeasureSystem>& nikishin,
                             const std::vector<MeasureSystem>& at_systems) {
    struct Job {
        const MeasureSystem* system;
        uint64_t seed;
        bool type_i_too;
        bool at_shape;  // keep every path index AT-valid for the CV family
    };
    std::vector<Job> jobs;
    for (size_t i = 0; i < 30 && i < angelesco.size(); ++i) {
        jobs.push_back({&angelesco[i], kAngelescoSeed + 1000 + i, true, false});
    }
    for (size_t i = 0; i < 20 && i < nikishin.size(); ++i) {
        jobs.push_back({&nikishin[i], kNikishinSeed + 1000 + i, false, false});
    }
    for (size_t i = 0; i < 20 && i < at_systems.size(); ++i) {
        jobs.push_back({&at_systems[i], kAtSeed + 1000 + i, false, true});
    }

    std::vector<Tally> parts = parallel_map(jobs, [](const Job& job) {
        Tally tally;
        const MeasureSystem& system = *job.system;
        const size_t r = system.size();
        std::mt19937_64 rng(job.seed);
        auto random_steps = [&](size_t count) {
            std::vector<size_t> steps;
            for (size_t s = 0; s < count; ++s) {
                steps.push_back(static_cast<size_t>(uniform_long(rng, 0, static_cast<long>(r) - 1)));
            }
            return steps;
        };
        auto random_start = [&](int cap) {
            std::vector<int> parts_(r, 0);
            for (size_t j = 0; j < r; ++j) parts_[j] = static_cast<int>(uniform_long(rng, 0, cap));
            return MultiIndex{parts_};
        };

        for (size_t order : {size_t(2), size_t(4)}) {
            IncreasingPath path = [&] {
                if (!job.at_shape) {
                    return IncreasingPath(random_start(order == 2 ? 2 : 1),
                                          random_steps(order - 1));
                }
                // single growing slot keeps each index AT-valid for the
                // simple-pole CV family
                const size_t big = static_cast<size_t>(uniform_long(rng, 0, static_cast<long>(r) - 1));
                std::vector<int> start_parts(r, 1);
                if (order == 2) start_parts[big] = static_cast<int>(uniform_long(rng, 1, 2));
                return IncreasingPath(MultiIndex{start_parts},
                                      std::vector<size_t>(order - 1, big));
            }();
            tally.note(system.summary() + " even ii l=" + std::to_string(order),
                       verify_even_wronskian_nonvanishing(system, path, PolynomialFamily::TypeII)
                           .passed());
            tally.note(system.summary() + " higher ii l=" + std::to_string(order),
                       verify_higher_wronskian(system, path, PolynomialFamily::TypeII).passed());
        }
        if (job.type_i_too) {
            for (size_t order : {size_t(2), size_t(4)}) {
                // steps stay in the slot direction so the component degrees
                // strictly increase and the Wronskian is nondegenerate
                const size_t slot = static_cast<size_t>(uniform_long(rng, 0, 1));
                std::vector<int> start_parts(r, 1);
                start_parts[slot] = 2;
                IncreasingPath path(MultiIndex{start_parts},
                                    std::vector<size_t>(order - 1, slot));
                tally.note(system.summary() + " even i l=" + std::to_string(order),
                           verify_even_wronskian_nonvanishing(system, path,
                                                              PolynomialFamily::TypeI, slot)
                               .passed());
                tally.note(system.summary() + " higher i l=" + std::to_string(order),
                           verify_higher_wronskian(system, path, PolynomialFamily::TypeI, slot)
                               .passed());
            }
        }
        return tally;
    });
    Tally total;
    for (const Tally& t : parts) total.merge(t);
    return total;
}

// --- criterion 10: internal consistency ----------------------------------------

Tally consistency_suite(const std::vector<MeasureSystem>& angelesco) {
    Tally total;

    // 1000 random pairs through both interlacing routes; interlace_decide
    // throws if the routes ever disagree
    std::vector<size_t> ids(1000);
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<Tally> parts = parallel_map(ids, [](size_t i) {
        Tally tally;
        std::mt19937_64 rng(kPairSeed + 7000 + i);
        const int deg_q = static_cast<int>(uniform_long(rng, 1, 5));
        Polynomial q = random_real_rooted(rng, deg_q, uniform_long(rng, 0, 4) == 0);
        Polynomial p = (uniform_long(rng, 0, 1) == 0)
                           ? random_real_rooted(
                                 rng, static_cast<int>(uniform_long(rng, 0, deg_q + 1)), false)
                           : random_polynomial(rng, q.degree() + 1);
        try {
            (void)interlace_decide(p, q);
            tally.note("pair " + std::to_string(i), true);
        } catch (const std::logic_error&) {
            tally.note("pair " + std::to_string(i) + " routes disagree", false);
        }
        return tally;
    });
    for (const Tally& t : parts) total.merge(t);

    // order-1 and order-2 higher-Wronskian checks reproduce the dedicated
    // criteria verbatim (verdicts and monic squarefree witnesses)
    auto sf_witness = [](const CriterionReport& report, const char* label) {
        const Witness* w = report.find(label);
        return w ? std::get<Polynomial>(w->value) : Polynomial{};
    };
    for (size_t i = 0; i < 20 && i < angelesco.size(); ++i) {
        const MeasureSystem& system = angelesco[i];
        const MultiIndex n{2, 1};

        CriterionReport high1 = verify_higher_wronskian(system, IncreasingPath(n, {}),
                                                        PolynomialFamily::TypeII);
        CriterionReport zero_ii = verify_zero_criterion_type_ii(system, n);
        total.note("reduction l=1 ii " + std::to_string(i),
                   high1.verdict == zero_ii.verdict &&
                       sf_witness(high1, "sf(D)") == sf_witness(zero_ii, "sf(D)") &&
                       sf_witness(high1, "sf(W)") == sf_witness(zero_ii, "sf(P)"));

        CriterionReport high1i = verify_higher_wronskian(system, IncreasingPath(n, {}),
                                                         PolynomialFamily::TypeI, 0);
        CriterionReport zero_i = verify_zero_criterion_type_i(system, n, 0);
        total.note("reduction l=1 i " + std::to_string(i),
                   high1i.verdict == zero_i.verdict &&
                       sf_witness(high1i, "sf(D)") == sf_witness(zero_i, "sf(D)") &&
                       sf_witness(high1i, "sf(W)") == sf_witness(zero_i, "sf(A)"));

        for (size_t j = 0; j < system.size(); ++j) {
            CriterionReport high2 = verify_higher_wronskian(system, IncreasingPath(n, {j}),
                                                            PolynomialFamily::TypeII);
            CriterionReport inter = verify_interlace_criterion_type_ii(system, n, j);
            total.note("reduction l=2 ii " + std::to_string(i),
                       high2.verdict == inter.verdict &&
                           sf_witness(high2, "sf(D)") == sf_witness(inter, "sf(D)") &&
                           sf_witness(high2, "sf(W)") == sf_witness(inter, "sf(W)"));
        }

        CriterionReport high2i = verify_higher_wronskian(system, IncreasingPath(n, {0}),
                                                         PolynomialFamily::TypeI, 0);
        CriterionReport inter_i = verify_interlace_criterion_type_i(system, n.plus(0), 0, 0);
        total.note("reduction l=2 i " + std::to_string(i),
                   high2i.verdict == inter_i.verdict &&
                       sf_witness(high2i, "sf(D)") == sf_witness(inter_i, "sf(D)") &&
                       sf_witness(high2i, "sf(W)") == sf_witness(inter_i, "sf(W)"));
    }
    return total;
}

struct CriterionRun {
    const char* name;
    Tally tally;
    double seconds;
};

}  // namespace

int main() {
    std::vector<CriterionRun> runs;
    auto timed = [&](const char* name, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        Tally tally = fn();
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        runs.push_back({name, std::move(tally), seconds});
        const CriterionRun& run = runs.back();
        std::printf("%s  %s: %ld/%ld exact (%.1fs)\n", run.tally.all_pass() ? "PASS" : "FAIL",
                    name, run.tally.passes, run.tally.checks, run.seconds);
        for (const std::string& failure : run.tally.failures) {
            std::printf("      failed: %s\n", failure.c_str());
        }
        std::fflush(stdout);
        return run.tally;
    };

    std::vector<MeasureSystem> angelesco = angelesco_suite(200);
    std::vector<MeasureSystem> nikishin = nikishin_suite(100);
    std::vector<MeasureSystem> at_systems = at_suite(100);

    timed("1. fixture-exactness", fixture_exactness);
    Tally zero = timed("2. zero-location-criterion (200 Angelesco, |n|<=6)",
                       [&] { return zero_location_suite(angelesco); });
    std::printf("REPORT conjecture probe: D = kappa*P_n exactly in %ld/%ld zero-ii checks\n",
                zero.probe_hits, zero.probe_total);
    timed("3. interlacing-criterion (same suite)", [&] { return interlacing_suite(angelesco); });
    timed("4. angelesco-zero-counts", [&] { return angelesco_count_suite(angelesco); });
    Tally nik = timed("5. nikishin-type-I (100 pairs)",
                      [&] { return nikishin_suite_checks(nikishin); });
    std::printf(
        "REPORT negative control (out-of-regime (2,1), j=0): conclusion held in %ld/%ld runs "
        "(recorded, not asserted)\n",
        nik.control_hits, nik.control_total);
    timed("6. perfectness-evidence (all three families)",
          [&] { return perfectness_suite(angelesco, nikishin, at_systems); });
    timed("7. andreief-identity (100 instances)", andreief_suite);
    timed("8. perturbation-lemma (50 instances)", perturbation_suite);
    timed("9. higher-wronskians (even orders 2 and 4)",
          [&] { return higher_wronskian_suite(angelesco, nikishin, at_systems); });
    timed("10. internal-consistency (1000 pairs + reductions)",
          [&] { return consistency_suite(angelesco); });

    int failures = 0;
    for (const CriterionRun& run : runs) {
        if (!run.tally.all_pass()) ++failures;
    }
    std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                static_cast<int>(runs.size()) - failures, runs.size());
    return failures;
}
