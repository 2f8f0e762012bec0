#pragma once

#include "moprl/interlace.hpp"
#include "moprl/measure.hpp"
#include "moprl/multi_index.hpp"
#include "moprl/polynomial.hpp"
#include "moprl/solver.hpp"
#include "moprl/sturm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace moprl {

enum class Verdict { Pass, Fail, Degenerate };

const char* to_string(Verdict v);

using WitnessValue = std::variant<Rational, Polynomial, std::vector<IsolatingInterval>, std::string>;

struct Witness {
    std::string label;
    WitnessValue value;
};

std::string to_string(const WitnessValue& value);

// One mechanized check of a theorem/corollary instance. Fail verdicts always
// carry a concrete counterexample witness; hypothesis violations throw
// instead of reporting.
struct CriterionReport {
    std::string criterion;
    std::string system_summary;
    MultiIndex index;
    Verdict verdict = Verdict::Fail;
    std::vector<Witness> witnesses;
    uint64_t seed = 0;

    bool passed() const { return verdict == Verdict::Pass; }
    const Witness* find(const std::string& label) const;
};

// n_{s+1} = n_s + e_{step_s}; length is the number of indices (steps + 1).
struct IncreasingPath {
    MultiIndex start;
    std::vector<size_t> steps;

    IncreasingPath(MultiIndex start_index, std::vector<size_t> step_dirs);
    size_t length() const { return steps.size() + 1; }
    std::vector<MultiIndex> indices() const;
};

enum class PolynomialFamily { TypeI, TypeII };

// Squarefree parts are normalized monic, so zero-set equality over the
// complex plane is the exact polynomial identity sf(a) == sf(b). kappa and
// exact_constant_multiple probe the stronger identity a == kappa * b.
struct ProportionalityCheck {
    bool proportional = false;
    bool exact_constant_multiple = false;
    Rational kappa;
    Polynomial sf_left;
    Polynomial sf_right;
};

ProportionalityCheck squarefree_proportional(const Polynomial& a, const Polynomial& b);

// --- zero location -------------------------------------------------------

CriterionReport verify_zero_criterion_type_ii(const MeasureSystem& system, const MultiIndex& n);
CriterionReport verify_zero_criterion_type_i(const MeasureSystem& system, const MultiIndex& n,
                                             size_t j);

// --- interlacing ---------------------------------------------------------

CriterionReport verify_interlace_criterion_type_ii(const MeasureSystem& system,
                                                   const MultiIndex& n, size_t j);
CriterionReport verify_interlace_criterion_neighbors(const MeasureSystem& system,
                                                     const MultiIndex& n, size_t j, size_t k);
CriterionReport verify_interlace_criterion_type_i(const MeasureSystem& system, const MultiIndex& n,
                                                  size_t neighbor_dir, size_t slot);

// --- structural identities -----------------------------------------------

CriterionReport verify_andreief(const DiscreteMeasure& measure,
                                const std::vector<Polynomial>& phis,
                                const std::vector<Polynomial>& psis,
                                const std::vector<std::vector<Rational>>& amatrix);

CriterionReport verify_perturbation_lemma(const MeasureSystem& system, const Polynomial& q,
                                          const MultiIndex& n);

// --- family corollaries ---------------------------------------------------

CriterionReport verify_angelesco_zero_count(const MeasureSystem& system, const MultiIndex& n);
CriterionReport verify_at_zero_location(const MeasureSystem& system, const MultiIndex& n);
CriterionReport verify_nikishin_type_i_location(const MeasureSystem& system, const MultiIndex& n,
                                                size_t j);
CriterionReport verify_nikishin_type_i_interlacing(const MeasureSystem& system,
                                                   const MultiIndex& n, size_t j);

// --- higher-order Wronskians ----------------------------------------------

CriterionReport verify_higher_wronskian(const MeasureSystem& system, const IncreasingPath& path,
                                        PolynomialFamily family,
                                        std::optional<size_t> slot = std::nullopt);
CriterionReport verify_even_wronskian_nonvanishing(const MeasureSystem& system,
                                                   const IncreasingPath& path,
                                                   PolynomialFamily family,
                                                   std::optional<size_t> slot = std::nullopt);

CriterionReport verify_quasiorthogonality(const DiscreteMeasure& measure, const Polynomial& p,
                                          int n_conditions);

// Raw observation of where the j-th type I component's roots land, with no
// regime gating; used for the out-of-regime negative controls.
struct NikishinRootObservation {
    int degree = 0;
    int distinct_real_roots = 0;
    bool real_rooted = false;
    bool all_simple = false;
    bool all_in_gamma2 = false;
    bool vacuous = false;  // component constant or zero
};

NikishinRootObservation observe_nikishin_type_i_roots(const MeasureSystem& system,
                                                      const MultiIndex& n, size_t j);

}  // namespace moprl
