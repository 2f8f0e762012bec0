#include "moprl/criteria.hpp"

#include "moprl/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace moprl {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Degenerate: return "degenerate";
    }
    return "unknown";
}

std::string to_string(const WitnessValue& value) {
    if (const auto* r = std::get_if<Rational>(&value)) return to_string(*r);
    if (const auto* p = std::get_if<Polynomial>(&value)) return to_string(*p);
    if (const auto* s = std::get_if<std::string>(&value)) return *s;
    const auto& intervals = std::get<std::vector<IsolatingInterval>>(value);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < intervals.size(); ++i) {
        if (i) os << ", ";
        os << "(" << to_string(intervals[i].lo) << "," << to_string(intervals[i].hi)
           << ")x" << intervals[i].multiplicity;
    }
    os << "]";
    return os.str();
}

const Witness* CriterionReport::find(const std::string& label) const {
    for (const Witness& w : witnesses) {
        if (w.label == label) return &w;
    }
    return nullptr;
}

IncreasingPath::IncreasingPath(MultiIndex start_index, std::vector<size_t> step_dirs)
    : start(std::move(start_index)), steps(std::move(step_dirs)) {
    for (size_t dir : steps) {
        if (dir >= start.order()) throw std::invalid_argument("path step direction out of range");
    }
}

std::vector<MultiIndex> IncreasingPath::indices() const {
    std::vector<MultiIndex> result{start};
    for (size_t dir : steps) result.push_back(result.back().plus(dir));
    return result;
}

ProportionalityCheck squarefree_proportional(const Polynomial& a, const Polynomial& b) {
    ProportionalityCheck check;
    check.sf_left = squarefree_part(a);
    check.sf_right = squarefree_part(b);
    check.proportional = check.sf_left == check.sf_right;
    check.kappa = b.leading_coefficient() == 0
                      ? Rational(0)
                      : a.leading_coefficient() / b.leading_coefficient();
    check.exact_constant_multiple = !b.is_zero() && a == check.kappa * b;
    return check;
}

namespace {

CriterionReport make_report(const char* criterion, const MeasureSystem& system,
                            const MultiIndex& index) {
    CriterionReport report;
    report.criterion = criterion;
    report.system_summary = system.summary();
    report.index = index;
    return report;
}

// Non-normality of a required index is a first-class Fail (with the singular
// determinant as witness), not an exception.
bool gate_normal(CriterionReport& report, const MeasureSystem& system, const MultiIndex& index) {
    Rational det = det_exact(build_H(system, index));
    if (det == 0) {
        report.verdict = Verdict::Fail;
        report.witnesses.push_back({"det H at " + index.str(), det});
        return false;
    }
    return true;
}

void add_proportionality_witnesses(CriterionReport& report, const ProportionalityCheck& check,
                                   const Polynomial& d, const Polynomial& other,
                                   const char* other_label) {
    report.witnesses.push_back({"D", d});
    report.witnesses.push_back({other_label, other});
    report.witnesses.push_back({"sf(D)", check.sf_left});
    report.witnesses.push_back({std::string("sf(") + other_label + ")", check.sf_right});
    if (check.proportional) report.witnesses.push_back({"c", Rational(1)});
    report.witnesses.push_back(
        {"exact_constant_multiple", std::string(check.exact_constant_multiple ? "true" : "false")});
    report.witnesses.push_back({"kappa", check.kappa});
}

void check_slot(const MeasureSystem& system, size_t j) {
    if (j >= system.size()) throw std::invalid_argument("measure slot out of range");
}

bool roots_simple_real_inside(const Polynomial& p, const Interval& gamma) {
    const int degree = p.degree();
    Polynomial sf = squarefree_part(p);
    if (sf.degree() != degree) return false;  // a multiple root somewhere
    return count_real_roots_open(p, gamma.lo, gamma.hi) == degree;
}

}  // namespace

CriterionReport verify_zero_criterion_type_ii(const MeasureSystem& system, const MultiIndex& n) {
    CriterionReport report = make_report("zero-ii", system, n);
    require_support_richness(system, n, ChristoffelSpec::all(1));
    if (!gate_normal(report, system, n)) return report;

    Polynomial p = solve_type_ii(system, n);
    Polynomial d = det_H_in_z(system, n, ChristoffelSpec::all(1));
    if (d.is_zero()) {
        throw std::logic_error("transformed system degenerate for all z at index " + n.str());
    }
    ProportionalityCheck check = squarefree_proportional(d, p);
    report.verdict = check.proportional ? Verdict::Pass : Verdict::Fail;
    add_proportionality_witnesses(report, check, d, p, "P");
    return report;
}

CriterionReport verify_zero_criterion_type_i(const MeasureSystem& system, const MultiIndex& n,
                                             size_t j) {
    check_slot(system, j);
    if (n[j] < 1) throw std::invalid_argument("zero criterion type I needs n_j >= 1");
    CriterionReport report = make_report("zero-i", system, n);
    const MultiIndex down = n.minus(j);
    require_support_richness(system, down, ChristoffelSpec::single(j, 1));
    if (!gate_normal(report, system, n)) return report;
    if (!gate_normal(report, system, down)) return report;

    Polynomial a = solve_type_i(system, n).components[j];
    if (a.is_zero()) {
        report.verdict = Verdict::Degenerate;
        report.witnesses.push_back({"A", a});
        return report;
    }
    Polynomial d = det_H_in_z(system, down, ChristoffelSpec::single(j, 1));
    if (d.is_zero()) {
        throw std::logic_error("transformed system degenerate for all z at index " + down.str());
    }
    ProportionalityCheck check = squarefree_proportional(d, a);
    report.verdict = check.proportional ? Verdict::Pass : Verdict::Fail;
    add_proportionality_witnesses(report, check, d, a, "A");
    return report;
}

CriterionReport verify_interlace_criterion_type_ii(const MeasureSystem& system,
                                                   const MultiIndex& n, size_t j) {
    check_slot(system, j);
    CriterionReport report = make_report("interlace-ii", system, n);
    const MultiIndex up = n.plus(j);
    require_support_richness(system, n, ChristoffelSpec::all(2));
    if (!gate_normal(report, system, n)) return report;
    if (!gate_normal(report, system, up)) return report;

    Polynomial p_n = solve_type_ii(system, n);
    Polynomial p_up = solve_type_ii(system, up);
    Polynomial w = wronskian({p_up, p_n});
    if (w.is_zero()) throw std::logic_error("Wronskian of distinct-degree pair vanished");
    Polynomial d = det_H_in_z(system, n, ChristoffelSpec::all(2));
    if (d.is_zero()) {
        throw std::logic_error("transformed system degenerate for all z at index " + n.str());
    }
    ProportionalityCheck check = squarefree_proportional(d, w);
    report.verdict = check.proportional ? Verdict::Pass : Verdict::Fail;
    add_proportionality_witnesses(report, check, d, w, "W");

    if (check.proportional && is_real_rooted(p_n)) {
        const bool no_real_zero = count_real_roots(check.sf_left) == 0;
        InterlaceResult res = interlace_decide(p_up, p_n);
        if (res.interlaces() != no_real_zero) {
            throw std::logic_error("interlacing cross-check disagrees with the determinant route");
        }
        report.witnesses.push_back(
            {"interlace", std::string(res.interlaces() ? "interlace" : "not-interlace")});
    }
    return report;
}

CriterionReport verify_interlace_criterion_neighbors(const MeasureSystem& system,
                                                     const MultiIndex& n, size_t j, size_t k) {
    check_slot(system, j);
    check_slot(system, k);
    if (j == k) throw std::invalid_argument("neighbor comparison needs j != k");
    CriterionReport report = make_report("interlace-neighbors", system, n);
    const MultiIndex up_j = n.plus(j);
    const MultiIndex up_k = n.plus(k);
    require_support_richness(system, n, ChristoffelSpec::all(2));
    if (!gate_normal(report, system, up_j)) return report;
    if (!gate_normal(report, system, up_k)) return report;
    if (!gate_normal(report, system, up_j.plus(k))) return report;

    Polynomial p_j = solve_type_ii(system, up_j);
    Polynomial p_k = solve_type_ii(system, up_k);
    Polynomial w = wronskian({p_j, p_k});
    if (w.is_zero()) {
        throw std::logic_error("neighbor polynomials linearly dependent despite normality of " +
                               up_j.plus(k).str());
    }
    Polynomial d = det_H_in_z(system, n, ChristoffelSpec::all(2));
    if (d.is_zero()) {
        throw std::logic_error("transformed system degenerate for all z at index " + n.str());
    }
    ProportionalityCheck check = squarefree_proportional(d, w);
    report.verdict = check.proportional ? Verdict::Pass : Verdict::Fail;
    add_proportionality_witnesses(report, check, d, w, "W");

    if (check.proportional && is_real_rooted(p_j)) {
        const bool no_real_zero = count_real_roots(check.sf_left) == 0;
        InterlaceResult res = interlace_decide(p_k, p_j);
        if (res.interlaces() != no_real_zero) {
            throw std::logic_error("interlacing cross-check disagrees with the determinant route");
        }
        report.witnesses.push_back(
            {"interlace", std::string(res.interlaces() ? "interlace" : "not-interlace")});
    }
    return report;
}

CriterionReport verify_interlace_criterion_type_i(const MeasureSystem& system, const MultiIndex& n,
                                                  size_t neighbor_dir, size_t slot) {
    check_slot(system, slot);
    check_slot(system, neighbor_dir);
    if (n[slot] < 2) throw std::invalid_argument("type I interlacing needs n_j >= 2");
    if (n[neighbor_dir] < 1) {
        throw std::invalid_argument("type I interlacing needs n_l >= 1 in the neighbor direction");
    }
    CriterionReport report = make_report("interlace-i", system, n);
    const MultiIndex down = n.minus(neighbor_dir);
    const MultiIndex target = n.minus(slot).minus(slot);
    require_support_richness(system, target, ChristoffelSpec::single(slot, 2));
    if (!gate_normal(report, system, n)) return report;
    if (!gate_normal(report, system, n.minus(slot))) return report;
    if (neighbor_dir != slot && !gate_normal(report, system, down)) return report;

    Polynomial a_top = solve_type_i(system, n).components[slot];
    Polynomial a_down = solve_type_i(system, down).components[slot];
    Polynomial w = wronskian({a_top, a_down});
    if (w.is_zero()) {
        report.verdict = Verdict::Degenerate;
        report.witnesses.push_back({"A_n", a_top});
        report.witnesses.push_back({"A_down", a_down});
        report.witnesses.push_back({"note", std::string("proportional type I components")});
        return report;
    }
    Polynomial d = det_H_in_z(system, target, ChristoffelSpec::single(slot, 2));
    if (d.is_zero()) {
        throw std::logic_error("transformed system degenerate for all z at index " + target.str());
    }
    ProportionalityCheck check = squarefree_proportional(d, w);
    report.verdict = check.proportional ? Verdict::Pass : Verdict::Fail;
    add_proportionality_witnesses(report, check, d, w, "W");

    if (check.proportional && !a_top.is_constant() && is_real_rooted(a_top)) {
        const bool no_real_zero = count_real_roots(check.sf_left) == 0;
        InterlaceResult res = interlace_decide(a_down, a_top);
        if (res.interlaces() != no_real_zero) {
            throw std::logic_error("interlacing cross-check disagrees with the determinant route");
        }
        report.witnesses.push_back(
            {"interlace", std::string(res.interlaces() ? "interlace" : "not-interlace")});
    }
    return report;
}

CriterionReport verify_andreief(const DiscreteMeasure& measure,
                                const std::vector<Polynomial>& phis,
                                const std::vector<Polynomial>& psis,
                                const std::vector<std::vector<Rational>>& amatrix) {
    const size_t m = phis.size();
    const size_t nn = psis.size();
    if (m < 1 || nn < m) throw std::invalid_argument("dimension mismatch: need N >= M >= 1");
    if (amatrix.size() != nn - m) throw std::invalid_argument("dimension mismatch in A");
    for (const auto& row : amatrix) {
        if (row.size() != nn) throw std::invalid_argument("dimension mismatch in A");
    }

    CriterionReport report;
    report.criterion = "andreief";
    report.system_summary = "measure atoms=" + std::to_string(measure.atom_count());
    report.index = MultiIndex{static_cast<int>(m), static_cast<int>(nn)};

    std::vector<std::vector<Rational>> lhs = amatrix;
    for (size_t jj = 0; jj < m; ++jj) {
        std::vector<Rational> row;
        row.reserve(nn);
        for (size_t kk = 0; kk < nn; ++kk) {
            Rational acc(0);
            for (const Atom& atom : measure.atoms()) {
                acc += atom.weight * phis[jj].evaluate(atom.point) * psis[kk].evaluate(atom.point);
            }
            row.push_back(std::move(acc));
        }
        lhs.push_back(std::move(row));
    }
    Rational lhs_det = bareiss_determinant(std::move(lhs));

    // literal finite-sum form of the M-fold integral, all atom tuples
    const auto& atoms = measure.atoms();
    std::vector<size_t> tuple(m, 0);
    Rational rhs_sum(0);
    while (true) {
        Rational weight(1);
        for (size_t idx : tuple) weight *= atoms[idx].weight;

        std::vector<std::vector<Rational>> first = amatrix;
        for (size_t jj = 0; jj < m; ++jj) {
            std::vector<Rational> row;
            row.reserve(nn);
            for (size_t kk = 0; kk < nn; ++kk) {
                row.push_back(psis[kk].evaluate(atoms[tuple[jj]].point));
            }
            first.push_back(std::move(row));
        }
        std::vector<std::vector<Rational>> second(m, std::vector<Rational>(m));
        for (size_t ll = 0; ll < m; ++ll) {
            for (size_t jj = 0; jj < m; ++jj) {
                second[ll][jj] = phis[ll].evaluate(atoms[tuple[jj]].point);
            }
        }
        rhs_sum += weight * bareiss_determinant(std::move(first)) *
                   bareiss_determinant(std::move(second));

        size_t pos = 0;
        while (pos < m) {
            if (++tuple[pos] < atoms.size()) break;
            tuple[pos] = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    Rational factorial(1);
    for (size_t i = 2; i <= m; ++i) factorial *= Rational(static_cast<long>(i));
    Rational rhs = rhs_sum / factorial;

    report.verdict = (lhs_det == rhs) ? Verdict::Pass : Verdict::Fail;
    report.witnesses.push_back({"lhs", lhs_det});
    report.witnesses.push_back({"rhs", rhs});
    return report;
}

CriterionReport verify_perturbation_lemma(const MeasureSystem& system, const Polynomial& q,
                                          const MultiIndex& n) {
    if (system.size() != 2) throw std::invalid_argument("perturbation lemma needs r = 2");
    if (!q.is_zero() && n[1] > n[0] - q.degree()) {
        throw std::invalid_argument("lemma hypotheses not met: need n_2 <= n_1 - deg q");
    }
    CriterionReport report = make_report("perturbation", system, n);
    if (!gate_normal(report, system, n)) return report;

    MeasureSystem perturbed = system.perturb_second_measure(q);
    require_support_richness(perturbed, n);
    Rational det_tilde = det_exact(build_H(perturbed, n));
    report.witnesses.push_back({"det H", det_exact(build_H(system, n))});
    report.witnesses.push_back({"det H~", det_tilde});
    if (det_tilde == 0) {
        report.verdict = Verdict::Fail;
        report.witnesses.push_back({"note", std::string("normality equivalence broken")});
        return report;
    }

    Polynomial p = solve_type_ii(system, n);
    Polynomial p_tilde = solve_type_ii(perturbed, n);
    TypeIVector a = solve_type_i(system, n);
    TypeIVector a_tilde = solve_type_i(perturbed, n);

    const bool ok_p = p_tilde == p;
    const bool ok_a1 = a_tilde.components[0] == a.components[0] - q * a.components[1];
    const bool ok_a2 = a_tilde.components[1] == a.components[1];
    report.verdict = (ok_p && ok_a1 && ok_a2) ? Verdict::Pass : Verdict::Fail;
    report.witnesses.push_back({"P", p});
    report.witnesses.push_back({"P~", p_tilde});
    report.witnesses.push_back({"A1", a.components[0]});
    report.witnesses.push_back({"A1~", a_tilde.components[0]});
    report.witnesses.push_back({"A2", a.components[1]});
    report.witnesses.push_back({"A2~", a_tilde.components[1]});
    return report;
}

CriterionReport verify_angelesco_zero_count(const MeasureSystem& system, const MultiIndex& n) {
    if (system.kind() != SystemKind::Angelesco) {
        throw std::invalid_argument("zero-count corollary applies to Angelesco systems");
    }
    CriterionReport report = make_report("angelesco-count", system, n);
    require_support_richness(system, n);
    if (!gate_normal(report, system, n)) return report;
    if (n.total() == 0) {
        report.verdict = Verdict::Pass;
        return report;
    }
    Polynomial p = solve_type_ii(system, n);
    std::vector<IsolatingInterval> intervals = isolate_real_roots(p);
    report.witnesses.push_back({"P", p});
    report.witnesses.push_back({"roots", intervals});

    bool ok = static_cast<int>(intervals.size()) == n.total();
    for (const IsolatingInterval& iv : intervals) ok = ok && iv.multiplicity == 1;
    for (size_t j = 0; ok && j < system.size(); ++j) {
        const Interval& gamma = system.interval(j);
        ok = count_real_roots_open(p, gamma.lo, gamma.hi) == n[j];
    }
    report.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

CriterionReport verify_at_zero_location(const MeasureSystem& system, const MultiIndex& n) {
    if (system.kind() != SystemKind::ATCauchyVandermonde) {
        throw std::invalid_argument("AT zero-location corollary applies to AT systems");
    }
    CriterionReport report = make_report("at-location", system, n);
    require_support_richness(system, n);
    if (!gate_normal(report, system, n)) return report;
    if (n.total() == 0) {
        report.verdict = Verdict::Pass;
        return report;
    }
    Polynomial p = solve_type_ii(system, n);
    report.witnesses.push_back({"P", p});
    report.verdict = roots_simple_real_inside(p, system.interval(0)) ? Verdict::Pass : Verdict::Fail;
    return report;
}

NikishinRootObservation observe_nikishin_type_i_roots(const MeasureSystem& system,
                                                      const MultiIndex& n, size_t j) {
    NikishinRootObservation obs;
    Polynomial a = solve_type_i(system, n).components[j];
    obs.degree = a.degree();
    if (a.is_constant()) {
        obs.vacuous = true;
        obs.real_rooted = true;
        obs.all_simple = true;
        obs.all_in_gamma2 = true;
        return obs;
    }
    const Interval& gamma2 = system.interval(1);
    Polynomial sf = squarefree_part(a);
    obs.distinct_real_roots = count_real_roots(a);
    obs.all_simple = sf.degree() == a.degree();
    obs.real_rooted = is_real_rooted(a);
    obs.all_in_gamma2 = count_real_roots_open(a, gamma2.lo, gamma2.hi) == obs.distinct_real_roots &&
                        a.evaluate(gamma2.lo) != 0 && a.evaluate(gamma2.hi) != 0;
    return obs;
}

namespace {

void check_nikishin_regime(const MeasureSystem& system, const MultiIndex& n, size_t j) {
    if (system.kind() != SystemKind::Nikishin || system.size() != 2) {
        throw std::invalid_argument("Nikishin type I results apply to r = 2 Nikishin systems");
    }
    check_slot(system, j);
    const bool in_regime = (j == 0) ? (n[0] + 1 <= n[1]) : (n[0] + 1 >= n[1]);
    if (!in_regime) throw std::invalid_argument("outside theorem hypotheses for index " + n.str());
}

}  // namespace

CriterionReport verify_nikishin_type_i_location(const MeasureSystem& system, const MultiIndex& n,
                                                size_t j) {
    check_nikishin_regime(system, n, j);
    if (n[j] < 1) throw std::invalid_argument("type I location needs n_j >= 1");
    CriterionReport report = make_report("nikishin-location", system, n);
    require_support_richness(system, n);
    if (!gate_normal(report, system, n)) return report;

    NikishinRootObservation obs = observe_nikishin_type_i_roots(system, n, j);
    Polynomial a = solve_type_i(system, n).components[j];
    report.witnesses.push_back({"A", a});
    if (obs.vacuous) {
        report.verdict = Verdict::Pass;
        report.witnesses.push_back({"note", std::string("constant component, vacuous")});
        return report;
    }
    report.verdict = (obs.real_rooted && obs.all_simple && obs.all_in_gamma2) ? Verdict::Pass
                                                                              : Verdict::Fail;
    report.witnesses.push_back({"roots", isolate_real_roots(a)});
    return report;
}

CriterionReport verify_nikishin_type_i_interlacing(const MeasureSystem& system,
                                                   const MultiIndex& n, size_t j) {
    check_nikishin_regime(system, n, j);
    if (n[0] < 1 || n[1] < 1) {
        throw std::invalid_argument("interlacing triple needs n - e_1 and n - e_2 to exist");
    }
    CriterionReport report = make_report("nikishin-interlacing", system, n);
    const MultiIndex down1 = n.minus(0);
    const MultiIndex down2 = n.minus(1);
    require_support_richness(system, n);
    if (!gate_normal(report, system, n)) return report;
    if (!gate_normal(report, system, down1)) return report;
    if (!gate_normal(report, system, down2)) return report;

    Polynomial a_n = solve_type_i(system, n).components[j];
    Polynomial a_1 = solve_type_i(system, down1).components[j];
    Polynomial a_2 = solve_type_i(system, down2).components[j];

    struct Pair {
        const Polynomial* u;
        const Polynomial* v;
        const char* label;
    };
    const Pair pairs[] = {{&a_n, &a_1, "A_n ~ A_{n-e1}"},
                          {&a_n, &a_2, "A_n ~ A_{n-e2}"},
                          {&a_1, &a_2, "A_{n-e1} ~ A_{n-e2}"}};
    bool all_ok = true;
    for (const Pair& pair : pairs) {
        if (pair.u->is_constant() || pair.v->is_constant()) {
            report.witnesses.push_back({pair.label, std::string("vacuous (constant member)")});
            continue;
        }
        const Polynomial& bigger = (pair.u->degree() >= pair.v->degree()) ? *pair.u : *pair.v;
        const Polynomial& smaller = (pair.u->degree() >= pair.v->degree()) ? *pair.v : *pair.u;
        if (!is_real_rooted(bigger) || !is_real_rooted(smaller)) {
            report.witnesses.push_back({pair.label, std::string("member not real-rooted")});
            all_ok = false;
            continue;
        }
        InterlaceResult res = interlace_decide(smaller, bigger);
        report.witnesses.push_back(
            {pair.label, std::string(res.interlaces() ? "interlace" : "not-interlace")});
        all_ok = all_ok && res.interlaces();
    }
    report.witnesses.push_back({"A_n", a_n});
    report.witnesses.push_back({"A_{n-e1}", a_1});
    report.witnesses.push_back({"A_{n-e2}", a_2});
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

CriterionReport verify_higher_wronskian(const MeasureSystem& system, const IncreasingPath& path,
                                        PolynomialFamily family, std::optional<size_t> slot) {
    const std::vector<MultiIndex> indices = path.indices();
    const size_t order = static_cast<size_t>(path.length());
    const MultiIndex& first = indices.front();
    size_t the_slot = 0;
    if (family == PolynomialFamily::TypeI) {
        the_slot = slot.value_or(0);
        check_slot(system, the_slot);
        if (first[the_slot] < 2) {
            throw std::invalid_argument("type I higher Wronskian needs (n_1)_j >= 2");
        }
    }
    CriterionReport report = make_report("higher-wronskian", system, first);

    const MultiIndex target =
        (family == PolynomialFamily::TypeII) ? first : first.minus(the_slot);
    const ChristoffelSpec transform =
        (family == PolynomialFamily::TypeII)
            ? ChristoffelSpec::all(static_cast<int>(order))
            : ChristoffelSpec::single(the_slot, static_cast<int>(order));
    require_support_richness(system, target, transform);
    for (const MultiIndex& idx : indices) {
        if (!gate_normal(report, system, idx)) return report;
    }

    std::vector<Polynomial> polys;
    polys.reserve(indices.size());
    for (const MultiIndex& idx : indices) {
        polys.push_back(family == PolynomialFamily::TypeII
                            ? solve_type_ii(system, idx)
                            : solve_type_i(system, idx).components[the_slot]);
    }
    Polynomial w = wronskian(polys);
    if (w.is_zero()) {
        if (family == PolynomialFamily::TypeII) {
            throw std::logic_error("Wronskian of distinct-degree path vanished");
        }
        report.verdict = Verdict::Degenerate;
        report.witnesses.push_back({"note", std::string("dependent type I components along path")});
        return report;
    }
    Polynomial d = det_H_in_z(system, target, transform);
    if (d.is_zero()) {
        throw std::logic_error("transformed system degenerate for all z at index " + target.str());
    }
    ProportionalityCheck check = squarefree_proportional(d, w);
    report.verdict = check.proportional ? Verdict::Pass : Verdict::Fail;
    add_proportionality_witnesses(report, check, d, w, "W");
    return report;
}

CriterionReport verify_even_wronskian_nonvanishing(const MeasureSystem& system,
                                                   const IncreasingPath& path,
                                                   PolynomialFamily family,
                                                   std::optional<size_t> slot) {
    if (path.length() % 2 != 0) {
        throw std::invalid_argument("even-order Wronskian check needs an even path length");
    }
    // r = 1 is the classical Karlin-Szego case and always qualifies
    if (family == PolynomialFamily::TypeII) {
        if (system.kind() == SystemKind::Explicit && system.size() > 1) {
            throw std::invalid_argument(
                "even-Wronskian corollary covers Angelesco, AT, and Nikishin systems");
        }
    } else if (system.kind() != SystemKind::Angelesco && system.size() > 1) {
        throw std::invalid_argument("type I even-Wronskian corollary covers Angelesco systems");
    }
    const std::vector<MultiIndex> indices = path.indices();
    size_t the_slot = slot.value_or(0);
    if (family == PolynomialFamily::TypeI) check_slot(system, the_slot);
    CriterionReport report = make_report("even-wronskian", system, indices.front());
    for (const MultiIndex& idx : indices) {
        require_support_richness(system, idx);
        if (!gate_normal(report, system, idx)) return report;
    }
    std::vector<Polynomial> polys;
    polys.reserve(indices.size());
    for (const MultiIndex& idx : indices) {
        polys.push_back(family == PolynomialFamily::TypeII
                            ? solve_type_ii(system, idx)
                            : solve_type_i(system, idx).components[the_slot]);
    }
    Polynomial w = wronskian(polys);
    if (w.is_zero()) {
        report.verdict = Verdict::Fail;
        report.witnesses.push_back(
            {"note", std::string("Wronskian identically zero contradicts path normality")});
        return report;
    }
    const int real_roots = count_real_roots(squarefree_part(w));
    report.verdict = (real_roots == 0) ? Verdict::Pass : Verdict::Fail;
    report.witnesses.push_back({"W", w});
    report.witnesses.push_back({"real_roots", Rational(real_roots)});
    return report;
}

CriterionReport verify_quasiorthogonality(const DiscreteMeasure& measure, const Polynomial& p,
                                          int n_conditions) {
    if (n_conditions < 0) throw std::invalid_argument("negative condition count");
    if (!measure.support()) throw std::invalid_argument("quasi-orthogonality needs an interval");
    if (p.is_zero()) throw std::invalid_argument("zero polynomial is not quasi-orthogonal");
    for (int k = 0; k < n_conditions; ++k) {
        if (measure.integrate(p, static_cast<unsigned>(k)) != 0) {
            throw std::invalid_argument("p is not quasi-orthogonal");
        }
    }
    CriterionReport report;
    report.criterion = "quasiorthogonality";
    report.system_summary = "measure atoms=" + std::to_string(measure.atom_count());
    report.index = MultiIndex{n_conditions};
    if (n_conditions == 0) {
        report.verdict = Verdict::Pass;
        return report;
    }
    const Interval& gamma = *measure.support();
    const int inside = count_real_roots_open(p, gamma.lo, gamma.hi);
    report.verdict = (inside >= n_conditions) ? Verdict::Pass : Verdict::Fail;
    report.witnesses.push_back({"roots_inside", Rational(inside)});
    report.witnesses.push_back({"P", p});
    return report;
}

}  // namespace moprl
