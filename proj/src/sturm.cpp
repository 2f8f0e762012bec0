#include "moprl/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace moprl {

namespace {

int sign_at_pos_inf(const Polynomial& p) { return sgn(p.leading_coefficient()); }

int sign_at_neg_inf(const Polynomial& p) {
    int s = sgn(p.leading_coefficient());
    return (p.degree() % 2 != 0) ? -s : s;
}

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_part(p));
    Polynomial d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(primitive_part(d));
    while (true) {
        const Polynomial& a = chain_[chain_.size() - 2];
        const Polynomial& b = chain_.back();
        Polynomial r = -divmod(a, b).second;
        if (r.is_zero()) break;
        chain_.push_back(primitive_part(r));
    }
}

int SturmChain::variations(const Bound& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    switch (x.kind) {
        case Bound::Kind::Finite:
            for (const Polynomial& q : chain_) signs.push_back(sgn(q.evaluate(x.value)));
            break;
        case Bound::Kind::PosInf:
            for (const Polynomial& q : chain_) signs.push_back(sign_at_pos_inf(q));
            break;
        case Bound::Kind::NegInf:
            for (const Polynomial& q : chain_) signs.push_back(sign_at_neg_inf(q));
            break;
    }
    return count_variations(signs);
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
    if (lo.kind == Bound::Kind::Finite && hi.kind == Bound::Kind::Finite && lo.value >= hi.value) {
        throw std::invalid_argument("root count over an empty interval");
    }
    if (lo.kind == Bound::Kind::PosInf || hi.kind == Bound::Kind::NegInf) {
        throw std::invalid_argument("root count over a reversed interval");
    }
    return variations(lo) - variations(hi);
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
    return count(Bound::at(lo), Bound::at(hi));
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
    Rational lead = abs(p.leading_coefficient());
    Rational best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coefficient(static_cast<size_t>(i)));
        if (a > best) best = a;
    }
    return Rational(1) + best / lead;
}

int count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.is_constant()) return 0;
    // The gcd-tailed chain of p itself counts distinct roots whenever no
    // finite endpoint is a root of p (the tail never vanishes there); only
    // the root-at-endpoint case needs the squarefree chain.
    const bool endpoint_root =
        (lo.kind == Bound::Kind::Finite && p.evaluate(lo.value) == 0) ||
        (hi.kind == Bound::Kind::Finite && p.evaluate(hi.value) == 0);
    SturmChain chain(endpoint_root ? squarefree_part(p) : p);
    return chain.count(lo, hi);
}

int count_real_roots(const Polynomial& p) {
    return count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
}

int count_real_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (lo >= hi) throw std::invalid_argument("root count over an empty interval");
    int count = count_real_roots(p, Bound::at(lo), Bound::at(hi));
    if (p.evaluate(hi) == 0) --count;
    return count;
}

bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("real-rootedness of the zero polynomial");
    if (p.is_constant()) return true;
    int weighted = 0;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        weighted += multiplicity * count_real_roots(factor);
    }
    return weighted == p.degree();
}

namespace {

struct WorkItem {
    Rational lo;
    Rational hi;
    int multiplicity;
    size_t factor_index;
};

// One bisection step on an isolating interval of `factor` (squarefree, one
// root strictly inside, endpoints non-roots). Keeps those invariants.
void bisect_once(const Polynomial& factor, const SturmChain& chain, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (factor.evaluate(mid) == 0) {
        Rational delta = (hi - lo) / 8;
        while (factor.evaluate(mid - delta) == 0 || factor.evaluate(mid + delta) == 0 ||
               chain.count(mid - delta, mid + delta) != 1) {
            delta /= 2;
        }
        lo = mid - delta;
        hi = mid + delta;
        return;
    }
    if (chain.count(lo, mid) == 1) {
        hi = mid;
    } else {
        lo = mid;
    }
}

void isolate_factor(const Polynomial& factor, const SturmChain& chain, const Rational& lo,
                    const Rational& hi, std::vector<std::pair<Rational, Rational>>& out) {
    int roots = chain.count(lo, hi);
    if (roots == 0) return;
    if (roots == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (factor.evaluate(mid) == 0) {
        Rational delta = (hi - lo) / 8;
        while (factor.evaluate(mid - delta) == 0 || factor.evaluate(mid + delta) == 0 ||
               chain.count(mid - delta, mid + delta) != 1) {
            delta /= 2;
        }
        out.emplace_back(mid - delta, mid + delta);
        isolate_factor(factor, chain, lo, mid - delta, out);
        isolate_factor(factor, chain, mid + delta, hi, out);
    } else {
        isolate_factor(factor, chain, lo, mid, out);
        isolate_factor(factor, chain, mid, hi, out);
    }
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    std::vector<IsolatingInterval> result;
    if (p.is_constant()) return result;

    std::vector<Polynomial> factors;
    std::vector<SturmChain> chains;
    std::vector<WorkItem> items;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        SturmChain chain(factor);
        Rational bound = cauchy_root_bound(factor);
        std::vector<std::pair<Rational, Rational>> raw;
        isolate_factor(factor, chain, -bound, bound, raw);
        size_t idx = factors.size();
        for (auto& [lo, hi] : raw) {
            items.push_back({std::move(lo), std::move(hi), multiplicity, idx});
        }
        factors.push_back(factor);
        chains.push_back(std::move(chain));
    }

    // Roots of distinct squarefree factors are distinct, so repeated halving
    // separates any overlapping intervals.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(items.begin(), items.end(),
                  [](const WorkItem& a, const WorkItem& b) { return a.lo < b.lo; });
        for (size_t i = 0; i + 1 < items.size(); ++i) {
            WorkItem& a = items[i];
            WorkItem& b = items[i + 1];
            if (a.hi > b.lo) {
                WorkItem& wider = (a.hi - a.lo >= b.hi - b.lo) ? a : b;
                bisect_once(factors[wider.factor_index], chains[wider.factor_index], wider.lo,
                            wider.hi);
                changed = true;
            }
        }
    }

    const Rational default_width = make_rational(1, 4);
    for (WorkItem& item : items) {
        while (item.hi - item.lo > default_width) {
            bisect_once(factors[item.factor_index], chains[item.factor_index], item.lo, item.hi);
        }
    }
    result.reserve(items.size());
    for (const WorkItem& item : items) {
        result.push_back({item.lo, item.hi, item.multiplicity});
    }
    return result;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& max_width) {
    std::vector<IsolatingInterval> intervals = isolate_real_roots(p);
    if (intervals.empty()) return intervals;
    Polynomial sf = squarefree_part(p);
    for (IsolatingInterval& interval : intervals) refine_to_width(sf, interval, max_width);
    return intervals;
}

void refine_to_width(const Polynomial& squarefree, IsolatingInterval& interval,
                     const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refinement width must be positive");
    SturmChain chain(squarefree);
    while (interval.hi - interval.lo >= width) {
        bisect_once(squarefree, chain, interval.lo, interval.hi);
    }
}

void refine_step(const Polynomial& squarefree, const SturmChain& chain,
                 IsolatingInterval& interval) {
    bisect_once(squarefree, chain, interval.lo, interval.hi);
}

}  // namespace moprl
