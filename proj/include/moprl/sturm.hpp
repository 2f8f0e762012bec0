#pragma once

#include "moprl/polynomial.hpp"
#include "moprl/rational.hpp"

#include <vector>

namespace moprl {

// Endpoint of a root-counting interval; counting is over (lo, hi].
struct Bound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value;

    static Bound neg_inf() { return Bound{Kind::NegInf, Rational(0)}; }
    static Bound pos_inf() { return Bound{Kind::PosInf, Rational(0)}; }
    static Bound at(Rational v) { return Bound{Kind::Finite, std::move(v)}; }
};

// Open interval (lo, hi) with endpoints that are not roots, containing
// exactly one distinct real root of the polynomial it was isolated from.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

// Canonical Sturm chain (p, p', then negated remainders). Intermediate
// elements are rescaled by positive rationals to primitive integer
// coefficients, which leaves every sign variation count unchanged. Root
// counts via sign variations are exact for squarefree input.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);

    const std::vector<Polynomial>& chain() const { return chain_; }
    int variations(const Bound& x) const;
    // Distinct real roots of a squarefree input in (lo, hi].
    int count(const Bound& lo, const Bound& hi) const;
    int count(const Rational& lo, const Rational& hi) const;

private:
    std::vector<Polynomial> chain_;
};

// 1 + max |c_i| / |c_lead|; every real root lies strictly inside (-B, B).
Rational cauchy_root_bound(const Polynomial& p);

// Distinct real roots of p in (lo, hi]. Multiple roots count once.
int count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi);
int count_real_roots(const Polynomial& p);
// Distinct real roots in the open interval (lo, hi).
int count_real_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi);

// True iff the multiplicity-weighted real root count equals the degree.
bool is_real_rooted(const Polynomial& p);

// Disjoint isolating intervals for all distinct real roots, sorted, with
// multiplicities recovered from the squarefree decomposition. Constants
// isolate to an empty list; the zero polynomial is rejected.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& max_width);

// Shrinks the interval below the requested width. `squarefree` must have
// exactly one root inside the interval and no root at either endpoint;
// squarefree_part of the isolated polynomial always qualifies.
void refine_to_width(const Polynomial& squarefree, IsolatingInterval& interval,
                     const Rational& width);

// Single bisection step against a prebuilt chain of the same squarefree
// polynomial; keeps the isolation invariants.
void refine_step(const Polynomial& squarefree, const SturmChain& chain,
                 IsolatingInterval& interval);

}  // namespace moprl
