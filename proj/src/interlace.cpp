#include "moprl/interlace.hpp"

#include "moprl/sturm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace moprl {

namespace {

struct TaggedInterval {
    Rational lo;
    Rational hi;
    bool from_p;
};

bool wronskian_route(const Polynomial& p, const Polynomial& q, std::string& note) {
    Polynomial w = wronskian({p, q});
    if (w.is_zero()) {
        note = "Wronskian identically zero";
        return false;
    }
    if (p.degree() > q.degree() + 1) {
        note = "degree condition deg p <= deg q + 1 fails";
        return false;
    }
    // distinct-root count of W itself equals the root count of its
    // squarefree part
    int real_roots = count_real_roots(w);
    std::ostringstream os;
    os << "W = " << to_string(w) << " with " << real_roots << " real root(s)";
    note = os.str();
    return real_roots == 0;
}

bool direct_route(const Polynomial& p, const Polynomial& q, std::string& note) {
    if (p.is_zero()) {
        note = "p is the zero polynomial";
        return false;
    }
    if (!is_real_rooted(p)) {
        note = "p is not real-rooted";
        return false;
    }
    if (p.is_constant() && q.is_constant()) {
        // matches the Wronskian route, where W(const, const) vanishes identically
        note = "both polynomials constant";
        return false;
    }
    std::vector<IsolatingInterval> roots_p = isolate_real_roots(p);
    std::vector<IsolatingInterval> roots_q = isolate_real_roots(q);
    for (const auto& iv : roots_p) {
        if (iv.multiplicity != 1) {
            note = "p has a multiple root";
            return false;
        }
    }
    for (const auto& iv : roots_q) {
        if (iv.multiplicity != 1) {
            note = "q has a multiple root";
            return false;
        }
    }
    if (!q.is_constant() && !p.is_constant() && gcd(p, q).degree() > 0) {
        note = "shared root (gcd is non-constant)";
        return false;
    }
    const long np = static_cast<long>(roots_p.size());
    const long nq = static_cast<long>(roots_q.size());
    if (np - nq > 1 || nq - np > 1) {
        note = "root counts differ by more than one";
        return false;
    }

    std::vector<TaggedInterval> all;
    all.reserve(roots_p.size() + roots_q.size());
    Polynomial sf_p = squarefree_part(p);
    Polynomial sf_q = squarefree_part(q);
    SturmChain chain_p(sf_p);
    SturmChain chain_q(sf_q);
    for (const auto& iv : roots_p) all.push_back({iv.lo, iv.hi, true});
    for (const auto& iv : roots_q) all.push_back({iv.lo, iv.hi, false});

    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(all.begin(), all.end(),
                  [](const TaggedInterval& a, const TaggedInterval& b) { return a.lo < b.lo; });
        for (size_t i = 0; i + 1 < all.size(); ++i) {
            TaggedInterval& a = all[i];
            TaggedInterval& b = all[i + 1];
            if (a.hi > b.lo) {
                TaggedInterval& wider = (a.hi - a.lo >= b.hi - b.lo) ? a : b;
                IsolatingInterval iv{wider.lo, wider.hi, 1};
                refine_step(wider.from_p ? sf_p : sf_q, wider.from_p ? chain_p : chain_q, iv);
                wider.lo = iv.lo;
                wider.hi = iv.hi;
                changed = true;
            }
        }
    }

    for (size_t i = 0; i + 1 < all.size(); ++i) {
        if (all[i].from_p == all[i + 1].from_p) {
            note = "roots do not alternate";
            return false;
        }
    }
    note = "roots alternate strictly";
    return true;
}

}  // namespace

InterlaceResult interlace_decide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero() || !is_real_rooted(q)) {
        throw std::invalid_argument("interlacing undefined: q is not real-rooted");
    }
    std::string note_a;
    std::string note_b;
    const bool via_wronskian = wronskian_route(p, q, note_a);
    const bool via_roots = direct_route(p, q, note_b);
    if (via_wronskian != via_roots) {
        throw std::logic_error("interlace_decide routes disagree: [" + note_a + "] vs [" + note_b +
                               "]");
    }
    return {via_wronskian ? InterlaceVerdict::Interlace : InterlaceVerdict::NotInterlace,
            note_a + "; " + note_b};
}

}  // namespace moprl
