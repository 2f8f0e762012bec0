#pragma once

#include "moprl/polynomial.hpp"

#include <string>

namespace moprl {

enum class InterlaceVerdict { Interlace, NotInterlace };

struct InterlaceResult {
    InterlaceVerdict verdict;
    std::string witness;

    bool interlaces() const { return verdict == InterlaceVerdict::Interlace; }
};

// Decides strict interlacing of p and q. q must be real-rooted (otherwise
// std::invalid_argument "interlacing undefined"). Two independent routes are
// evaluated and must agree, else std::logic_error:
//   (a) deg p <= deg q + 1 and the squarefree part of W(p, q) has no real
//       roots (and W is not identically zero);
//   (b) isolate the roots of both, refine until pairwise disjoint, check
//       simplicity, disjoint zero sets, and strict alternation.
InterlaceResult interlace_decide(const Polynomial& p, const Polynomial& q);

}  // namespace moprl
