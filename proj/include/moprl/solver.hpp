#pragma once

#include "moprl/measure.hpp"
#include "moprl/multi_index.hpp"
#include "moprl/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace moprl {

struct NotNormalError : std::runtime_error {
    MultiIndex index;
    explicit NotNormalError(MultiIndex n)
        : std::runtime_error("index not normal: " + n.str()), index(std::move(n)) {}
};

// |n| x |n| stacked-block moment matrix; block j holds rows
// (c^{(j)}_k, ..., c^{(j)}_{k+|n|-1}) for k = 0..n_j-1.
struct MomentMatrix {
    MultiIndex index;
    std::vector<std::vector<Rational>> entries;

    size_t size() const { return entries.size(); }
};

// Type I vector (A^{(1)}, ..., A^{(r)}), deg A^{(j)} <= n_j - 1.
struct TypeIVector {
    std::vector<Polynomial> components;
};

// Which measures get the (x - z)^degree Christoffel transform inside
// det_H_in_z: either every slot or a single one.
class ChristoffelSpec {
public:
    static ChristoffelSpec all(int degree) { return ChristoffelSpec(degree, std::nullopt); }
    static ChristoffelSpec single(size_t slot, int degree) { return ChristoffelSpec(degree, slot); }

    int degree_for(size_t j) const { return (!slot_ || *slot_ == j) ? degree_ : 0; }
    int degree() const { return degree_; }
    bool all_slots() const { return !slot_.has_value(); }
    const std::optional<size_t>& slot() const { return slot_; }

private:
    ChristoffelSpec(int degree, std::optional<size_t> slot) : degree_(degree), slot_(slot) {
        if (degree < 1) throw std::invalid_argument("transform degree must be >= 1");
    }
    int degree_ = 0;
    std::optional<size_t> slot_;
};

// Finite-support stand-in for the infinite-support hypothesis: every
// per-measure atom budget covers n_j plus the transform degree applied to
// that slot, and the distinct atom union covers |n| (plus one when any
// transform is present, since a transform at a special point can delete a
// single union point).
bool support_richness_ok(const MeasureSystem& system, const MultiIndex& n);
bool support_richness_ok(const MeasureSystem& system, const MultiIndex& n,
                         const ChristoffelSpec& transform);
void require_support_richness(const MeasureSystem& system, const MultiIndex& n);
void require_support_richness(const MeasureSystem& system, const MultiIndex& n,
                              const ChristoffelSpec& transform);

MomentMatrix build_H(const MeasureSystem& system, const MultiIndex& n);

Rational det_exact(const MomentMatrix& matrix);

bool is_normal(const MeasureSystem& system, const MultiIndex& n);

// Unique monic type II polynomial of exact degree |n|; every orthogonality
// relation is re-verified by direct moment substitution before returning.
Polynomial solve_type_ii(const MeasureSystem& system, const MultiIndex& n);

// Unique type I vector for |n| >= 1, verified by substitution.
TypeIVector solve_type_i(const MeasureSystem& system, const MultiIndex& n);

// det H_n of the system with the designated measures Christoffel-transformed
// at a symbolic point z, expanded exactly over the polynomial ring.
Polynomial det_H_in_z(const MeasureSystem& system, const MultiIndex& n,
                      const ChristoffelSpec& transform);

}  // namespace moprl
