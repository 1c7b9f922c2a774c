#pragma once

#include <map>
#include <vector>

#include "twistseq/ainfty/chains.hpp"

namespace twistseq::ainfty {

/// A∞ endofunctor of a finite category. Component k sends a composable chain
/// of length k to an element of hom(φ(A0), φ(Ak)) of degree Σ deg + 1 - k.
/// Components that are not stored are zero.
class Functor {
public:
    explicit Functor(const Category& cat);

    static Functor identity(const Category& cat);
    /// Strict functor: object permutation plus a generator map. Units must go
    /// to units.
    static Functor strict(const Category& cat, std::vector<ObjId> objects, std::map<GenId, SparseVec> generators);

    ObjId object(ObjId o) const { return objects_.at(static_cast<std::size_t>(o)); }
    void set_object(ObjId o, ObjId image) { objects_.at(static_cast<std::size_t>(o)) = image; }
    void set_component(Chain inputs, SparseVec output);

    /// φ_k on a chain. φ_1 of a unit is the unit; higher components vanish on units.
    SparseVec apply(const Chain& chain) const;
    int max_order() const { return max_order_; }
    bool is_strict() const { return max_order_ <= 1; }

private:
    const Category* cat_;
    std::vector<ObjId> objects_;
    std::map<Chain, SparseVec> comp_;
    int max_order_ = 0;
};

/// μ_k extended multilinearly: each slot holds a sum of generators forming
/// composable chains.
SparseVec mu_multilinear(const Category& cat, const std::vector<SparseVec>& slots);

struct FunctorViolation {
    Chain chain;
    SparseVec value;
};

/// Checks Σ φ(.., μ(..), ..) = Σ μ(φ(block_1), .., φ(block_j)) on every chain
/// of length ≤ bound (units included), plus the degree of every component.
std::vector<FunctorViolation> check_functor(const Category& cat, const Functor& phi, int bound);

}  // namespace twistseq::ainfty
