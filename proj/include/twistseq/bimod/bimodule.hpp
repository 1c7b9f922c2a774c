#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twistseq/ainfty/functor.hpp"
#include "twistseq/ainfty/modules.hpp"

namespace twistseq::bimod {

using ainfty::Category;
using ainfty::Chain;
using ainfty::GenId;
using ainfty::ObjId;
using f2::GradedSpace;
using f2::SparseVec;

/// A∞ bimodule over a finite category (which must outlive it).
///
/// M(A, B) is indexed like a morphism A -> B. Left inputs a1..ar form a path
/// P0 -> ... -> Pr = A and are written before m; right inputs b1..bs form a
/// path B = Q0 -> ... -> Qs and are written after m. μ^{r|1|s} lands in
/// M(P0, Qs) and has degree 1 - r - s.
class Bimodule {
public:
    explicit Bimodule(const Category& cat) : cat_(&cat) {}
    virtual ~Bimodule() = default;

    const Category& category() const { return *cat_; }
    int object_count() const { return cat_->object_count(); }
    const GradedSpace& space(ObjId a, ObjId b) const {
        return spaces_.at(static_cast<std::size_t>(a * object_count() + b));
    }
    /// Sum of dim M(A, B) over all pairs.
    int total_dim() const;

    /// μ^{r|1|s}(a | m | b) on the basis element m of M(A, B).
    virtual SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const = 0;

protected:
    /// Spaces in row-major pair order (A * object_count + B).
    void set_spaces(std::vector<GradedSpace> spaces);

private:
    const Category* cat_;
    std::vector<GradedSpace> spaces_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

/// Pair of objects the output of an operation with these inputs lives on.
inline std::pair<ObjId, ObjId> output_pair(const Category& cat, const Chain& a, ObjId A, ObjId B, const Chain& b) {
    return {ainfty::chain_source(cat, a, A), ainfty::chain_target(cat, b, B)};
}

/// F_Δ(A, B) = hom(A, B) with μ^{r|1|s} = μ_{r+1+s}.
BimodulePtr diagonal(const Category& cat);

/// M ⊗ N for a left module M and a right module N.
BimodulePtr product_bimodule(ainfty::ModulePtr left, ainfty::ModulePtr right);

/// Graph of an endofunctor φ, stored as G(A, B) = hom(A, φ(B)) so that the
/// graph of the identity is literally the diagonal. Right inputs are pushed
/// through φ block by block before multiplying.
BimodulePtr graph_bimodule(const Category& cat, const ainfty::Functor& phi);

/// M[k]: degrees lowered by k, structure maps unchanged.
BimodulePtr shift(BimodulePtr m, int k);

/// The zero bimodule.
BimodulePtr zero_bimodule(const Category& cat);

/// Sub-bimodule spanned by the chosen basis elements of each M(A, B) (global
/// indices, per pair in row-major order). Closure is not checked here; see
/// check_sub_bimodule.
class SubBimodule : public Bimodule {
public:
    SubBimodule(BimodulePtr parent, std::vector<std::vector<int>> selected);

    SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override;
    const Bimodule& parent() const { return *parent_; }
    const BimodulePtr& parent_ptr() const { return parent_; }
    /// Parent index of the i-th basis element of the sub at (A, B).
    int parent_index(ObjId A, ObjId B, int i) const;
    /// Sub index of a parent basis element, or -1.
    int sub_index(ObjId A, ObjId B, int parent_i) const;

private:
    BimodulePtr parent_;
    std::vector<std::vector<int>> selected_;
    std::vector<std::vector<int>> reverse_;
};

}  // namespace twistseq::bimod
