#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "twistseq/bimod/bimodule.hpp"

namespace twistseq::bimod {

/// Pre-morphism of bimodules of a fixed degree. The component f^{r|1|s} has
/// degree degree - r - s and takes (a | m | b) with m in source(A, B) to
/// target(P0, Qs).
class PreMorphism {
public:
    PreMorphism(BimodulePtr source, BimodulePtr target, int degree, std::string name)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree), name_(std::move(name)) {
        if (&source_->category() != &target_->category())
            throw std::invalid_argument("pre-morphism between bimodules over different categories");
    }
    virtual ~PreMorphism() = default;

    const BimodulePtr& source() const { return source_; }
    const BimodulePtr& target() const { return target_; }
    const Category& category() const { return source_->category(); }
    int degree() const { return degree_; }
    const std::string& name() const { return name_; }

    virtual SparseVec apply(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const = 0;

private:
    BimodulePtr source_;
    BimodulePtr target_;
    int degree_;
    std::string name_;
};

using MorphismPtr = std::shared_ptr<const PreMorphism>;
using ComponentFn = std::function<SparseVec(const Chain&, ObjId, ObjId, int, const Chain&)>;

/// Pre-morphism given by a component function.
MorphismPtr make_morphism(BimodulePtr source, BimodulePtr target, int degree, std::string name, ComponentFn fn);

MorphismPtr identity_morphism(BimodulePtr m);
MorphismPtr zero_morphism(BimodulePtr source, BimodulePtr target, int degree = 0);
/// (g∘f)(a|m|b) = Σ g(a_outer | f(a_inner | m | b_inner) | b_outer).
MorphismPtr compose(MorphismPtr g, MorphismPtr f);
/// Same components viewed as a map into `target`, which must have the same
/// spaces (degrees and words, index for index) as f's target.
MorphismPtr retarget(MorphismPtr f, BimodulePtr target);
/// Same components viewed as a map out of `source`, which must have the same
/// spaces as f's source.
MorphismPtr resource(MorphismPtr f, BimodulePtr source);

/// Both halves of (df)(a|m|b): `lhs` collects μ_target ∘ f, `rhs` collects
/// f ∘ μ_source and f with a category μ inserted among the a's or the b's.
/// df = lhs + rhs.
struct DifferentialSides {
    SparseVec lhs;
    SparseVec rhs;
    SparseVec total() const { return lhs + rhs; }
};
DifferentialSides differential_sides(const PreMorphism& f, const Chain& a, ObjId A, ObjId B, int m, const Chain& b);

/// The hom-complex differential of f, a pre-morphism of degree deg f + 1.
MorphismPtr differential_of(MorphismPtr f);

/// Raised by cone() and similar constructions when a morphism is not closed.
class NotClosed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cone(f) = X[1] ⊕ Y for closed f: X -> Y of degree 0, with
/// μ(a | (x, y) | b) = (μ_X(a|x|b), μ_Y(a|y|b) + f(a|x|b)). Source elements
/// come first in every space. Closedness is verified on inputs of length
/// ≤ check_bound (negative skips the check).
BimodulePtr cone(MorphismPtr f, int check_bound = 3);

/// Structure of a bimodule built by cone(); null for anything else.
struct ConeParts {
    MorphismPtr map;
    BimodulePtr source;
    BimodulePtr target;
};
const ConeParts* cone_parts(const Bimodule& m);

/// Inclusion Y -> Cone(f) and projection Cone(f) -> X[1], both closed of degree 0.
MorphismPtr cone_inclusion(BimodulePtr cone);
MorphismPtr cone_projection(BimodulePtr cone);

/// Inclusion of a sub-bimodule into its parent.
MorphismPtr sub_inclusion(std::shared_ptr<const SubBimodule> sub);

}  // namespace twistseq::bimod
