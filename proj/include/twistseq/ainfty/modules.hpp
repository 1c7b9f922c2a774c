#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistseq/ainfty/chains.hpp"
#include "twistseq/f2/graded.hpp"

namespace twistseq::ainfty {

using f2::ChainWord;
using f2::GradedSpace;

enum class Side { left, right };

/// One-sided A∞ module over a category (which must outlive it).
///
/// Left modules take a path a1..ar ending at A and act on M(A), landing in
/// M(source(a1)). Right modules take a path b1..bs starting at B and act on
/// M(B), landing in M(target(bs)).
class OneSidedModule {
public:
    OneSidedModule(const Category& cat, Side side) : cat_(&cat), side_(side) {}
    virtual ~OneSidedModule() = default;

    const Category& category() const { return *cat_; }
    Side side() const { return side_; }
    const GradedSpace& space(ObjId o) const { return spaces_.at(static_cast<std::size_t>(o)); }

    /// μ^{r|1} (left) or μ^{1|s} (right) on one basis element of space(at).
    virtual SparseVec act(const Chain& inputs, ObjId at, int m) const = 0;

    /// Object on the far side of the inputs (where the output lives).
    ObjId output_object(const Chain& inputs, ObjId at) const {
        return side_ == Side::left ? chain_source(*cat_, inputs, at) : chain_target(*cat_, inputs, at);
    }

protected:
    void set_spaces(std::vector<GradedSpace> spaces) { spaces_ = std::move(spaces); }

private:
    const Category* cat_;
    Side side_;
    std::vector<GradedSpace> spaces_;
};

using ModulePtr = std::shared_ptr<const OneSidedModule>;

/// Label of a bar-type word: factor names joined by ⊗, prefixed by the tuple.
std::string word_label(const Category& cat, const ChainWord& w);

/// Y^l_X = hom(-, X), structure maps μ_{r+1}.
ModulePtr yoneda_left(const Category& cat, ObjId x);
/// Y^r_X = hom(X, -), structure maps μ_{s+1}. A tag, when given, is recorded
/// as the tuple entry of every basis word.
ModulePtr yoneda_right(const Category& cat, ObjId x, std::optional<int> tag = std::nullopt);

/// T_X M(A) = M(A) ⊕ hom(A, X) ⊗ M(X)[1] for a left module M. `tag` is
/// prepended to the tuple of every word in the new summand; nested twists
/// need distinct tags.
ModulePtr abstract_twist(ModulePtr m, ObjId x, int tag);

/// T_{L1}(T_{L2}(... T_{Ln}(Y^l_{target}))), with tag i on the twist along L_i.
ModulePtr iterated_twist_oracle(const Category& cat, const std::vector<ObjId>& spheres, ObjId target);

struct ModuleViolation {
    std::string kind;  // "relation" or "degree"
    Chain chain;
    ObjId at = 0;
    int element = 0;
    SparseVec value;
};

/// Module A∞ relations and the degree law on every basis element and every
/// input chain of length ≤ bound (units included).
std::vector<ModuleViolation> check_module(const OneSidedModule& m, int bound);

}  // namespace twistseq::ainfty
