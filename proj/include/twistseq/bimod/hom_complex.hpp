#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "twistseq/bimod/morphism.hpp"
#include "twistseq/f2/graded.hpp"

namespace twistseq::bimod {

/// One coordinate of a pre-morphism M -> N: the coefficient of the output
/// basis element `o` of N in f^{r|1|s}(a, m, b).
struct HomCoordinate {
    Chain a;
    ObjId A = 0, B = 0;
    int m = 0;
    Chain b;
    int o = 0;
};

/// The complex of pre-morphisms M -> N with components r + s ≤ cap. The
/// truncation is the quotient by the subcomplex of components with r + s > cap.
/// Normalized complexes use only non-unit category inputs.
///
/// A coordinate has degree deg(o) - Σ deg(a) - deg(m) - Σ deg(b) + r + s.
class HomComplex {
public:
    HomComplex(BimodulePtr source, BimodulePtr target, int cap, bool normalized = true);

    const BimodulePtr& source() const { return source_; }
    const BimodulePtr& target() const { return target_; }
    int cap() const { return cap_; }
    bool normalized() const { return normalized_; }

    const f2::ChainComplex& complex() const { return complex_; }
    const f2::GradedSpace& space() const { return complex_.space(); }
    int size() const { return space().size(); }
    HomCoordinate coordinate(int i) const;
    std::optional<int> find(const Chain& a, ObjId A, ObjId B, int m, const Chain& b, int o) const;

    /// Homology ranks by degree.
    std::map<int, int> ranks() const;
    /// Coordinates of f (global indices); components outside the complex are dropped.
    SparseVec encode(const PreMorphism& f) const;
    /// The differential applied to a vector of global coordinates.
    SparseVec differential(const SparseVec& v) const;
    /// True when v (homogeneous of degree q) is a cycle whose class is nonzero.
    bool nonzero_class(const SparseVec& v, int q) const;

    /// Precomposition with g: X -> Y as the map Hom(Y, N) -> Hom(X, N), where
    /// `from` is a hom complex out of Y and `to` one out of X with the same
    /// target and cap.
    friend f2::GradedMap precompose(const HomComplex& from, const HomComplex& to, const PreMorphism& g);

private:
    struct InputRecord {
        int a = 0;  // interned chain ids
        ObjId A = 0, B = 0;
        int m = 0;
        int b = 0;
        int offset = 0;  // first coordinate
    };

    int intern(const Chain& c);
    std::optional<int> chain_id(const Chain& c) const;
    std::optional<int> input_index(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const;
    void build();

    BimodulePtr source_, target_;
    int cap_;
    bool normalized_;
    std::vector<Chain> chains_;
    std::map<Chain, int> chain_ids_;
    std::vector<InputRecord> inputs_;
    std::map<std::array<int, 5>, int> input_ids_;
    f2::ChainComplex complex_;
};

f2::GradedMap precompose(const HomComplex& from, const HomComplex& to, const PreMorphism& g);

/// Homology ranks at cap and cap + 1; `unstable` lists the degrees where they differ.
struct CapStability {
    int cap = 0;
    std::map<int, int> ranks;
    std::map<int, int> next;
    std::set<int> unstable;

    bool stable_at(int q) const { return !unstable.count(q); }
};
CapStability cap_stability(const BimodulePtr& source, const BimodulePtr& target, int cap, bool normalized = true);

}  // namespace twistseq::bimod
