#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twistseq/bimod/hom_complex.hpp"
#include "twistseq/f2/graded.hpp"

namespace twistseq::sequences {

using ainfty::Category;
using ainfty::ObjId;
using bimod::BimodulePtr;
using bimod::MorphismPtr;

/// One spot of the long exact sequence: the homology of `leg` in `degree`,
/// with the ranks of the maps into and out of it.
struct LesPosition {
    int leg = 0;
    int degree = 0;
    int dim = 0;
    int incoming = 0;
    int outgoing = 0;
    bool exact = false;  // incoming + outgoing == dim
};

/// ... -> H^q(leg 0) -> H^q(leg 1) -> H^q(leg 2) -> H^{q+1}(leg 0) -> ...
struct LesReport {
    std::array<std::string, 3> legs;
    std::array<std::map<int, int>, 3> ranks;      // homology by degree
    std::array<std::map<int, int>, 3> map_ranks;  // map out of leg i, by source degree
    std::vector<LesPosition> positions;
    std::vector<std::string> composite_failures;  // consecutive maps whose composite is nonzero on homology
    std::array<std::set<int>, 3> unstable;        // capped legs: degrees that change at cap + 1
    int cap = -1;                                 // -1 for pairwise evaluation

    bool exact() const;
    std::array<int, 3> euler() const;
    /// χ(leg 1) = χ(leg 0) + χ(leg 2), forced by the short exact sequence of complexes.
    bool euler_additive() const;
};

/// Builds the report from three complexes and chain maps a: 0 -> 1, b: 1 -> 2
/// (degree 0) and c: 2 -> 0 (degree +1).
LesReport les_from_maps(std::array<std::string, 3> names, std::array<const f2::ChainComplex*, 3> legs,
                        const f2::GradedMap& a, const f2::GradedMap& b, const f2::GradedMap& c);

/// X -f-> Y -> Cone(f) -> X[1] evaluated at the object pair (A, B) with the
/// internal differentials μ^{0|1|0}.
LesReport les_of_cone(const MorphismPtr& f, std::pair<ObjId, ObjId> at);

/// Hom(Cone(f), N) -> Hom(Y, N) -> Hom(X, N) -> Hom(Cone(f), N)[1], every hom
/// complex normalized and truncated at `cap`. Degrees that move at cap + 1
/// are flagged, not fatal.
LesReport les_of_cone(const MorphismPtr& f, const BimodulePtr& into, int cap);

/// D = Hom(E_n, F_Δ) next to Hom(F_Δ, F_Δ), n = spheres.size().
struct DReport {
    int n = 0;
    int cap = 0;
    bimod::CapStability d;
    bimod::CapStability diagonal;
    std::map<int, int> precomposition;  // rank of H(Hom(F_Δ, F_Δ)) -> H(D) under tilde-ev, by degree
    bool identity_nonzero = false;      // class of the identity in H^0(Hom(F_Δ, F_Δ))
    std::optional<LesReport> sequence;  // Hom(Cone(tilde-ev), F_Δ) -> Hom(F_Δ, F_Δ) -> D, on request
};
DReport build_D(const Category& cat, const std::vector<ObjId>& spheres, int cap, bool with_sequence = false);

/// The sequence of tilde-ev: E_n -> F_Δ at (N, N'), with its cone compared
/// degree by degree against the iterated twist of Y^l_{N'} evaluated at N.
struct OpenReport {
    LesReport les;
    std::map<int, int> cone_ranks;
    std::map<int, int> oracle_ranks;
    bool oracle_agrees = false;
};
OpenReport open_sequence(const Category& cat, const std::vector<ObjId>& spheres, ObjId N, ObjId N2);

}  // namespace twistseq::sequences
