#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistseq/bimod/morphism.hpp"
#include "twistseq/twist/contractions.hpp"

namespace twistseq::twist {

using bimod::BimodulePtr;
using bimod::MorphismPtr;

/// Deliberate damage to ev_i for falsification runs.
struct EvMutation {
    int index = -1;       // which ev_i
    int drop_suffix = 0;  // suffix length l whose component is removed
};

/// Result of rearranging Cone(X -> Cone(Y -> Z)) into Cone(Cone(X[-1] -> Y) -> Z).
struct Rearrangement {
    MorphismPtr f_tilde;     // X[-1] -> Y, the Y[1] part of f
    MorphismPtr g_tilde;     // Cone(f_tilde) -> Z, the Z part of f plus g
    BimodulePtr nested;      // Cone(f)
    BimodulePtr rearranged;  // Cone(g_tilde)
    std::optional<std::string> difference;  // first mismatch of the two tables, if any
};

/// f: X -> Cone(g) closed, g: Y -> Z closed. Structure tables are compared on
/// inputs of length ≤ bound.
Rearrangement rearrange_cone(MorphismPtr f, int bound);

/// The bimodules L_i, G_i, E_n and the morphisms ev_i, tilde-ev for an ordered
/// list of sphere objects. Everything is built on first use and cached.
class Tower {
public:
    Tower(const Category& cat, std::vector<ObjId> spheres, int cone_check_bound = 3);

    const Category& category() const { return *cat_; }
    const std::vector<ObjId>& spheres() const { return spheres_; }
    int n() const { return static_cast<int>(spheres_.size()); }

    BimodulePtr diagonal();
    /// L_i = T_{L1}(...T_{L_{i-1}}(Y^l_{L_i})) ⊗ Y^r_{L_i}, 1 ≤ i ≤ n.
    BimodulePtr L(int i);
    /// ev_i: L_{i+1} -> G_i, 0 ≤ i < n: suffix contractions (r = 0) plus the full collapse.
    MorphismPtr ev(int i, const EvMutation& mutation = {});
    /// G_0 = F_Δ, G_i = Cone(ev_{i-1}).
    BimodulePtr G(int i);

    /// E_n and tilde-ev obtained by rearranging the cone nest; also records the
    /// rearrangement checks of every step.
    BimodulePtr E();
    MorphismPtr tilde_ev();
    const std::vector<Rearrangement>& rearrangements();
    /// Bound used for the rearrangement table comparisons.
    void set_rearrange_bound(int b) { rearrange_bound_ = b; }

    /// E_n and tilde-ev written down directly from the contraction formulas.
    BimodulePtr explicit_E();
    MorphismPtr explicit_tilde_ev();

private:
    void build_E();

    const Category* cat_;
    std::vector<ObjId> spheres_;
    int check_bound_;
    int rearrange_bound_ = 4;
    BimodulePtr diag_;
    std::map<int, BimodulePtr> L_;
    std::map<int, MorphismPtr> ev_;
    std::map<int, BimodulePtr> G_;
    BimodulePtr E_, explicit_E_;
    MorphismPtr tilde_ev_, explicit_tilde_ev_;
    std::vector<Rearrangement> steps_;
};

}  // namespace twistseq::twist
