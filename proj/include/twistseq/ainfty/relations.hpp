#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistseq/ainfty/chains.hpp"

namespace twistseq::ainfty {

struct RelationViolation {
    int order = 0;
    Chain chain;
    SparseVec value;  // nonzero left-hand side
};

struct AinftyReport {
    int max_order = 0;
    std::map<int, int> chains_checked;  // order -> number of chains
    std::vector<RelationViolation> violations;

    bool pass() const { return violations.empty(); }
    /// Smallest order with a violation, or 0.
    int first_failing_order() const;
};

/// Default validation bound: longest composable chain of non-unit generators
/// plus two, capped at 8.
int default_max_order(const Category& cat);

/// Σ_{i,j} μ(x1..xi, μ_j(x_{i+1}..x_{i+j}), ..., xk) on one chain.
SparseVec ainfty_relation(const Category& cat, const Chain& chain);

/// Checks the A∞ relations on every composable chain (units included) of
/// length 1..max_order.
AinftyReport check_ainfty(const Category& cat, int max_order);

}  // namespace twistseq::ainfty
