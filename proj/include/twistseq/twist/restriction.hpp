#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "twistseq/bimod/bimodule.hpp"
#include "twistseq/bimod/morphism.hpp"
#include "twistseq/twist/contractions.hpp"

namespace twistseq::twist {

/// Selects the basis elements of m whose word carries the given index tuple.
std::shared_ptr<bimod::SubBimodule> tuple_summand(bimod::BimodulePtr m, const IndexTuple& tuple);

struct RestrictionReport {
    std::vector<std::string> closure_failures;  // inputs whose action leaves the sub
    /// (A, B) -> degree -> rank of H(sub(A, B)) -> H(target(A, B)) under f^{0|1|0}.
    std::map<std::pair<ObjId, ObjId>, std::map<int, int>> induced;

    bool closed() const { return closure_failures.empty(); }
    int total_rank() const;
    bool nontrivial() const { return closed() && total_rank() > 0; }
};

/// Checks that `sub` is closed under the parent's structure maps on inputs of
/// length ≤ bound, then computes the ranks induced on μ^{0|1|0}-homology by
/// f restricted to it, at every object pair.
RestrictionReport restriction_nontriviality(const bimod::PreMorphism& f, const bimod::SubBimodule& sub, int bound);

}  // namespace twistseq::twist
