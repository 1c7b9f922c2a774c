#include "twistseq/ainfty/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistseq::ainfty {

int AinftyReport::first_failing_order() const {
    int best = 0;
    for (const auto& v : violations)
        if (best == 0 || v.order < best) best = v.order;
    return best;
}

int default_max_order(const Category& cat) {
    auto longest = cat.longest_nonunit_chain();
    if (!longest) return 8;
    return std::min(*longest + 2, 8);
}

SparseVec ainfty_relation(const Category& cat, const Chain& chain) {
    const std::size_t k = chain.size();
    f2::Accumulator acc;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 1; i + j <= k; ++j) {
            const SparseVec inner = cat.mu(std::span<const GenId>(chain).subspan(i, j));
            for (GenId y : inner) acc.add(cat.mu(splice(chain, i, i + j, y)));
        }
    return acc.finish();
}

AinftyReport check_ainfty(const Category& cat, int max_order) {
    if (max_order < 1) throw std::invalid_argument("check_ainfty: max_order must be positive");
    AinftyReport r;
    r.max_order = max_order;
    for (int k = 1; k <= max_order; ++k) {
        const auto chains = all_chains(cat, k, true);
        r.chains_checked[k] = static_cast<int>(chains.size());
        for (const auto& c : chains) {
            SparseVec v = ainfty_relation(cat, c);
            if (!v.empty()) r.violations.push_back({k, c, std::move(v)});
        }
    }
    return r;
}

}  // namespace twistseq::ainfty
