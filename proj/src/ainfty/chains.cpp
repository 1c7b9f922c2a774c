#include "twistseq/ainfty/chains.hpp"

namespace twistseq::ainfty {

namespace {

void extend_forward(const Category& cat, ObjId at, int remaining, bool units, Chain& cur, std::vector<Chain>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (ObjId t = 0; t < cat.object_count(); ++t)
        for (GenId g : cat.hom(at, t)) {
            if (!units && cat.is_unit(g)) continue;
            cur.push_back(g);
            extend_forward(cat, t, remaining - 1, units, cur, out);
            cur.pop_back();
        }
}

}  // namespace

std::vector<Chain> chains_from(const Category& cat, ObjId start, int length, bool include_units) {
    std::vector<Chain> out;
    Chain cur;
    extend_forward(cat, start, length, include_units, cur, out);
    return out;
}

std::vector<Chain> chains_to(const Category& cat, ObjId end, int length, bool include_units) {
    std::vector<Chain> out;
    for (ObjId s = 0; s < cat.object_count(); ++s)
        for (auto& c : chains_from(cat, s, length, include_units))
            if (chain_target(cat, c, s) == end) out.push_back(std::move(c));
    return out;
}

std::vector<Chain> all_chains(const Category& cat, int length, bool include_units) {
    std::vector<Chain> out;
    for (ObjId s = 0; s < cat.object_count(); ++s) {
        auto part = chains_from(cat, s, length, include_units);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace twistseq::ainfty
