#pragma once

#include <vector>

#include "twistseq/ainfty/category.hpp"

namespace twistseq::ainfty {

using Chain = std::vector<GenId>;

/// Composable chains of the given length starting at `start`.
std::vector<Chain> chains_from(const Category& cat, ObjId start, int length, bool include_units);
/// Composable chains of the given length ending at `end`.
std::vector<Chain> chains_to(const Category& cat, ObjId end, int length, bool include_units);
/// All composable chains of the given length (length >= 1).
std::vector<Chain> all_chains(const Category& cat, int length, bool include_units);

/// Source of the chain, or `fallback` when empty.
inline ObjId chain_source(const Category& cat, const Chain& c, ObjId fallback) {
    return c.empty() ? fallback : cat.gen(c.front()).source;
}
/// Target of the chain, or `fallback` when empty.
inline ObjId chain_target(const Category& cat, const Chain& c, ObjId fallback) {
    return c.empty() ? fallback : cat.gen(c.back()).target;
}

/// Copy of c[from, to).
inline Chain slice(const Chain& c, std::size_t from, std::size_t to) {
    return Chain(c.begin() + static_cast<std::ptrdiff_t>(from), c.begin() + static_cast<std::ptrdiff_t>(to));
}

/// c with c[from, to) replaced by the single generator g.
inline Chain splice(const Chain& c, std::size_t from, std::size_t to, GenId g) {
    Chain out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(from));
    out.push_back(g);
    out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(to), c.end());
    return out;
}

/// Calls fn on every split of [0, n) into consecutive nonempty blocks, passed
/// as the list of block end positions.
template <class Fn>
void for_each_composition(std::size_t n, std::vector<std::size_t>& ends, Fn&& fn) {
    const std::size_t start = ends.empty() ? 0 : ends.back();
    if (start == n) {
        fn(ends);
        return;
    }
    for (std::size_t e = start + 1; e <= n; ++e) {
        ends.push_back(e);
        for_each_composition(n, ends, fn);
        ends.pop_back();
    }
}

}  // namespace twistseq::ainfty
