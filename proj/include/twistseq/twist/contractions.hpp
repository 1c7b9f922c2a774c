#pragma once

#include <string>
#include <vector>

#include "twistseq/bimod/bimodule.hpp"

namespace twistseq::twist {

using bimod::Category;
using bimod::Chain;
using bimod::ObjId;
using f2::ChainWord;

using IndexTuple = std::vector<int>;

/// All strictly increasing tuples from {1..n}, empty one included, ordered by
/// length and then lexicographically.
std::vector<IndexTuple> enumerate_tuples(int n);

enum class Kind { internal, prefix, middle, suffix, full };
const char* kind_name(Kind k);
inline constexpr Kind all_kinds[] = {Kind::internal, Kind::prefix, Kind::middle, Kind::suffix, Kind::full};

/// One term of a contraction map: the word it produces (its tuple says which
/// summand it lands in). Full collapses produce words with an empty tuple.
struct Term {
    Kind kind;
    ChainWord target;
};

/// Terms of the bar-type structure maps on the word x0 ⊗ ... ⊗ xk with tuple
/// i1 < ... < ik, for left inputs a and right inputs b:
///   internal  μ1 on one factor (r = s = 0)
///   prefix    μ_{r+j}(a, x0..x_{j-1}), j ≤ k, r + j ≥ 2 (s = 0)
///   middle    μ_j on x_p..x_{p+j-1}, p ≥ 1, j ≥ 2, p + j ≤ k (r = s = 0)
///   suffix    μ_{l+1+s}(x_{k-l}..x_k, b), l < k, l + s ≥ 1 (r = 0)
///   full      μ_{r+k+1+s}(a, x0..xk, b) into the k = 0 summand (any r, s)
/// Each μ output generator gives its own term.
std::vector<Term> contraction_terms(const Category& cat, const ChainWord& w, const Chain& a, const Chain& b);

/// Σ over tuples of Π hom dims along A -> L_{i1} -> ... -> L_{ik} -> B,
/// counting only tuples with at least `min_length` entries.
int bar_dimension(const Category& cat, const std::vector<ObjId>& spheres, ObjId A, ObjId B, int min_length = 0);

/// Space of the explicit bar model: all words over nonempty tuples (or all
/// tuples when with_empty), in tuple order then factor order, with degree
/// Σ deg - (k - 1) - extra_shift.
f2::GradedSpace bar_space(const Category& cat, const std::vector<ObjId>& spheres, ObjId A, ObjId B, bool with_empty,
                          int extra_shift);

}  // namespace twistseq::twist
