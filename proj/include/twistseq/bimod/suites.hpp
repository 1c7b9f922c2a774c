#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twistseq/bimod/morphism.hpp"

namespace twistseq::bimod {

/// One basis input (a | m | b) of a bimodule operation.
struct Input {
    Chain a;
    ObjId A = 0;
    ObjId B = 0;
    int m = 0;
    Chain b;

    int length() const { return static_cast<int>(a.size() + b.size()); }
};

/// Visits every input with r + s ≤ bound, ordered by total length, then r,
/// then object pair, then chains and basis element. With units == false,
/// chains avoid strict units.
void for_each_input(const Bimodule& m, int bound, bool units, const std::function<void(const Input&)>& fn);

/// "a1 a2 | m | b1" using generator names and the basis label of m.
std::string describe(const Bimodule& m, const Input& in);

struct Violation {
    std::string kind;
    Input input;
    SparseVec value;
};

/// Bimodule A∞ relations and the degree law on all inputs up to bound
/// (units included).
std::vector<Violation> check_bimodule(const Bimodule& m, int bound);

/// Inputs where df ≠ 0, up to bound (units included). Stops after `limit`
/// violations when limit > 0.
std::vector<Violation> check_closed(const PreMorphism& f, int bound, int limit = 0);

/// Components whose outputs do not have degree deg f + Σ deg inputs - r - s.
std::vector<Violation> check_degree(const PreMorphism& f, int bound);

/// First difference between the spaces (degrees, words, labels if asked) or
/// the structure maps up to bound, or nullopt when equal.
std::optional<std::string> compare_bimodules(const Bimodule& x, const Bimodule& y, int bound, bool labels);

/// First difference between two pre-morphisms with identical source spaces.
std::optional<std::string> compare_morphisms(const PreMorphism& f, const PreMorphism& g, int bound);

/// Like compare_bimodules, but matches basis elements by their words instead
/// of their positions. Every element must carry a word present in both.
std::optional<std::string> compare_by_word(const Bimodule& x, const Bimodule& y, int bound);
/// Pre-morphisms with the same target whose sources are matched by word.
std::optional<std::string> compare_morphisms_by_word(const PreMorphism& f, const PreMorphism& g, int bound);

/// Number of inputs visited by for_each_input with units included.
long count_inputs(const Bimodule& m, int bound);

}  // namespace twistseq::bimod
