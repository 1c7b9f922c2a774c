#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistseq/twist/tower.hpp"

namespace twistseq::twist {

/// Position of a target summand relative to the source tuple S:
///   case0  empty target (the diagonal summand)
///   case1  a consecutive block of S that does not start at S[0]
///   case2  starts at S[0] and skips a block of S
///   case3  a proper prefix of S
///   other  anything else (must receive no terms)
enum class LemmaCase { case0, case1, case2, case3, other };
inline constexpr std::array<LemmaCase, 5> all_cases{LemmaCase::case0, LemmaCase::case1, LemmaCase::case2,
                                                    LemmaCase::case3, LemmaCase::other};
const char* case_name(LemmaCase c);
LemmaCase classify(const IndexTuple& source, const IndexTuple& target);

struct CaseStats {
    long nontrivial = 0;  // (input, output) pairs where both sides carry the term
    long violations = 0;  // pairs where exactly one side does
    std::vector<std::string> witnesses;
};

struct KeylemmaReport {
    int n = 0;
    int bound = 0;
    long inputs = 0;
    std::map<LemmaCase, CaseStats> cases;

    bool pass() const;
};

/// Evaluates both sides of d(ev_i) = 0 on every input of L_{i+1} with
/// r + s ≤ bound (units included), for every i < n, and sorts the output terms
/// by case. The mutation, if any, replaces the matching ev_i.
KeylemmaReport check_keylemma(Tower& tower, int bound, const EvMutation& mutation = {});

/// Mechanical E_n against the explicit contraction formulas and the published
/// case table, which also attaches a full collapse to μ_E^{r|1|s} for r, s > 0.
struct TableComparison {
    std::optional<std::string> structure_difference;  // mechanical E_n vs explicit
    std::optional<std::string> tilde_ev_difference;   // mechanical vs explicit tilde-ev
    long mixed_nonzero = 0;        // inputs with r, s > 0 where mechanical μ_E is nonzero
    long full_terms_outside = 0;   // nonzero full-collapse terms on inputs with r, s > 0
    std::string full_example;      // one such input, if any
};
TableComparison compare_with_table(Tower& tower, int bound);

/// Nonzero contraction terms by kind in μ_E (internal, prefix, middle, suffix)
/// and tilde-ev (full), over inputs with r + s ≤ bound.
std::map<Kind, long> census(Tower& tower, int bound);

}  // namespace twistseq::twist
