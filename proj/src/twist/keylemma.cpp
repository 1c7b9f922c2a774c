#include "twistseq/twist/keylemma.hpp"

#include <algorithm>

#include "twistseq/ainfty/modules.hpp"
#include "twistseq/bimod/suites.hpp"

namespace twistseq::twist {

namespace {

constexpr std::size_t max_witnesses = 5;

bool is_prefix(const IndexTuple& t, const IndexTuple& s) {
    return t.size() < s.size() && std::equal(t.begin(), t.end(), s.begin());
}

std::string tuple_string(const IndexTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

}  // namespace

const char* case_name(LemmaCase c) {
    switch (c) {
        case LemmaCase::case0: return "case0";
        case LemmaCase::case1: return "case1";
        case LemmaCase::case2: return "case2";
        case LemmaCase::case3: return "case3";
        case LemmaCase::other: return "other";
    }
    return "?";
}

LemmaCase classify(const IndexTuple& source, const IndexTuple& target) {
    if (target.empty()) return LemmaCase::case0;
    if (is_prefix(target, source)) return LemmaCase::case3;
    auto it = std::search(source.begin() + 1, source.end(), target.begin(), target.end());
    if (!source.empty() && it != source.end()) return LemmaCase::case1;
    if (!source.empty() && target.front() == source.front()) {
        // a single skipped block: target = S[0, p) + S[q, q + |target| - p)
        for (std::size_t p = 1; p < target.size(); ++p)
            for (std::size_t q = p + 1; q + (target.size() - p) <= source.size(); ++q)
                if (std::equal(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(p), source.begin()) &&
                    std::equal(target.begin() + static_cast<std::ptrdiff_t>(p), target.end(),
                               source.begin() + static_cast<std::ptrdiff_t>(q)))
                    return LemmaCase::case2;
    }
    return LemmaCase::other;
}

bool KeylemmaReport::pass() const {
    for (const auto& [c, s] : cases)
        if (s.violations > 0) return false;
    return true;
}

KeylemmaReport check_keylemma(Tower& tower, int bound, const EvMutation& mutation) {
    KeylemmaReport rep;
    rep.n = tower.n();
    rep.bound = bound;
    for (LemmaCase c : all_cases) rep.cases[c];
    const Category& cat = tower.category();
    for (int i = 0; i < tower.n(); ++i) {
        const MorphismPtr ev = tower.ev(i, mutation);
        const BimodulePtr src = ev->source(), tgt = ev->target();
        bimod::for_each_input(*src, bound, true, [&](const bimod::Input& in) {
            ++rep.inputs;
            const auto sides = bimod::differential_sides(*ev, in.a, in.A, in.B, in.m, in.b);
            if (sides.lhs.empty() && sides.rhs.empty()) return;
            const auto [p0, qs] = bimod::output_pair(cat, in.a, in.A, in.B, in.b);
            const IndexTuple& S = src->space(in.A, in.B)[in.m].word.tuple;
            std::vector<int> outputs = sides.lhs.indices();
            outputs.insert(outputs.end(), sides.rhs.begin(), sides.rhs.end());
            std::sort(outputs.begin(), outputs.end());
            outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
            for (int o : outputs) {
                const auto& target = tgt->space(p0, qs)[o];
                CaseStats& st = rep.cases[classify(S, target.word.tuple)];
                const bool l = sides.lhs.contains(o), r = sides.rhs.contains(o);
                if (l && r) {
                    ++st.nontrivial;
                } else {
                    ++st.violations;
                    if (st.witnesses.size() < max_witnesses)
                        st.witnesses.push_back(ev->name() + " on " + bimod::describe(*src, in) + " -> " + target.label +
                                               " (source " + tuple_string(S) + ", target " +
                                               tuple_string(target.word.tuple) + ", only on the " +
                                               (l ? "left" : "right") + " side)");
                }
            }
        });
    }
    return rep;
}

TableComparison compare_with_table(Tower& tower, int bound) {
    TableComparison out;
    out.structure_difference = bimod::compare_by_word(*tower.E(), *tower.explicit_E(), bound);
    out.tilde_ev_difference = bimod::compare_morphisms_by_word(*tower.tilde_ev(), *tower.explicit_tilde_ev(), bound);
    const Category& cat = tower.category();
    const BimodulePtr e = tower.E();
    bimod::for_each_input(*e, bound, true, [&](const bimod::Input& in) {
        if (in.a.empty() || in.b.empty()) return;
        if (!e->act(in.a, in.A, in.B, in.m, in.b).empty()) ++out.mixed_nonzero;
        bool any = false;
        for (const Term& t : contraction_terms(cat, e->space(in.A, in.B)[in.m].word, in.a, in.b))
            if (t.kind == Kind::full) {
                ++out.full_terms_outside;
                any = true;
            }
        if (any && out.full_example.empty()) out.full_example = bimod::describe(*e, in);
    });
    return out;
}

std::map<Kind, long> census(Tower& tower, int bound) {
    std::map<Kind, long> out;
    for (Kind k : all_kinds) out[k] = 0;
    const BimodulePtr e = tower.explicit_E();
    bimod::for_each_input(*e, bound, true, [&](const bimod::Input& in) {
        for (const Term& t : contraction_terms(tower.category(), e->space(in.A, in.B)[in.m].word, in.a, in.b)) ++out[t.kind];
    });
    return out;
}

}  // namespace twistseq::twist
