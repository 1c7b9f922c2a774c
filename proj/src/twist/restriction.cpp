#include "twistseq/twist/restriction.hpp"

#include <stdexcept>

#include "twistseq/bimod/suites.hpp"
#include "twistseq/f2/graded.hpp"

namespace twistseq::twist {

namespace {

constexpr std::size_t max_failures = 5;

f2::ChainComplex complex_at(const bimod::Bimodule& m, ObjId A, ObjId B) {
    return f2::ChainComplex::from_images(m.space(A, B), [&](int e) { return m.act({}, A, B, e, {}); });
}

}  // namespace

std::shared_ptr<bimod::SubBimodule> tuple_summand(bimod::BimodulePtr m, const IndexTuple& tuple) {
    const int n = m->object_count();
    std::vector<std::vector<int>> selected(static_cast<std::size_t>(n * n));
    for (ObjId A = 0; A < n; ++A)
        for (ObjId B = 0; B < n; ++B) {
            const auto& sp = m->space(A, B);
            for (int i = 0; i < sp.size(); ++i)
                if (sp[i].word.tuple == tuple) selected[static_cast<std::size_t>(A * n + B)].push_back(i);
        }
    return std::make_shared<bimod::SubBimodule>(std::move(m), std::move(selected));
}

int RestrictionReport::total_rank() const {
    int t = 0;
    for (const auto& [pair, ranks] : induced)
        for (auto [q, r] : ranks) t += r;
    return t;
}

RestrictionReport restriction_nontriviality(const bimod::PreMorphism& f, const bimod::SubBimodule& sub, int bound) {
    if (&sub.parent() != f.source().get()) throw std::invalid_argument("restriction: sub is not inside the source of f");
    RestrictionReport rep;
    const bimod::Bimodule& parent = sub.parent();
    const Category& cat = parent.category();
    bimod::for_each_input(sub, bound, true, [&](const bimod::Input& in) {
        const auto [p0, qs] = bimod::output_pair(cat, in.a, in.A, in.B, in.b);
        const f2::SparseVec v = parent.act(in.a, in.A, in.B, sub.parent_index(in.A, in.B, in.m), in.b);
        for (int o : v)
            if (sub.sub_index(p0, qs, o) < 0) {
                if (rep.closure_failures.size() < max_failures) rep.closure_failures.push_back(bimod::describe(sub, in));
                return;
            }
    });
    if (!rep.closed()) return rep;

    const int n = sub.object_count();
    for (ObjId A = 0; A < n; ++A)
        for (ObjId B = 0; B < n; ++B) {
            const auto src = complex_at(sub, A, B);
            const auto tgt = complex_at(*f.target(), A, B);
            const auto map = f2::GradedMap::from_images(src.space(), tgt.space(), f.degree(), [&](int e) {
                return f.apply({}, A, B, sub.parent_index(A, B, e), {});
            });
            auto& ranks = rep.induced[{A, B}];
            for (int q : src.degrees()) ranks[q] = f2::induced_rank(src, tgt, q, f.degree(), map.block(q));
        }
    return rep;
}

}  // namespace twistseq::twist
