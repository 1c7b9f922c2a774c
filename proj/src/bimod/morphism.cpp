#include "twistseq/bimod/morphism.hpp"

#include <set>

#include "twistseq/bimod/suites.hpp"

namespace twistseq::bimod {

namespace {

using ainfty::slice;
using ainfty::splice;

class Lambda : public PreMorphism {
public:
    Lambda(BimodulePtr s, BimodulePtr t, int degree, std::string name, ComponentFn fn)
        : PreMorphism(std::move(s), std::move(t), degree, std::move(name)), fn_(std::move(fn)) {}
    SparseVec apply(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override {
        return fn_(a, A, B, m, b);
    }

private:
    ComponentFn fn_;
};

void require_same_spaces(const Bimodule& x, const Bimodule& y, const char* what) {
    for (ObjId A = 0; A < x.object_count(); ++A)
        for (ObjId B = 0; B < x.object_count(); ++B) {
            const GradedSpace &sx = x.space(A, B), &sy = y.space(A, B);
            bool same = sx.size() == sy.size();
            for (int i = 0; same && i < sx.size(); ++i) same = sx[i].degree == sy[i].degree && sx[i].word == sy[i].word;
            if (!same) throw std::invalid_argument(std::string(what) + ": spaces differ");
        }
}

class ConeBimodule : public Bimodule {
public:
    explicit ConeBimodule(MorphismPtr f) : Bimodule(f->category()) {
        parts_ = {f, f->source(), f->target()};
        const Bimodule &x = *parts_.source, &y = *parts_.target;
        bool clash = false;
        for (ObjId A = 0; A < object_count() && !clash; ++A)
            for (ObjId B = 0; B < object_count() && !clash; ++B) {
                std::set<std::string> seen;
                for (const auto& e : x.space(A, B).basis()) seen.insert(e.label);
                for (const auto& e : y.space(A, B).basis())
                    if (seen.count(e.label)) clash = true;
            }
        std::vector<GradedSpace> spaces;
        for (ObjId A = 0; A < object_count(); ++A)
            for (ObjId B = 0; B < object_count(); ++B) {
                std::vector<f2::BasisElement> basis;
                for (auto e : x.space(A, B).basis()) {
                    e.degree -= 1;
                    if (clash) e.label = "s." + e.label;
                    basis.push_back(std::move(e));
                }
                for (auto e : y.space(A, B).basis()) {
                    if (clash) e.label = "t." + e.label;
                    basis.push_back(std::move(e));
                }
                spaces.emplace_back(std::move(basis));
            }
        set_spaces(std::move(spaces));
    }

    SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override {
        const Bimodule &x = *parts_.source, &y = *parts_.target;
        const int nx = x.space(A, B).size();
        const auto [p0, qs] = output_pair(category(), a, A, B, b);
        const int off = x.space(p0, qs).size();
        if (m >= nx) return y.act(a, A, B, m - nx, b).offset(off);
        f2::Accumulator acc;
        acc.add(x.act(a, A, B, m, b));
        acc.add_offset(parts_.map->apply(a, A, B, m, b), off);
        return acc.finish();
    }

    const ConeParts& parts() const { return parts_; }

private:
    ConeParts parts_;
};

}  // namespace

MorphismPtr make_morphism(BimodulePtr source, BimodulePtr target, int degree, std::string name, ComponentFn fn) {
    return std::make_shared<Lambda>(std::move(source), std::move(target), degree, std::move(name), std::move(fn));
}

MorphismPtr identity_morphism(BimodulePtr m) {
    return make_morphism(m, m, 0, "id", [](const Chain& a, ObjId, ObjId, int x, const Chain& b) {
        return a.empty() && b.empty() ? SparseVec{x} : SparseVec{};
    });
}

MorphismPtr zero_morphism(BimodulePtr source, BimodulePtr target, int degree) {
    return make_morphism(std::move(source), std::move(target), degree, "0",
                         [](const Chain&, ObjId, ObjId, int, const Chain&) { return SparseVec{}; });
}

MorphismPtr compose(MorphismPtr g, MorphismPtr f) {
    if (f->target().get() != g->source().get()) require_same_spaces(*f->target(), *g->source(), "compose");
    const std::string name = g->name() + "∘" + f->name();
    return make_morphism(f->source(), g->target(), f->degree() + g->degree(), name,
                         [f, g](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                             const Category& cat = f->category();
                             f2::Accumulator acc;
                             for (std::size_t i = 0; i <= a.size(); ++i)
                                 for (std::size_t j = 0; j <= b.size(); ++j) {
                                     const Chain ai = slice(a, i, a.size()), bj = slice(b, 0, j);
                                     const auto [pi, qj] = output_pair(cat, ai, A, B, bj);
                                     const Chain ao = slice(a, 0, i), bo = slice(b, j, b.size());
                                     for (int y : f->apply(ai, A, B, m, bj)) acc.add(g->apply(ao, pi, qj, y, bo));
                                 }
                             return acc.finish();
                         });
}

MorphismPtr retarget(MorphismPtr f, BimodulePtr target) {
    require_same_spaces(*f->target(), *target, "retarget");
    return make_morphism(f->source(), std::move(target), f->degree(), f->name(),
                         [f](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) { return f->apply(a, A, B, m, b); });
}

MorphismPtr resource(MorphismPtr f, BimodulePtr source) {
    require_same_spaces(*f->source(), *source, "resource");
    return make_morphism(std::move(source), f->target(), f->degree(), f->name(),
                         [f](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) { return f->apply(a, A, B, m, b); });
}

DifferentialSides differential_sides(const PreMorphism& f, const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
    const Category& cat = f.category();
    const Bimodule &src = *f.source(), &tgt = *f.target();
    const std::size_t r = a.size(), s = b.size();
    f2::Accumulator lhs, rhs;
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = 0; j <= s; ++j) {
            const Chain ai = slice(a, i, r), bj = slice(b, 0, j);
            const auto [pi, qj] = output_pair(cat, ai, A, B, bj);
            const Chain ao = slice(a, 0, i), bo = slice(b, j, s);
            for (int y : f.apply(ai, A, B, m, bj)) lhs.add(tgt.act(ao, pi, qj, y, bo));
            for (int y : src.act(ai, A, B, m, bj)) rhs.add(f.apply(ao, pi, qj, y, bo));
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 1; i + j <= r; ++j)
            for (GenId y : cat.mu(std::span<const GenId>(a).subspan(i, j))) rhs.add(f.apply(splice(a, i, i + j, y), A, B, m, b));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 1; i + j <= s; ++j)
            for (GenId y : cat.mu(std::span<const GenId>(b).subspan(i, j))) rhs.add(f.apply(a, A, B, m, splice(b, i, i + j, y)));
    return {lhs.finish(), rhs.finish()};
}

MorphismPtr differential_of(MorphismPtr f) {
    return make_morphism(f->source(), f->target(), f->degree() + 1, "d(" + f->name() + ")",
                         [f](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                             return differential_sides(*f, a, A, B, m, b).total();
                         });
}

BimodulePtr cone(MorphismPtr f, int check_bound) {
    if (f->degree() != 0) throw NotClosed("cone: " + f->name() + " has degree " + std::to_string(f->degree()));
    if (check_bound >= 0) {
        const auto v = check_closed(*f, check_bound, 1);
        if (!v.empty())
            throw NotClosed("cone: " + f->name() + " is not closed; d(" + f->name() + ") is nonzero on " +
                            describe(*f->source(), v.front().input));
    }
    return std::make_shared<ConeBimodule>(std::move(f));
}

const ConeParts* cone_parts(const Bimodule& m) {
    if (auto c = dynamic_cast<const ConeBimodule*>(&m)) return &c->parts();
    return nullptr;
}

MorphismPtr cone_inclusion(BimodulePtr c) {
    const ConeParts* p = cone_parts(*c);
    if (!p) throw std::invalid_argument("cone_inclusion: not a cone");
    BimodulePtr x = p->source;
    return make_morphism(p->target, c, 0, "incl", [x](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
        return a.empty() && b.empty() ? SparseVec{m + x->space(A, B).size()} : SparseVec{};
    });
}

MorphismPtr cone_projection(BimodulePtr c) {
    const ConeParts* p = cone_parts(*c);
    if (!p) throw std::invalid_argument("cone_projection: not a cone");
    BimodulePtr x = p->source;
    return make_morphism(c, shift(x, 1), 0, "proj", [x](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
        return a.empty() && b.empty() && m < x->space(A, B).size() ? SparseVec{m} : SparseVec{};
    });
}

MorphismPtr sub_inclusion(std::shared_ptr<const SubBimodule> sub) {
    return make_morphism(sub, sub->parent_ptr(), 0, "incl",
                         [sub](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                             return a.empty() && b.empty() ? SparseVec{sub->parent_index(A, B, m)} : SparseVec{};
                         });
}

}  // namespace twistseq::bimod
