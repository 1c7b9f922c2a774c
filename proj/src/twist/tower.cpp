#include "twistseq/twist/tower.hpp"

#include <stdexcept>

#include "twistseq/ainfty/modules.hpp"
#include "twistseq/bimod/suites.hpp"

namespace twistseq::twist {

namespace {

using ainfty::GenId;
using bimod::output_pair;
using f2::SparseVec;

int lookup(const f2::GradedSpace& s, const ChainWord& w, const Category& cat) {
    if (auto i = s.find(w)) return *i;
    throw std::logic_error("no basis element with word " + ainfty::word_label(cat, w));
}

class ExplicitE : public bimod::Bimodule {
public:
    ExplicitE(const Category& cat, const std::vector<ObjId>& spheres) : Bimodule(cat) {
        std::vector<f2::GradedSpace> spaces;
        for (ObjId A = 0; A < cat.object_count(); ++A)
            for (ObjId B = 0; B < cat.object_count(); ++B) spaces.push_back(bar_space(cat, spheres, A, B, false, 0));
        set_spaces(std::move(spaces));
    }

    SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override {
        const auto [p0, qs] = output_pair(category(), a, A, B, b);
        const auto& out = space(p0, qs);
        f2::Accumulator acc;
        for (const Term& t : contraction_terms(category(), space(A, B)[m].word, a, b))
            if (t.kind != Kind::full) acc.toggle(lookup(out, t.target, category()));
        return acc.finish();
    }
};

}  // namespace

Rearrangement rearrange_cone(MorphismPtr f, int bound) {
    const bimod::ConeParts* parts = bimod::cone_parts(*f->target());
    if (!parts) throw std::invalid_argument("rearrange_cone: target of f is not a cone");
    const MorphismPtr g = parts->map;
    const BimodulePtr X = f->source(), Y = parts->source, Z = parts->target;
    if (f->degree() != 0 || g->degree() != 0) throw bimod::NotClosed("rearrange_cone: maps must have degree 0");
    if (!bimod::check_closed(*g, bound, 1).empty()) throw bimod::NotClosed("rearrange_cone: g is not closed");

    Rearrangement out;
    out.nested = bimod::cone(f, bound);  // rejects a non-closed f

    out.f_tilde = bimod::make_morphism(bimod::shift(X, -1), Y, 0, "f~",
                                       [f, Y](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                                           const auto [p0, qs] = output_pair(f->category(), a, A, B, b);
                                           const int ny = Y->space(p0, qs).size();
                                           std::vector<int> keep;
                                           for (int o : f->apply(a, A, B, m, b))
                                               if (o < ny) keep.push_back(o);
                                           return SparseVec(std::move(keep));
                                       });
    const BimodulePtr inner = bimod::cone(out.f_tilde, bound);
    out.g_tilde = bimod::make_morphism(inner, Z, 0, "g~",
                                       [f, g, X, Y](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                                           const int nx = X->space(A, B).size();
                                           if (m >= nx) return g->apply(a, A, B, m - nx, b);
                                           const auto [p0, qs] = output_pair(f->category(), a, A, B, b);
                                           const int ny = Y->space(p0, qs).size();
                                           std::vector<int> keep;
                                           for (int o : f->apply(a, A, B, m, b))
                                               if (o >= ny) keep.push_back(o - ny);
                                           return SparseVec(std::move(keep));
                                       });
    out.rearranged = bimod::cone(out.g_tilde, bound);
    out.difference = bimod::compare_bimodules(*out.nested, *out.rearranged, bound, true);
    return out;
}

Tower::Tower(const Category& cat, std::vector<ObjId> spheres, int cone_check_bound)
    : cat_(&cat), spheres_(std::move(spheres)), check_bound_(cone_check_bound) {
    for (ObjId s : spheres_)
        if (s < 0 || s >= cat.object_count() || !cat.sphere_dim(s))
            throw std::invalid_argument("twist objects must be declared spheres");
}

BimodulePtr Tower::diagonal() {
    if (!diag_) diag_ = bimod::diagonal(*cat_);
    return diag_;
}

BimodulePtr Tower::L(int i) {
    if (i < 1 || i > n()) throw std::out_of_range("L_i needs 1 ≤ i ≤ n");
    auto& slot = L_[i];
    if (!slot) {
        const ObjId li = spheres_[static_cast<std::size_t>(i - 1)];
        ainfty::ModulePtr m = ainfty::yoneda_left(*cat_, li);
        for (int j = i - 1; j >= 1; --j) m = ainfty::abstract_twist(m, spheres_[static_cast<std::size_t>(j - 1)], j);
        slot = bimod::product_bimodule(m, ainfty::yoneda_right(*cat_, li, i));
    }
    return slot;
}

MorphismPtr Tower::ev(int i, const EvMutation& mutation) {
    if (i < 0 || i >= n()) throw std::out_of_range("ev_i needs 0 ≤ i < n");
    const bool mutated = mutation.index == i;
    if (!mutated) {
        auto it = ev_.find(i);
        if (it != ev_.end()) return it->second;
    }
    const BimodulePtr src = L(i + 1), tgt = G(i);
    const Category* cat = cat_;
    const int drop = mutated ? mutation.drop_suffix : 0;
    const std::string name = "ev_" + std::to_string(i) + (mutated ? "*" : "");
    MorphismPtr f = bimod::make_morphism(src, tgt, 0, name,
                                         [cat, src, tgt, drop](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                                             const ChainWord& w = src->space(A, B)[m].word;
                                             const auto [p0, qs] = output_pair(*cat, a, A, B, b);
                                             const auto& out = tgt->space(p0, qs);
                                             f2::Accumulator acc;
                                             for (const Term& t : contraction_terms(*cat, w, a, b)) {
                                                 if (t.kind == Kind::suffix) {
                                                     const int l = static_cast<int>(w.tuple.size() - t.target.tuple.size());
                                                     if (l == 0 || l == drop) continue;
                                                 } else if (t.kind != Kind::full) {
                                                     continue;
                                                 }
                                                 acc.toggle(lookup(out, t.target, *cat));
                                             }
                                             return acc.finish();
                                         });
    if (!mutated) ev_[i] = f;
    return f;
}

BimodulePtr Tower::G(int i) {
    if (i < 0 || i > n()) throw std::out_of_range("G_i needs 0 ≤ i ≤ n");
    if (i == 0) return diagonal();
    auto& slot = G_[i];
    if (!slot) slot = bimod::cone(ev(i - 1), check_bound_);
    return slot;
}

void Tower::build_E() {
    if (E_) return;
    if (n() == 0) {
        E_ = bimod::zero_bimodule(*cat_);
        tilde_ev_ = bimod::zero_morphism(E_, diagonal());
        return;
    }
    BimodulePtr w = L(1);
    MorphismPtr h = bimod::make_morphism(w, diagonal(), 0, "h_1",
                                         [f = ev(0)](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                                             return f->apply(a, A, B, m, b);
                                         });
    for (int i = 1; i < n(); ++i) {
        const BimodulePtr c = bimod::cone(h, check_bound_);
        Rearrangement r = rearrange_cone(bimod::retarget(ev(i), c), rearrange_bound_);
        w = r.g_tilde->source();
        h = r.g_tilde;
        steps_.push_back(std::move(r));
    }
    E_ = w;
    tilde_ev_ = bimod::make_morphism(w, diagonal(), 0, "tilde_ev",
                                     [h](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                                         return h->apply(a, A, B, m, b);
                                     });
}

BimodulePtr Tower::E() {
    build_E();
    return E_;
}

MorphismPtr Tower::tilde_ev() {
    build_E();
    return tilde_ev_;
}

const std::vector<Rearrangement>& Tower::rearrangements() {
    build_E();
    return steps_;
}

BimodulePtr Tower::explicit_E() {
    if (!explicit_E_) explicit_E_ = std::make_shared<ExplicitE>(*cat_, spheres_);
    return explicit_E_;
}

MorphismPtr Tower::explicit_tilde_ev() {
    if (!explicit_tilde_ev_) {
        const BimodulePtr e = explicit_E(), d = diagonal();
        const Category* cat = cat_;
        explicit_tilde_ev_ = bimod::make_morphism(e, d, 0, "tilde_ev (explicit)",
                                                  [cat, e, d](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
                                                      const auto [p0, qs] = output_pair(*cat, a, A, B, b);
                                                      f2::Accumulator acc;
                                                      for (const Term& t : contraction_terms(*cat, e->space(A, B)[m].word, a, b))
                                                          if (t.kind == Kind::full)
                                                              acc.toggle(lookup(d->space(p0, qs), t.target, *cat));
                                                      return acc.finish();
                                                  });
    }
    return explicit_tilde_ev_;
}

}  // namespace twistseq::twist
