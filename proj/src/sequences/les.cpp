#include "twistseq/sequences/les.hpp"

#include <set>
#include <stdexcept>

#include "twistseq/ainfty/modules.hpp"
#include "twistseq/twist/tower.hpp"

namespace twistseq::sequences {

namespace {

using f2::ChainComplex;
using f2::GradedMap;

int get(const std::map<int, int>& m, int q) {
    auto it = m.find(q);
    return it == m.end() ? 0 : it->second;
}

std::map<int, int> nonzero(const std::map<int, int>& m) {
    std::map<int, int> out;
    for (auto [q, r] : m)
        if (r != 0) out[q] = r;
    return out;
}

ChainComplex complex_at(const bimod::Bimodule& m, ObjId A, ObjId B) {
    return ChainComplex::from_images(m.space(A, B), [&](int e) { return m.act({}, A, B, e, {}); });
}

GradedMap map_at(const bimod::PreMorphism& f, const f2::GradedSpace& src, const f2::GradedSpace& tgt,
                 ObjId A, ObjId B, int degree) {
    return GradedMap::from_images(src, tgt, degree, [&](int e) { return f.apply({}, A, B, e, {}); });
}

}  // namespace

bool LesReport::exact() const {
    if (!composite_failures.empty()) return false;
    for (const auto& p : positions)
        if (!p.exact) return false;
    return true;
}

std::array<int, 3> LesReport::euler() const {
    return {f2::euler_characteristic(ranks[0]), f2::euler_characteristic(ranks[1]), f2::euler_characteristic(ranks[2])};
}

bool LesReport::euler_additive() const {
    const auto e = euler();
    return e[1] == e[0] + e[2];
}

LesReport les_from_maps(std::array<std::string, 3> names, std::array<const ChainComplex*, 3> legs, const GradedMap& a,
                        const GradedMap& b, const GradedMap& c) {
    if (a.degree() != 0 || b.degree() != 0 || c.degree() != 1)
        throw std::invalid_argument("les_from_maps: expected map degrees 0, 0, 1");
    LesReport rep;
    rep.legs = std::move(names);
    std::set<int> degrees;
    for (int i = 0; i < 3; ++i) {
        rep.ranks[i] = f2::homology(*legs[i], false).betti;
        for (int q : legs[i]->degrees()) degrees.insert(q);
    }
    const std::array<const GradedMap*, 3> maps{&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        const int target = (i + 1) % 3;
        for (int q : legs[i]->degrees())
            rep.map_ranks[i][q] = f2::induced_rank(*legs[i], *legs[target], q, maps[i]->degree(), maps[i]->block(q));
    }
    for (int q : degrees) {
        for (int i = 0; i < 3; ++i) {
            LesPosition p;
            p.leg = i;
            p.degree = q;
            p.dim = get(rep.ranks[i], q);
            p.incoming = i == 0 ? get(rep.map_ranks[2], q - 1) : get(rep.map_ranks[i - 1], q);
            p.outgoing = get(rep.map_ranks[i], q);
            p.exact = p.incoming + p.outgoing == p.dim;
            if (p.dim > 0 || p.incoming > 0 || p.outgoing > 0) rep.positions.push_back(p);
        }
        // consecutive composites vanish on homology
        auto check = [&](const char* what, const ChainComplex& src, const ChainComplex& tgt, int deg,
                         const f2::F2Matrix& m) {
            if (f2::induced_rank(src, tgt, q, deg, m) != 0)
                rep.composite_failures.push_back(std::string(what) + " in degree " + std::to_string(q));
        };
        check("leg1 <- leg0", *legs[0], *legs[2], 0, b.block(q) * a.block(q));
        check("leg2 <- leg1", *legs[1], *legs[0], 1, c.block(q) * b.block(q));
        check("leg0 <- leg2", *legs[2], *legs[1], 1, a.block(q + 1) * c.block(q));
    }
    return rep;
}

LesReport les_of_cone(const MorphismPtr& f, std::pair<ObjId, ObjId> at) {
    const auto [A, B] = at;
    const BimodulePtr cone = bimod::cone(f);
    const BimodulePtr x = f->source(), y = f->target();
    const ChainComplex cx = complex_at(*x, A, B), cy = complex_at(*y, A, B), cc = complex_at(*cone, A, B);
    const GradedMap a = map_at(*f, cx.space(), cy.space(), A, B, 0);
    const GradedMap b = map_at(*bimod::cone_inclusion(cone), cy.space(), cc.space(), A, B, 0);
    const GradedMap c = map_at(*bimod::cone_projection(cone), cc.space(), cx.space(), A, B, 1);
    return les_from_maps({"source", "target", "cone"}, {&cx, &cy, &cc}, a, b, c);
}

LesReport les_of_cone(const MorphismPtr& f, const BimodulePtr& into, int cap) {
    const BimodulePtr cone = bimod::cone(f);
    const MorphismPtr incl = bimod::cone_inclusion(cone), proj = bimod::cone_projection(cone);
    const bimod::HomComplex hc(cone, into, cap), hy(f->target(), into, cap), hx(f->source(), into, cap);
    const bimod::HomComplex hx1(proj->target(), into, cap);
    const GradedMap a = bimod::precompose(hc, hy, *incl);
    const GradedMap b = bimod::precompose(hy, hx, *f);
    // Hom(X[1], N) is Hom(X, N) with every degree raised by one
    const GradedMap shifted = bimod::precompose(hx1, hc, *proj);
    std::map<int, f2::F2Matrix> blocks;
    for (int q : hx.space().degrees()) blocks.emplace(q, shifted.block(q + 1));
    const GradedMap c(hx.space(), hc.space(), 1, std::move(blocks));

    LesReport rep = les_from_maps({"hom(cone,N)", "hom(target,N)", "hom(source,N)"},
                                  {&hc.complex(), &hy.complex(), &hx.complex()}, a, b, c);
    rep.cap = cap;
    const std::array<BimodulePtr, 3> sources{cone, f->target(), f->source()};
    for (int i = 0; i < 3; ++i) {
        const auto next = bimod::HomComplex(sources[i], into, cap + 1).ranks();
        std::set<int> degrees;
        for (auto [q, r] : rep.ranks[i]) degrees.insert(q);
        for (auto [q, r] : next) degrees.insert(q);
        for (int q : degrees)
            if (get(rep.ranks[i], q) != get(next, q)) rep.unstable[i].insert(q);
    }
    return rep;
}

DReport build_D(const Category& cat, const std::vector<ObjId>& spheres, int cap, bool with_sequence) {
    twist::Tower tower(cat, spheres);
    DReport rep;
    rep.n = tower.n();
    rep.cap = cap;
    const BimodulePtr e = tower.E(), diag = tower.diagonal();
    rep.d = bimod::cap_stability(e, diag, cap);
    rep.diagonal = bimod::cap_stability(diag, diag, cap);

    const bimod::HomComplex from(diag, diag, cap), to(e, diag, cap);
    const GradedMap pre = bimod::precompose(from, to, *tower.tilde_ev());
    for (int q : from.space().degrees())
        rep.precomposition[q] = f2::induced_rank(from.complex(), to.complex(), q, 0, pre.block(q));
    rep.precomposition = nonzero(rep.precomposition);
    rep.identity_nonzero = from.nonzero_class(from.encode(*bimod::identity_morphism(diag)), 0);
    if (with_sequence) rep.sequence = les_of_cone(tower.tilde_ev(), diag, cap);
    return rep;
}

OpenReport open_sequence(const Category& cat, const std::vector<ObjId>& spheres, ObjId N, ObjId N2) {
    twist::Tower tower(cat, spheres);
    OpenReport rep;
    rep.les = les_of_cone(tower.tilde_ev(), {N, N2});
    rep.cone_ranks = nonzero(rep.les.ranks[2]);
    const auto oracle = ainfty::iterated_twist_oracle(cat, spheres, N2);
    const ChainComplex oc =
        ChainComplex::from_images(oracle->space(N), [&](int e) { return oracle->act({}, N, e); });
    rep.oracle_ranks = nonzero(f2::homology(oc, false).betti);
    rep.oracle_agrees = rep.cone_ranks == rep.oracle_ranks;
    return rep;
}

}  // namespace twistseq::sequences
