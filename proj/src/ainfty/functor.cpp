#include "twistseq/ainfty/functor.hpp"

#include <stdexcept>

namespace twistseq::ainfty {

namespace {

void mu_rec(const Category& cat, const std::vector<SparseVec>& slots, std::size_t pos, Chain& cur,
            f2::Accumulator& acc) {
    if (pos == slots.size()) {
        if (cat.composable(cur)) acc.add(cat.mu(cur));
        return;
    }
    for (int g : slots[pos]) {
        cur.push_back(g);
        mu_rec(cat, slots, pos + 1, cur, acc);
        cur.pop_back();
    }
}

}  // namespace

Functor::Functor(const Category& cat) : cat_(&cat), objects_(static_cast<std::size_t>(cat.object_count())) {
    for (ObjId o = 0; o < cat.object_count(); ++o) objects_[static_cast<std::size_t>(o)] = o;
}

Functor Functor::identity(const Category& cat) {
    Functor f(cat);
    for (GenId g = 0; g < cat.generator_count(); ++g)
        if (!cat.is_unit(g)) f.set_component({g}, SparseVec{g});
    return f;
}

Functor Functor::strict(const Category& cat, std::vector<ObjId> objects, std::map<GenId, SparseVec> generators) {
    if (static_cast<int>(objects.size()) != cat.object_count())
        throw std::invalid_argument("strict functor: object map has the wrong size");
    Functor f(cat);
    f.objects_ = std::move(objects);
    for (ObjId o = 0; o < cat.object_count(); ++o) {
        auto it = generators.find(cat.unit(o));
        if (it != generators.end() && it->second != SparseVec{cat.unit(f.object(o))})
            throw std::invalid_argument("strict functor must send units to units");
    }
    for (auto& [g, img] : generators)
        if (!cat.is_unit(g)) f.set_component({g}, std::move(img));
    return f;
}

void Functor::set_component(Chain inputs, SparseVec output) {
    if (inputs.empty() || !cat_->composable(inputs))
        throw std::invalid_argument("functor component needs a composable chain");
    const ObjId s = object(cat_->gen(inputs.front()).source);
    const ObjId t = object(cat_->gen(inputs.back()).target);
    const int k = static_cast<int>(inputs.size());
    for (GenId y : output) {
        if (cat_->gen(y).source != s || cat_->gen(y).target != t)
            throw std::invalid_argument("functor component output lies in the wrong hom space");
        if (cat_->gen(y).degree != cat_->degree_of(inputs) + 1 - k)
            throw std::invalid_argument("functor component has the wrong degree");
    }
    max_order_ = std::max(max_order_, k);
    comp_[std::move(inputs)] = std::move(output);
}

SparseVec Functor::apply(const Chain& chain) const {
    if (chain.size() == 1 && cat_->is_unit(chain[0])) return SparseVec{cat_->unit(object(cat_->gen(chain[0]).source))};
    auto it = comp_.find(chain);
    return it == comp_.end() ? SparseVec{} : it->second;
}

SparseVec mu_multilinear(const Category& cat, const std::vector<SparseVec>& slots) {
    f2::Accumulator acc;
    Chain cur;
    mu_rec(cat, slots, 0, cur, acc);
    return acc.finish();
}

std::vector<FunctorViolation> check_functor(const Category& cat, const Functor& phi, int bound) {
    std::vector<FunctorViolation> out;
    for (int k = 1; k <= bound; ++k)
        for (const Chain& c : all_chains(cat, k, true)) {
            f2::Accumulator acc;
            // φ applied after inserting μ_j into the chain
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = 1; i + j <= c.size(); ++j)
                    for (GenId y : cat.mu(std::span<const GenId>(c).subspan(i, j))) acc.add(phi.apply(splice(c, i, i + j, y)));
            // μ applied to φ of consecutive blocks
            std::vector<std::size_t> ends;
            for_each_composition(c.size(), ends, [&](const std::vector<std::size_t>& e) {
                std::vector<SparseVec> slots;
                std::size_t from = 0;
                for (std::size_t to : e) {
                    slots.push_back(phi.apply(slice(c, from, to)));
                    from = to;
                }
                acc.add(mu_multilinear(cat, slots));
            });
            SparseVec v = acc.finish();
            if (!v.empty()) out.push_back({c, std::move(v)});
        }
    return out;
}

}  // namespace twistseq::ainfty
