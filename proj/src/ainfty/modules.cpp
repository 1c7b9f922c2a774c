#include "twistseq/ainfty/modules.hpp"

#include <stdexcept>

namespace twistseq::ainfty {

namespace {

SparseVec positions(const Category& cat, const SparseVec& gens) {
    std::vector<int> out;
    out.reserve(gens.size());
    for (GenId g : gens) out.push_back(cat.hom_position(g));
    return SparseVec(std::move(out));
}

class YonedaLeft : public OneSidedModule {
public:
    YonedaLeft(const Category& cat, ObjId x) : OneSidedModule(cat, Side::left), x_(x) {
        std::vector<GradedSpace> spaces;
        for (ObjId a = 0; a < cat.object_count(); ++a) {
            std::vector<f2::BasisElement> basis;
            for (GenId g : cat.hom(a, x)) basis.push_back({cat.gen(g).name, cat.gen(g).degree, ChainWord{{}, {g}}});
            spaces.emplace_back(std::move(basis));
        }
        set_spaces(std::move(spaces));
    }

    SparseVec act(const Chain& inputs, ObjId at, int m) const override {
        Chain c = inputs;
        c.push_back(category().hom(at, x_)[static_cast<std::size_t>(m)]);
        return positions(category(), category().mu(c));
    }

private:
    ObjId x_;
};

class YonedaRight : public OneSidedModule {
public:
    YonedaRight(const Category& cat, ObjId x, std::optional<int> tag) : OneSidedModule(cat, Side::right), x_(x) {
        std::vector<GradedSpace> spaces;
        for (ObjId b = 0; b < cat.object_count(); ++b) {
            std::vector<f2::BasisElement> basis;
            for (GenId g : cat.hom(x, b)) {
                ChainWord w{tag ? std::vector<int>{*tag} : std::vector<int>{}, {g}};
                basis.push_back({word_label(cat, w), cat.gen(g).degree, w});
            }
            spaces.emplace_back(std::move(basis));
        }
        set_spaces(std::move(spaces));
    }

    SparseVec act(const Chain& inputs, ObjId at, int m) const override {
        Chain c{category().hom(x_, at)[static_cast<std::size_t>(m)]};
        c.insert(c.end(), inputs.begin(), inputs.end());
        return positions(category(), category().mu(c));
    }

private:
    ObjId x_;
};

class Twist : public OneSidedModule {
public:
    Twist(ModulePtr inner, ObjId x, int tag)
        : OneSidedModule(inner->category(), Side::left), inner_(std::move(inner)), x_(x) {
        const Category& cat = category();
        const GradedSpace& mx = inner_->space(x);
        std::vector<GradedSpace> spaces;
        for (ObjId a = 0; a < cat.object_count(); ++a) {
            std::vector<f2::BasisElement> basis = inner_->space(a).basis();
            for (GenId b : cat.hom(a, x))
                for (const auto& c : mx.basis()) {
                    f2::BasisElement e;
                    e.degree = cat.gen(b).degree + c.degree - 1;
                    if (!c.word.empty()) {
                        e.word.tuple.push_back(tag);
                        e.word.tuple.insert(e.word.tuple.end(), c.word.tuple.begin(), c.word.tuple.end());
                        e.word.factors.push_back(b);
                        e.word.factors.insert(e.word.factors.end(), c.word.factors.begin(), c.word.factors.end());
                        e.label = word_label(cat, e.word);
                    } else {
                        e.label = "T" + std::to_string(tag) + "(" + cat.gen(b).name + "⊗" + c.label + ")";
                    }
                    basis.push_back(std::move(e));
                }
            spaces.emplace_back(std::move(basis));
        }
        set_spaces(std::move(spaces));
    }

    SparseVec act(const Chain& inputs, ObjId at, int m) const override {
        const Category& cat = category();
        const int inner_dim = inner_->space(at).size();
        if (m < inner_dim) return inner_->act(inputs, at, m);

        const int mx = inner_->space(x_).size();
        const int j = m - inner_dim;
        const int pb = j / mx;
        const int c = j % mx;
        const GenId b = cat.hom(at, x_)[static_cast<std::size_t>(pb)];
        const ObjId a0 = chain_source(cat, inputs, at);
        const int out_inner = inner_->space(a0).size();

        f2::Accumulator acc;
        Chain ab = inputs;
        ab.push_back(b);
        for (GenId y : cat.mu(ab)) acc.toggle(out_inner + cat.hom_position(y) * mx + c);
        acc.add(inner_->act(ab, x_, c));
        if (inputs.empty())
            for (int c2 : inner_->act({}, x_, c)) acc.toggle(inner_dim + pb * mx + c2);
        return acc.finish();
    }

private:
    ModulePtr inner_;
    ObjId x_;
};

}  // namespace

std::string word_label(const Category& cat, const ChainWord& w) {
    std::string s;
    if (!w.tuple.empty()) {
        s += "[";
        for (std::size_t i = 0; i < w.tuple.size(); ++i) s += (i ? "," : "") + std::to_string(w.tuple[i]);
        s += "]";
    }
    for (std::size_t i = 0; i < w.factors.size(); ++i) s += (i ? "⊗" : "") + cat.gen(w.factors[i]).name;
    return s;
}

ModulePtr yoneda_left(const Category& cat, ObjId x) {
    if (x < 0 || x >= cat.object_count()) throw std::invalid_argument("yoneda_left: unknown object");
    return std::make_shared<YonedaLeft>(cat, x);
}

ModulePtr yoneda_right(const Category& cat, ObjId x, std::optional<int> tag) {
    if (x < 0 || x >= cat.object_count()) throw std::invalid_argument("yoneda_right: unknown object");
    return std::make_shared<YonedaRight>(cat, x, tag);
}

ModulePtr abstract_twist(ModulePtr m, ObjId x, int tag) {
    if (m->side() != Side::left) throw std::invalid_argument("abstract_twist needs a left module");
    if (x < 0 || x >= m->category().object_count()) throw std::invalid_argument("abstract_twist: unknown object");
    return std::make_shared<Twist>(std::move(m), x, tag);
}

ModulePtr iterated_twist_oracle(const Category& cat, const std::vector<ObjId>& spheres, ObjId target) {
    for (ObjId s : spheres)
        if (s < 0 || s >= cat.object_count() || !cat.sphere_dim(s))
            throw std::invalid_argument("iterated_twist_oracle: twist object is not a sphere");
    ModulePtr m = yoneda_left(cat, target);
    for (std::size_t i = spheres.size(); i-- > 0;) m = abstract_twist(m, spheres[i], static_cast<int>(i) + 1);
    return m;
}

std::vector<ModuleViolation> check_module(const OneSidedModule& m, int bound) {
    const Category& cat = m.category();
    const bool left = m.side() == Side::left;
    std::vector<ModuleViolation> out;
    for (ObjId at = 0; at < cat.object_count(); ++at)
        for (int len = 0; len <= bound; ++len) {
            const auto chains = left ? chains_to(cat, at, len, true) : chains_from(cat, at, len, true);
            for (const Chain& c : chains)
                for (int e = 0; e < m.space(at).size(); ++e) {
                    const std::size_t n = c.size();
                    // degree law
                    const ObjId o = m.output_object(c, at);
                    const int expected = m.space(at).degree(e) + cat.degree_of(c) + 1 - static_cast<int>(n);
                    const SparseVec once = m.act(c, at, e);
                    for (int y : once)
                        if (m.space(o).degree(y) != expected) {
                            out.push_back({"degree", c, at, e, once});
                            break;
                        }

                    f2::Accumulator acc;
                    for (std::size_t i = 0; i <= n; ++i) {
                        // left: inner takes c[i, n), outer c[0, i); right: inner c[0, i), outer c[i, n)
                        const Chain inner = left ? slice(c, i, n) : slice(c, 0, i);
                        const Chain outer = left ? slice(c, 0, i) : slice(c, i, n);
                        const ObjId mid = m.output_object(inner, at);
                        for (int y : m.act(inner, at, e)) acc.add(m.act(outer, mid, y));
                    }
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 1; i + j <= n; ++j)
                            for (GenId y : cat.mu(std::span<const GenId>(c).subspan(i, j)))
                                acc.add(m.act(splice(c, i, i + j, y), at, e));
                    SparseVec v = acc.finish();
                    if (!v.empty()) out.push_back({"relation", c, at, e, std::move(v)});
                }
        }
    return out;
}

}  // namespace twistseq::ainfty
