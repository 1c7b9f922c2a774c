#include "twistseq/bimod/bimodule.hpp"

#include <stdexcept>

namespace twistseq::bimod {

namespace {

SparseVec positions(const Category& cat, const SparseVec& gens) {
    std::vector<int> out;
    out.reserve(gens.size());
    for (GenId g : gens) out.push_back(cat.hom_position(g));
    return SparseVec(std::move(out));
}

std::vector<GradedSpace> hom_spaces(const Category& cat, const std::vector<ObjId>& right_map) {
    std::vector<GradedSpace> spaces;
    for (ObjId a = 0; a < cat.object_count(); ++a)
        for (ObjId b = 0; b < cat.object_count(); ++b) {
            std::vector<f2::BasisElement> basis;
            for (GenId g : cat.hom(a, right_map[static_cast<std::size_t>(b)]))
                basis.push_back({cat.gen(g).name, cat.gen(g).degree, f2::ChainWord{{}, {g}}});
            spaces.emplace_back(std::move(basis));
        }
    return spaces;
}

class Diagonal : public Bimodule {
public:
    explicit Diagonal(const Category& cat) : Bimodule(cat) {
        std::vector<ObjId> id;
        for (ObjId o = 0; o < cat.object_count(); ++o) id.push_back(o);
        set_spaces(hom_spaces(cat, id));
    }

    SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override {
        Chain c = a;
        c.push_back(category().hom(A, B)[static_cast<std::size_t>(m)]);
        c.insert(c.end(), b.begin(), b.end());
        return positions(category(), category().mu(c));
    }
};

class Product : public Bimodule {
public:
    Product(ainfty::ModulePtr left, ainfty::ModulePtr right)
        : Bimodule(left->category()), left_(std::move(left)), right_(std::move(right)) {
        const Category& cat = category();
        std::vector<GradedSpace> spaces;
        for (ObjId a = 0; a < cat.object_count(); ++a)
            for (ObjId b = 0; b < cat.object_count(); ++b) {
                std::vector<f2::BasisElement> basis;
                for (const auto& x : left_->space(a).basis())
                    for (const auto& y : right_->space(b).basis()) {
                        f2::BasisElement e;
                        e.degree = x.degree + y.degree;
                        if (!x.word.empty() && !y.word.empty()) {
                            e.word = x.word;
                            e.word.tuple.insert(e.word.tuple.end(), y.word.tuple.begin(), y.word.tuple.end());
                            e.word.factors.insert(e.word.factors.end(), y.word.factors.begin(), y.word.factors.end());
                            e.label = ainfty::word_label(cat, e.word);
                        } else {
                            e.label = x.label + "⊗" + y.label;
                        }
                        basis.push_back(std::move(e));
                    }
                spaces.emplace_back(std::move(basis));
            }
        set_spaces(std::move(spaces));
    }

    SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override {
        if (!a.empty() && !b.empty()) return {};
        const int nb = right_->space(B).size();
        const int x = m / nb;
        const int y = m % nb;
        f2::Accumulator acc;
        if (b.empty())
            for (int x2 : left_->act(a, A, x)) acc.toggle(x2 * nb + y);
        if (a.empty()) {
            const ObjId qs = ainfty::chain_target(category(), b, B);
            const int nq = right_->space(qs).size();
            for (int y2 : right_->act(b, B, y)) acc.toggle(x * nq + y2);
        }
        return acc.finish();
    }

private:
    ainfty::ModulePtr left_;
    ainfty::ModulePtr right_;
};

class Graph : public Bimodule {
public:
    Graph(const Category& cat, ainfty::Functor phi) : Bimodule(cat), phi_(std::move(phi)) {
        std::vector<ObjId> map;
        for (ObjId o = 0; o < cat.object_count(); ++o) map.push_back(phi_.object(o));
        set_spaces(hom_spaces(cat, map));
    }

    SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override {
        const Category& cat = category();
        std::vector<SparseVec> slots;
        for (GenId x : a) slots.push_back(SparseVec{x});
        slots.push_back(SparseVec{cat.hom(A, phi_.object(B))[static_cast<std::size_t>(m)]});
        f2::Accumulator acc;
        if (b.empty()) {
            acc.add(ainfty::mu_multilinear(cat, slots));
        } else {
            std::vector<std::size_t> ends;
            ainfty::for_each_composition(b.size(), ends, [&](const std::vector<std::size_t>& e) {
                std::vector<SparseVec> s = slots;
                std::size_t from = 0;
                for (std::size_t to : e) {
                    s.push_back(phi_.apply(ainfty::slice(b, from, to)));
                    from = to;
                }
                acc.add(ainfty::mu_multilinear(cat, s));
            });
        }
        return positions(cat, acc.finish());
    }

private:
    ainfty::Functor phi_;
};

class Shifted : public Bimodule {
public:
    Shifted(BimodulePtr inner, int k) : Bimodule(inner->category()), inner_(std::move(inner)) {
        std::vector<GradedSpace> spaces;
        for (ObjId a = 0; a < object_count(); ++a)
            for (ObjId b = 0; b < object_count(); ++b) spaces.push_back(inner_->space(a, b).shifted(k));
        set_spaces(std::move(spaces));
    }

    SparseVec act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const override {
        return inner_->act(a, A, B, m, b);
    }

private:
    BimodulePtr inner_;
};

class Zero : public Bimodule {
public:
    explicit Zero(const Category& cat) : Bimodule(cat) {
        set_spaces(std::vector<GradedSpace>(static_cast<std::size_t>(cat.object_count() * cat.object_count())));
    }
    SparseVec act(const Chain&, ObjId, ObjId, int, const Chain&) const override { return {}; }
};

}  // namespace

int Bimodule::total_dim() const {
    int n = 0;
    for (const auto& s : spaces_) n += s.size();
    return n;
}

void Bimodule::set_spaces(std::vector<GradedSpace> spaces) {
    if (static_cast<int>(spaces.size()) != object_count() * object_count())
        throw std::invalid_argument("bimodule needs one space per object pair");
    spaces_ = std::move(spaces);
}

BimodulePtr diagonal(const Category& cat) { return std::make_shared<Diagonal>(cat); }

BimodulePtr product_bimodule(ainfty::ModulePtr left, ainfty::ModulePtr right) {
    if (left->side() != ainfty::Side::left || right->side() != ainfty::Side::right)
        throw std::invalid_argument("product_bimodule needs a left module and a right module");
    if (&left->category() != &right->category())
        throw std::invalid_argument("product_bimodule: modules over different categories");
    return std::make_shared<Product>(std::move(left), std::move(right));
}

BimodulePtr graph_bimodule(const Category& cat, const ainfty::Functor& phi) {
    return std::make_shared<Graph>(cat, phi);
}

BimodulePtr shift(BimodulePtr m, int k) { return std::make_shared<Shifted>(std::move(m), k); }

BimodulePtr zero_bimodule(const Category& cat) { return std::make_shared<Zero>(cat); }

SubBimodule::SubBimodule(BimodulePtr parent, std::vector<std::vector<int>> selected)
    : Bimodule(parent->category()), parent_(std::move(parent)), selected_(std::move(selected)) {
    const int n = object_count();
    if (static_cast<int>(selected_.size()) != n * n)
        throw std::invalid_argument("SubBimodule: need one selection per object pair");
    std::vector<GradedSpace> spaces;
    reverse_.resize(selected_.size());
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) {
            const auto p = static_cast<std::size_t>(a * n + b);
            const GradedSpace& ps = parent_->space(a, b);
            reverse_[p].assign(static_cast<std::size_t>(ps.size()), -1);
            std::vector<f2::BasisElement> basis;
            for (int i : selected_[p]) {
                if (i < 0 || i >= ps.size()) throw std::invalid_argument("SubBimodule: index out of range");
                reverse_[p][static_cast<std::size_t>(i)] = static_cast<int>(basis.size());
                basis.push_back(ps[i]);
            }
            spaces.emplace_back(std::move(basis));
        }
    set_spaces(std::move(spaces));
}

int SubBimodule::parent_index(ObjId A, ObjId B, int i) const {
    return selected_[static_cast<std::size_t>(A * object_count() + B)][static_cast<std::size_t>(i)];
}

int SubBimodule::sub_index(ObjId A, ObjId B, int parent_i) const {
    return reverse_[static_cast<std::size_t>(A * object_count() + B)][static_cast<std::size_t>(parent_i)];
}

SparseVec SubBimodule::act(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const {
    const auto [p0, qs] = output_pair(category(), a, A, B, b);
    std::vector<int> out;
    for (int y : parent_->act(a, A, B, parent_index(A, B, m), b)) {
        const int s = sub_index(p0, qs, y);
        if (s < 0) throw std::logic_error("SubBimodule: structure map leaves the selected span");
        out.push_back(s);
    }
    return SparseVec(std::move(out));
}

}  // namespace twistseq::bimod
