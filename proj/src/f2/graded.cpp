#include "twistseq/f2/graded.hpp"

#include <string>
#include <unordered_map>

namespace twistseq::f2 {

namespace {

const std::vector<int>& empty_indices() {
    static const std::vector<int> e;
    return e;
}

std::vector<SparseVec> columns_of(const F2Matrix& m) {
    const F2Matrix t = m.transpose();
    std::vector<SparseVec> cols;
    cols.reserve(static_cast<std::size_t>(t.rows()));
    for (int c = 0; c < t.rows(); ++c) cols.push_back(t.row(c));
    return cols;
}

// Incremental echelon basis keyed by leading (smallest) index.
class EchelonBasis {
public:
    bool insert(SparseVec v) {
        while (!v.empty()) {
            auto it = pivots_.find(v.indices().front());
            if (it == pivots_.end()) {
                const int lead = v.indices().front();
                pivots_.emplace(lead, std::move(v));
                return true;
            }
            v += it->second;
        }
        return false;
    }
    int size() const { return static_cast<int>(pivots_.size()); }

private:
    std::unordered_map<int, SparseVec> pivots_;
};

}  // namespace

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    local_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& b = basis_[i];
        auto& block = by_degree_[b.degree];
        local_[i] = static_cast<int>(block.size());
        block.push_back(static_cast<int>(i));
        if (!by_label_.emplace(b.label, static_cast<int>(i)).second)
            throw std::invalid_argument("GradedSpace: duplicate label '" + b.label + "'");
        if (!b.word.empty()) {
            auto [it, inserted] = by_word_.emplace(b.word, static_cast<int>(i));
            if (!inserted) it->second = -1;
        }
    }
}

std::vector<int> GradedSpace::degrees() const {
    std::vector<int> out;
    for (const auto& [q, v] : by_degree_) out.push_back(q);
    return out;
}

const std::vector<int>& GradedSpace::in_degree(int q) const {
    auto it = by_degree_.find(q);
    return it == by_degree_.end() ? empty_indices() : it->second;
}

std::optional<int> GradedSpace::find(const ChainWord& w) const {
    auto it = by_word_.find(w);
    if (it == by_word_.end() || it->second < 0) return std::nullopt;
    return it->second;
}

std::optional<int> GradedSpace::find(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

GradedSpace GradedSpace::shifted(int k) const {
    std::vector<BasisElement> b = basis_;
    for (auto& e : b) e.degree -= k;
    return GradedSpace(std::move(b));
}

GradedMap::GradedMap(GradedSpace source, GradedSpace target, int degree, std::map<int, F2Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), blocks_(std::move(blocks)) {
    for (const auto& [q, m] : blocks_)
        if (m.cols() != source_.dim(q) || m.rows() != target_.dim(q + degree_))
            throw std::invalid_argument("GradedMap: block at degree " + std::to_string(q) + " has the wrong shape");
}

GradedMap GradedMap::from_images(const GradedSpace& source, const GradedSpace& target, int degree,
                                 const std::function<SparseVec(int)>& image) {
    std::map<int, F2Matrix> blocks;
    for (int q : source.degrees()) {
        std::vector<SparseVec> cols;
        for (int i : source.in_degree(q)) {
            std::vector<int> local;
            for (int j : image(i)) {
                if (target.degree(j) != q + degree)
                    throw std::invalid_argument("GradedMap: image of '" + source[i].label + "' has wrong degree");
                local.push_back(target.local_index(j));
            }
            cols.emplace_back(std::move(local));
        }
        blocks.emplace(q, F2Matrix::from_columns(target.dim(q + degree), cols));
    }
    return GradedMap(source, target, degree, std::move(blocks));
}

F2Matrix GradedMap::block(int q) const {
    auto it = blocks_.find(q);
    if (it != blocks_.end()) return it->second;
    return F2Matrix(target_.dim(q + degree_), source_.dim(q));
}

ChainComplex::ChainComplex(GradedSpace space, std::map<int, F2Matrix> differential)
    : space_(std::move(space)), d_(std::move(differential)) {
    for (const auto& [q, m] : d_)
        if (m.cols() != space_.dim(q) || m.rows() != space_.dim(q + 1))
            throw std::invalid_argument("ChainComplex: differential at degree " + std::to_string(q) +
                                        " has the wrong shape");
    for (const auto& [q, m] : d_) {
        auto next = d_.find(q + 1);
        if (next == d_.end()) continue;
        if (!(next->second * m).is_zero())
            throw NotAComplex(q, "d∘d != 0 starting in degree " + std::to_string(q));
    }
}

ChainComplex ChainComplex::from_images(GradedSpace space, const std::function<SparseVec(int)>& d) {
    GradedMap map = GradedMap::from_images(space, space, 1, d);
    std::map<int, F2Matrix> blocks;
    for (int q : space.degrees()) blocks.emplace(q, map.block(q));
    return ChainComplex(std::move(space), std::move(blocks));
}

F2Matrix ChainComplex::d(int q) const {
    auto it = d_.find(q);
    if (it != d_.end()) return it->second;
    return F2Matrix(space_.dim(q + 1), space_.dim(q));
}

Homology homology(const ChainComplex& c, bool with_representatives) {
    Homology h;
    for (int q : c.degrees()) {
        const F2Matrix out = c.d(q);
        const F2Matrix in = c.d(q - 1);
        if (!with_representatives) {
            const int b = c.dim(q) - rank(out) - rank(in);
            if (b != 0) h.betti[q] = b;
            continue;
        }
        EchelonBasis basis;
        for (auto& col : columns_of(in)) basis.insert(std::move(col));
        std::vector<SparseVec> reps;
        for (auto& z : kernel_basis(out))
            if (basis.insert(z)) reps.push_back(std::move(z));
        if (!reps.empty()) {
            h.betti[q] = static_cast<int>(reps.size());
            h.representatives[q] = std::move(reps);
        }
    }
    return h;
}

int induced_rank(const ChainComplex& src, const ChainComplex& tgt, int q, int deg, const F2Matrix& f_q) {
    const int tq = q + deg;
    std::vector<SparseVec> vecs = columns_of(tgt.d(tq - 1));
    const int boundary_rank = span_rank(tgt.dim(tq), vecs);
    for (const auto& z : kernel_basis(src.d(q))) vecs.push_back(f_q.apply(z));
    return span_rank(tgt.dim(tq), vecs) - boundary_rank;
}

int euler_characteristic(const std::map<int, int>& ranks) {
    int chi = 0;
    for (auto [q, r] : ranks) chi += (q % 2 == 0) ? r : -r;
    return chi;
}

}  // namespace twistseq::f2
