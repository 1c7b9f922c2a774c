#include "twistseq/bimod/hom_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistseq::bimod {

namespace {

using f2::Accumulator;
using f2::F2Matrix;

int chain_degree(const Category& cat, const Chain& c) { return cat.degree_of(c); }

// Left chains ending at each object, right chains starting at each object, by length.
struct ChainTable {
    std::vector<std::vector<std::vector<Chain>>> left, right;

    ChainTable(const Category& cat, int cap, bool units) {
        const auto n = static_cast<std::size_t>(cat.object_count());
        left.assign(n, {});
        right.assign(n, {});
        for (ObjId o = 0; o < cat.object_count(); ++o)
            for (int len = 0; len <= cap; ++len) {
                left[o].push_back(len == 0 ? std::vector<Chain>{Chain{}} : ainfty::chains_to(cat, o, len, units));
                right[o].push_back(len == 0 ? std::vector<Chain>{Chain{}} : ainfty::chains_from(cat, o, len, units));
            }
    }
};

// Groups rows (global coordinates of `rows_space`) into per-degree blocks
// mapping local coordinates of `cols_space` degree q to `rows_space` degree q + shift.
std::map<int, F2Matrix> blocks_from_rows(const f2::GradedSpace& rows_space, const f2::GradedSpace& cols_space, int shift,
                                         const std::vector<SparseVec>& rows) {
    std::map<int, F2Matrix> out;
    for (int q : cols_space.degrees()) out.emplace(q, F2Matrix(rows_space.dim(q + shift), cols_space.dim(q)));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r].empty()) continue;
        const int q = rows_space.degree(r) - shift;
        std::vector<int> local;
        local.reserve(rows[r].size());
        for (int c : rows[r]) {
            if (cols_space.degree(c) != q)
                throw std::logic_error("hom complex: entry of the wrong degree at coordinate " + std::to_string(c));
            local.push_back(cols_space.local_index(c));
        }
        std::sort(local.begin(), local.end());
        out.at(q).set_row(rows_space.local_index(r), SparseVec(std::move(local)));
    }
    return out;
}

}  // namespace

HomComplex::HomComplex(BimodulePtr source, BimodulePtr target, int cap, bool normalized)
    : source_(std::move(source)), target_(std::move(target)), cap_(cap), normalized_(normalized) {
    if (cap < 0) throw std::invalid_argument("hom_complex: cap must be non-negative");
    if (&source_->category() != &target_->category())
        throw std::invalid_argument("hom_complex: bimodules over different categories");
    build();
}

int HomComplex::intern(const Chain& c) {
    auto [it, inserted] = chain_ids_.emplace(c, static_cast<int>(chains_.size()));
    if (inserted) chains_.push_back(c);
    return it->second;
}

std::optional<int> HomComplex::chain_id(const Chain& c) const {
    auto it = chain_ids_.find(c);
    if (it == chain_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> HomComplex::input_index(const Chain& a, ObjId A, ObjId B, int m, const Chain& b) const {
    const auto ai = chain_id(a), bi = chain_id(b);
    if (!ai || !bi) return std::nullopt;
    auto it = input_ids_.find({*ai, A, B, m, *bi});
    if (it == input_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> HomComplex::find(const Chain& a, ObjId A, ObjId B, int m, const Chain& b, int o) const {
    const auto in = input_index(a, A, B, m, b);
    if (!in) return std::nullopt;
    const auto [p0, qs] = output_pair(source_->category(), a, A, B, b);
    if (o < 0 || o >= target_->space(p0, qs).size()) return std::nullopt;
    return inputs_[*in].offset + o;
}

HomCoordinate HomComplex::coordinate(int i) const {
    auto it = std::upper_bound(inputs_.begin(), inputs_.end(), i,
                               [](int x, const InputRecord& r) { return x < r.offset; });
    const InputRecord& r = *std::prev(it);
    return {chains_[r.a], r.A, r.B, r.m, chains_[r.b], i - r.offset};
}

void HomComplex::build() {
    const Category& cat = source_->category();
    const ChainTable table(cat, cap_, !normalized_);
    const int nobj = cat.object_count();

    // Coordinates, ordered by r + s, then r, then object pair, chains and element.
    std::vector<f2::BasisElement> basis;
    int next = 0;
    for (int t = 0; t <= cap_; ++t)
        for (int r = 0; r <= t; ++r)
            for (ObjId A = 0; A < nobj; ++A)
                for (ObjId B = 0; B < nobj; ++B) {
                    const auto& ms = source_->space(A, B);
                    if (ms.empty()) continue;
                    for (const Chain& a : table.left[A][r])
                        for (int m = 0; m < ms.size(); ++m)
                            for (const Chain& b : table.right[B][t - r]) {
                                const auto [p0, qs] = output_pair(cat, a, A, B, b);
                                const auto& os = target_->space(p0, qs);
                                InputRecord rec{intern(a), A, B, m, intern(b), next};
                                input_ids_.emplace(std::array<int, 5>{rec.a, A, B, m, rec.b},
                                                   static_cast<int>(inputs_.size()));
                                inputs_.push_back(rec);
                                const int base = -chain_degree(cat, a) - ms[m].degree - chain_degree(cat, b) + t;
                                const std::string prefix = "(" + cat.object_name(A) + "," + cat.object_name(B) + ") " +
                                                           cat.chain_string(a) + " | " + ms[m].label + " | " +
                                                           cat.chain_string(b) + " -> ";
                                for (int o = 0; o < os.size(); ++o)
                                    basis.push_back({prefix + os[o].label, os[o].degree + base, {}});
                                next += os.size();
                            }
                }
    const f2::GradedSpace space(std::move(basis));

    std::vector<std::optional<SparseVec>> source_cache(inputs_.size());
    auto source_act = [&](int input) -> const SparseVec& {
        auto& slot = source_cache[static_cast<std::size_t>(input)];
        if (!slot) {
            const InputRecord& r = inputs_[static_cast<std::size_t>(input)];
            slot = source_->act(chains_[r.a], r.A, r.B, r.m, chains_[r.b]);
        }
        return *slot;
    };
    std::map<std::array<int, 5>, SparseVec> target_cache;
    auto target_act = [&](const Chain& a, ObjId P, ObjId Q, int x, const Chain& b) -> const SparseVec& {
        const std::array<int, 5> key{intern(a), P, Q, x, intern(b)};
        auto it = target_cache.find(key);
        if (it == target_cache.end()) it = target_cache.emplace(key, target_->act(a, P, Q, x, b)).first;
        return it->second;
    };
    auto column = [&](const Chain& a, ObjId A, ObjId B, int m, const Chain& b) {
        const auto in = input_index(a, A, B, m, b);
        if (!in) throw std::logic_error("hom complex: missing coordinate for " + cat.chain_string(a) + " | " +
                                        std::to_string(m) + " | " + cat.chain_string(b));
        return inputs_[static_cast<std::size_t>(*in)].offset;
    };

    std::vector<SparseVec> rows(static_cast<std::size_t>(next));
    const auto ninputs = static_cast<int>(inputs_.size());
    for (int idx = 0; idx < ninputs; ++idx) {
        const InputRecord rec = inputs_[static_cast<std::size_t>(idx)];
        const Chain a = chains_[rec.a], b = chains_[rec.b];
        const std::size_t r = a.size(), s = b.size();
        const auto [p0, qs] = output_pair(cat, a, rec.A, rec.B, b);
        const int nout = target_->space(p0, qs).size();
        std::vector<Accumulator> acc(static_cast<std::size_t>(nout));
        auto add_all = [&](int offset) {
            for (int o = 0; o < nout; ++o) acc[o].toggle(offset + o);
        };

        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j <= s; ++j) {
                const Chain inner_a = ainfty::slice(a, i, r), inner_b = ainfty::slice(b, 0, j);
                const Chain outer_a = ainfty::slice(a, 0, i), outer_b = ainfty::slice(b, j, s);
                const auto [pi, qj] = output_pair(cat, inner_a, rec.A, rec.B, inner_b);
                // the target acting on the output of f
                const int inner = column(inner_a, rec.A, rec.B, rec.m, inner_b);
                for (int x = 0; x < target_->space(pi, qj).size(); ++x)
                    for (int o : target_act(outer_a, pi, qj, x, outer_b)) acc[o].toggle(inner + x);
                // f on the output of the source action
                const int src = *input_index(inner_a, rec.A, rec.B, rec.m, inner_b);
                for (int y : source_act(src)) add_all(column(outer_a, pi, qj, y, outer_b));
            }
        // category operations inside the left and right inputs
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 1; i + k <= r; ++k)
                for (GenId y : cat.mu(std::span<const GenId>(a).subspan(i, k))) {
                    if (normalized_ && cat.is_unit(y)) continue;
                    add_all(column(ainfty::splice(a, i, i + k, y), rec.A, rec.B, rec.m, b));
                }
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 1; i + k <= s; ++k)
                for (GenId y : cat.mu(std::span<const GenId>(b).subspan(i, k))) {
                    if (normalized_ && cat.is_unit(y)) continue;
                    add_all(column(a, rec.A, rec.B, rec.m, ainfty::splice(b, i, i + k, y)));
                }
        for (int o = 0; o < nout; ++o) rows[static_cast<std::size_t>(rec.offset + o)] = acc[o].finish();
    }
    auto blocks = blocks_from_rows(space, space, 1, rows);
    complex_ = f2::ChainComplex(space, std::move(blocks));
}

std::map<int, int> HomComplex::ranks() const { return f2::homology(complex_, false).betti; }

SparseVec HomComplex::encode(const PreMorphism& f) const {
    if (f.source() != source_ || f.target() != target_)
        throw std::invalid_argument("encode: morphism has a different source or target");
    std::vector<int> out;
    for (const InputRecord& r : inputs_)
        for (int o : f.apply(chains_[r.a], r.A, r.B, r.m, chains_[r.b])) out.push_back(r.offset + o);
    std::sort(out.begin(), out.end());
    return SparseVec(std::move(out));
}

SparseVec HomComplex::differential(const SparseVec& v) const {
    std::map<int, std::vector<int>> by_degree;
    for (int i : v) by_degree[space().degree(i)].push_back(space().local_index(i));
    std::vector<int> out;
    for (auto& [q, local] : by_degree) {
        const SparseVec image = complex_.d(q).apply(SparseVec(std::move(local)));
        const auto& globals = space().in_degree(q + 1);
        for (int x : image) out.push_back(globals[static_cast<std::size_t>(x)]);
    }
    std::sort(out.begin(), out.end());
    Accumulator acc;
    for (int x : out) acc.toggle(x);
    return acc.finish();
}

bool HomComplex::nonzero_class(const SparseVec& v, int q) const {
    std::vector<int> local;
    for (int i : v) {
        if (space().degree(i) != q) throw std::invalid_argument("nonzero_class: vector is not homogeneous of degree q");
        local.push_back(space().local_index(i));
    }
    std::sort(local.begin(), local.end());
    const SparseVec x(std::move(local));
    if (!complex_.d(q).apply(x).empty()) return false;
    const F2Matrix incoming = complex_.d(q - 1).transpose();
    std::vector<SparseVec> boundaries;
    for (int r = 0; r < incoming.rows(); ++r) boundaries.push_back(incoming.row(r));
    const int before = f2::span_rank(space().dim(q), boundaries);
    boundaries.push_back(x);
    return f2::span_rank(space().dim(q), boundaries) > before;
}

f2::GradedMap precompose(const HomComplex& from, const HomComplex& to, const PreMorphism& g) {
    if (from.target_ != to.target_ || from.cap_ != to.cap_ || from.normalized_ != to.normalized_ ||
        g.source() != to.source_ || g.target() != from.source_)
        throw std::invalid_argument("precompose: complexes do not match the morphism");
    const Category& cat = g.category();
    std::vector<SparseVec> rows(static_cast<std::size_t>(to.size()));
    for (const auto& rec : to.inputs_) {
        const Chain& a = to.chains_[rec.a];
        const Chain& b = to.chains_[rec.b];
        const auto [p0, qs] = output_pair(cat, a, rec.A, rec.B, b);
        const int nout = to.target_->space(p0, qs).size();
        std::vector<Accumulator> acc(static_cast<std::size_t>(nout));
        for (std::size_t i = 0; i <= a.size(); ++i)
            for (std::size_t j = 0; j <= b.size(); ++j) {
                const Chain inner_a = ainfty::slice(a, i, a.size()), inner_b = ainfty::slice(b, 0, j);
                const Chain outer_a = ainfty::slice(a, 0, i), outer_b = ainfty::slice(b, j, b.size());
                const auto [pi, qj] = output_pair(cat, inner_a, rec.A, rec.B, inner_b);
                for (int y : g.apply(inner_a, rec.A, rec.B, rec.m, inner_b)) {
                    const auto col = from.input_index(outer_a, pi, qj, y, outer_b);
                    if (!col) throw std::logic_error("precompose: missing coordinate");
                    const int offset = from.inputs_[static_cast<std::size_t>(*col)].offset;
                    for (int o = 0; o < nout; ++o) acc[o].toggle(offset + o);
                }
            }
        for (int o = 0; o < nout; ++o) rows[static_cast<std::size_t>(rec.offset + o)] = acc[o].finish();
    }
    return f2::GradedMap(from.space(), to.space(), g.degree(),
                         blocks_from_rows(to.space(), from.space(), g.degree(), rows));
}

CapStability cap_stability(const BimodulePtr& source, const BimodulePtr& target, int cap, bool normalized) {
    CapStability out;
    out.cap = cap;
    out.ranks = HomComplex(source, target, cap, normalized).ranks();
    out.next = HomComplex(source, target, cap + 1, normalized).ranks();
    std::set<int> degrees;
    for (auto [q, r] : out.ranks) degrees.insert(q);
    for (auto [q, r] : out.next) degrees.insert(q);
    for (int q : degrees) {
        auto get = [q](const std::map<int, int>& m) {
            auto it = m.find(q);
            return it == m.end() ? 0 : it->second;
        };
        if (get(out.ranks) != get(out.next)) out.unstable.insert(q);
    }
    return out;
}

}  // namespace twistseq::bimod
