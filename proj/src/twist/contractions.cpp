#include "twistseq/twist/contractions.hpp"

#include <span>

#include "twistseq/ainfty/modules.hpp"

namespace twistseq::twist {

namespace {

void tuples_rec(int n, int next, IndexTuple& cur, std::size_t len, std::vector<IndexTuple>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (int i = next; i <= n; ++i) {
        cur.push_back(i);
        tuples_rec(n, i + 1, cur, len, out);
        cur.pop_back();
    }
}

// Words x0..xk along A -> L_{t1} -> ... -> L_{tk} -> B.
void words_rec(const Category& cat, const std::vector<ObjId>& sph, const IndexTuple& t, ObjId B, std::size_t pos,
               ObjId at, std::vector<int>& cur, std::vector<ChainWord>& out) {
    const ObjId next = pos < t.size() ? sph[static_cast<std::size_t>(t[pos] - 1)] : B;
    for (ainfty::GenId g : cat.hom(at, next)) {
        cur.push_back(g);
        if (pos == t.size())
            out.push_back(ChainWord{t, cur});
        else
            words_rec(cat, sph, t, B, pos + 1, next, cur, out);
        cur.pop_back();
    }
}

std::vector<int> cat_vec(std::vector<int> x, const std::vector<int>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

}  // namespace

std::vector<IndexTuple> enumerate_tuples(int n) {
    std::vector<IndexTuple> out;
    IndexTuple cur;
    for (int len = 0; len <= n; ++len) tuples_rec(n, 1, cur, static_cast<std::size_t>(len), out);
    return out;
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::internal: return "internal";
        case Kind::prefix: return "prefix";
        case Kind::middle: return "middle";
        case Kind::suffix: return "suffix";
        case Kind::full: return "full";
    }
    return "?";
}

std::vector<Term> contraction_terms(const Category& cat, const ChainWord& w, const Chain& a, const Chain& b) {
    const auto& x = w.factors;
    const auto& t = w.tuple;
    const std::size_t k = t.size();
    const std::size_t r = a.size(), s = b.size();
    std::vector<Term> out;
    auto sub = [&](std::size_t from, std::size_t to) { return std::vector<int>(x.begin() + from, x.begin() + to); };
    auto tsub = [&](std::size_t from, std::size_t to) { return std::vector<int>(t.begin() + from, t.begin() + to); };

    if (r == 0 && s == 0)
        for (std::size_t p = 0; p <= k; ++p)
            for (int y : cat.mu(std::vector<int>{x[p]}))
                out.push_back({Kind::internal, {t, cat_vec(cat_vec(sub(0, p), {y}), sub(p + 1, k + 1))}});

    if (s == 0)
        for (std::size_t j = 1; j <= k; ++j) {
            if (r + j < 2) continue;
            for (int y : cat.mu(cat_vec(a, sub(0, j))))
                out.push_back({Kind::prefix, {tsub(j - 1, k), cat_vec({y}, sub(j, k + 1))}});
        }

    if (r == 0 && s == 0)
        for (std::size_t p = 1; p < k; ++p)
            for (std::size_t j = 2; p + j <= k; ++j)
                for (int y : cat.mu(sub(p, p + j)))
                    out.push_back({Kind::middle, {cat_vec(tsub(0, p), tsub(p + j - 1, k)),
                                                  cat_vec(cat_vec(sub(0, p), {y}), sub(p + j, k + 1))}});

    if (r == 0)
        for (std::size_t l = 0; l < k; ++l) {
            if (l + s < 1) continue;
            for (int y : cat.mu(cat_vec(sub(k - l, k + 1), b)))
                out.push_back({Kind::suffix, {tsub(0, k - l), cat_vec(sub(0, k - l), {y})}});
        }

    for (int y : cat.mu(cat_vec(cat_vec(a, x), b))) out.push_back({Kind::full, {{}, {y}}});
    return out;
}

int bar_dimension(const Category& cat, const std::vector<ObjId>& spheres, ObjId A, ObjId B, int min_length) {
    int total = 0;
    for (const auto& t : enumerate_tuples(static_cast<int>(spheres.size()))) {
        if (static_cast<int>(t.size()) < min_length) continue;
        int prod = 1;
        ObjId cur = A;
        for (int i : t) {
            const ObjId nxt = spheres[static_cast<std::size_t>(i - 1)];
            prod *= cat.hom_dim(cur, nxt);
            cur = nxt;
        }
        total += prod * cat.hom_dim(cur, B);
    }
    return total;
}

f2::GradedSpace bar_space(const Category& cat, const std::vector<ObjId>& spheres, ObjId A, ObjId B, bool with_empty,
                          int extra_shift) {
    std::vector<f2::BasisElement> basis;
    for (const auto& t : enumerate_tuples(static_cast<int>(spheres.size()))) {
        if (t.empty() && !with_empty) continue;
        std::vector<ChainWord> words;
        std::vector<int> cur;
        words_rec(cat, spheres, t, B, 0, A, cur, words);
        for (auto& w : words) {
            const int deg = cat.degree_of(w.factors) - (static_cast<int>(t.size()) - 1) - extra_shift;
            basis.push_back({ainfty::word_label(cat, w), deg, std::move(w)});
        }
    }
    return f2::GradedSpace(std::move(basis));
}

}  // namespace twistseq::twist
