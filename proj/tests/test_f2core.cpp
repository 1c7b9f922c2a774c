#include <algorithm>
#include <random>

#include "doctest.h"
#include "twistseq/f2/graded.hpp"

using namespace twistseq::f2;

namespace {

// Sphere algebra product on the basis (e⊗e, e⊗p, p⊗e, p⊗p) -> (e, p).
F2Matrix sphere_product() { return F2Matrix::from_positions(2, 4, {{0, 0}, {1, 1}, {1, 2}}); }

// Brute-force rank: count distinct vectors in the row span.
int span_size_rank(const F2Matrix& m) {
    std::vector<std::vector<bool>> span{std::vector<bool>(static_cast<std::size_t>(m.cols()), false)};
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<bool> row(static_cast<std::size_t>(m.cols()), false);
        for (int c : m.row(r)) row[static_cast<std::size_t>(c)] = true;
        const std::size_t n = span.size();
        for (std::size_t i = 0; i < n; ++i) {
            auto v = span[i];
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = v[c] != row[c];
            if (std::find(span.begin(), span.end(), v) == span.end()) span.push_back(v);
        }
    }
    int r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

F2Matrix random_matrix(std::mt19937& rng, int rows, int cols, double density) {
    std::bernoulli_distribution coin(density);
    F2Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng)) m.toggle(r, c);
    return m;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(F2Matrix::identity(2)) == 2);
    CHECK(rank(F2Matrix::from_positions(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})) == 1);
    CHECK(rank(sphere_product()) == 2);
    CHECK(rank(F2Matrix(3, 5)) == 0);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(F2Matrix::identity(2)).empty());
    CHECK(kernel_basis(F2Matrix(2, 2)).size() == 2);
    auto k = kernel_basis(sphere_product());
    REQUIRE(k.size() == 2);
    std::sort(k.begin(), k.end());
    CHECK(k[0] == SparseVec{1, 2});  // e⊗p + p⊗e
    CHECK(k[1] == SparseVec{3});     // p⊗p
}

TEST_CASE("from_positions rejects out of range entries") {
    CHECK_THROWS_AS(F2Matrix::from_positions(2, 2, {{2, 0}}), std::out_of_range);
}

TEST_CASE("rank-nullity and brute-force rank on random matrices") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const int rows = 1 + static_cast<int>(rng() % 9);
        const int cols = 1 + static_cast<int>(rng() % 9);
        const F2Matrix m = random_matrix(rng, rows, cols, 0.3);
        const int r = rank(m);
        CHECK(r == span_size_rank(m));
        CHECK(r == rank(m.transpose()));
        const auto k = kernel_basis(m);
        CHECK(r + static_cast<int>(k.size()) == cols);
        for (const auto& v : k) CHECK(m.apply(v).empty());
    }
}

TEST_CASE("rank of wide blocks beyond one machine word") {
    std::mt19937 rng(11);
    const F2Matrix a = random_matrix(rng, 70, 130, 0.05);
    const F2Matrix b = random_matrix(rng, 130, 90, 0.05);
    const int r = rank(a * b);
    CHECK(r <= std::min(rank(a), rank(b)));
    CHECK(r == rank((a * b).transpose()));
    CHECK(r + static_cast<int>(kernel_basis(a * b).size()) == 90);
}

TEST_CASE("homology examples") {
    std::vector<BasisElement> four;
    for (int i = 0; i < 4; ++i) four.push_back({"g" + std::to_string(i), i % 2, {}});
    const ChainComplex zero = ChainComplex::from_images(GradedSpace(four), [](int) { return SparseVec{}; });
    CHECK(homology(zero).total() == 4);

    const GradedSpace two({{"x", 0, {}}, {"y", 1, {}}});
    const ChainComplex iso = ChainComplex::from_images(two, [](int i) { return i == 0 ? SparseVec{1} : SparseVec{}; });
    CHECK(homology(iso).total() == 0);
}

TEST_CASE("d squared nonzero is rejected with its degree") {
    const GradedSpace three({{"x", 0, {}}, {"y", 1, {}}, {"z", 2, {}}});
    try {
        ChainComplex::from_images(three, [](int i) { return i < 2 ? SparseVec{i + 1} : SparseVec{}; });
        FAIL("expected NotAComplex");
    } catch (const NotAComplex& e) {
        CHECK(e.degree() == 0);
    }
}

TEST_CASE("homology ranks do not depend on basis order") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        const int n0 = 1 + static_cast<int>(rng() % 5), n1 = 1 + static_cast<int>(rng() % 5),
                  n2 = 1 + static_cast<int>(rng() % 5);
        F2Matrix d0 = random_matrix(rng, n1, n0, 0.5);
        // rows of d1 are taken from the left null space of d0
        F2Matrix d1(n2, n1);
        const auto left_null = kernel_basis(d0.transpose());
        for (int r = 0; r < n2 && !left_null.empty(); ++r) d1.set_row(r, left_null[rng() % left_null.size()]);

        std::vector<BasisElement> basis;
        for (int i = 0; i < n0; ++i) basis.push_back({"a" + std::to_string(i), 0, {}});
        for (int i = 0; i < n1; ++i) basis.push_back({"b" + std::to_string(i), 1, {}});
        for (int i = 0; i < n2; ++i) basis.push_back({"c" + std::to_string(i), 2, {}});

        const ChainComplex c(GradedSpace(basis), {{0, d0}, {1, d1}});
        const Homology h = homology(c);

        std::vector<int> p(basis.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<BasisElement> shuffled(basis.size());
        for (std::size_t i = 0; i < p.size(); ++i) shuffled[static_cast<std::size_t>(p[i])] = basis[i];
        const GradedSpace orig(basis);
        const GradedSpace perm(shuffled);
        auto d_global = [&](int i) {
            const int q = orig.degree(i);
            SparseVec out;
            if (q == 0) out = d0.apply(SparseVec{orig.local_index(i)});
            if (q == 1) out = d1.apply(SparseVec{orig.local_index(i)});
            std::vector<int> g;
            for (int l : out) g.push_back(orig.in_degree(q + 1)[static_cast<std::size_t>(l)]);
            return g;
        };
        const ChainComplex c2 = ChainComplex::from_images(perm, [&](int j) {
            const int i = *orig.find(perm[j].label);
            std::vector<int> out;
            for (int g : d_global(i)) out.push_back(p[static_cast<std::size_t>(g)]);
            return SparseVec(out);
        });
        CHECK(homology(c2).betti == h.betti);
        CHECK(homology(c, false).betti == h.betti);
    }
}
