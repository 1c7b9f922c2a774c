#include <random>

#include "doctest.h"
#include "twistseq/bimod/suites.hpp"

using namespace twistseq;
using namespace twistseq::bimod;

namespace {

std::string data(const std::string& name) { return std::string(TWISTSEQ_DATA_DIR) + "/" + name; }

f2::ChainComplex complex_at(const Bimodule& m, ObjId A, ObjId B) {
    return f2::ChainComplex::from_images(m.space(A, B), [&](int e) { return m.act({}, A, B, e, {}); });
}

ainfty::Functor swap_functor(const Category& a) {
    auto g = [&](const char* n) { return a.generator(n); };
    return ainfty::Functor::strict(a, {1, 0},
                                   {{g("e1"), SparseVec{g("e2")}},
                                    {g("e2"), SparseVec{g("e1")}},
                                    {g("p1"), SparseVec{g("p2")}},
                                    {g("p2"), SparseVec{g("p1")}},
                                    {g("a"), SparseVec{g("b")}},
                                    {g("b"), SparseVec{g("a")}}});
}

}  // namespace

TEST_CASE("diagonal bimodule") {
    const Category s = ainfty::load_category(data("sphere2.afc"));
    const auto d = diagonal(s);
    CHECK(d->space(0, 0).size() == 2);
    for (int e = 0; e < 2; ++e) CHECK(d->act({}, 0, 0, e, {}).empty());

    const Category a = ainfty::load_category(data("a2chain.afc"));
    const auto da = diagonal(a);
    // μ^{1|1|0}(x | m) = μ2(x, m) on every composable pair
    for (GenId x = 0; x < a.generator_count(); ++x)
        for (GenId y = 0; y < a.generator_count(); ++y) {
            if (a.gen(x).target != a.gen(y).source) continue;
            SparseVec expect;
            for (GenId z : a.mu(std::vector<GenId>{x, y})) expect.toggle(a.hom_position(z));
            CHECK(da->act({x}, a.gen(y).source, a.gen(y).target, a.hom_position(y), {}) == expect);
        }
    CHECK(check_bimodule(*da, 4).empty());
}

TEST_CASE("product bimodule") {
    const Category s = ainfty::load_category(data("sphere2.afc"));
    const auto p = product_bimodule(ainfty::yoneda_left(s, 0), ainfty::yoneda_right(s, 0));
    CHECK(p->space(0, 0).size() == 4);
    const GenId e = s.generator("e"), pp = s.generator("p");
    for (int m = 0; m < 4; ++m) {
        CHECK(p->act({}, 0, 0, m, {}).empty());
        for (GenId x : {e, pp})
            for (GenId y : {e, pp}) CHECK(p->act({x}, 0, 0, m, {y}).empty());
    }
    CHECK(check_bimodule(*p, 4).empty());
    CHECK_THROWS(product_bimodule(ainfty::yoneda_right(s, 0), ainfty::yoneda_right(s, 0)));

    const Category a = ainfty::load_category(data("a2chain.afc"));
    for (ObjId x = 0; x < 2; ++x)
        for (ObjId y = 0; y < 2; ++y)
            CHECK(check_bimodule(*product_bimodule(ainfty::yoneda_left(a, x), ainfty::yoneda_right(a, y)), 4).empty());
}

TEST_CASE("graph bimodule") {
    const Category a = ainfty::load_category(data("a2chain.afc"));
    const auto g = graph_bimodule(a, ainfty::Functor::identity(a));
    CHECK_FALSE(compare_bimodules(*g, *diagonal(a), 5, true).has_value());

    const auto gs = graph_bimodule(a, swap_functor(a));
    // G(A, B) = hom(A, φ(B))
    CHECK(gs->space(0, 0).size() == 1);
    CHECK(gs->space(0, 0)[0].label == "a");
    CHECK(gs->space(0, 1).size() == 2);
    CHECK(check_bimodule(*gs, 4).empty());
}

TEST_CASE("shift") {
    const Category a = ainfty::load_category(data("a2chain.afc"));
    const auto d = diagonal(a);
    const auto d1 = shift(d, 1);
    CHECK(d1->space(0, 0)[1].degree == d->space(0, 0)[1].degree - 1);
    CHECK_FALSE(compare_bimodules(*shift(d1, -1), *d, 3, true).has_value());
    CHECK(compare_bimodules(*d1, *d, 3, true).has_value());
    CHECK(check_bimodule(*d1, 3).empty());
    const auto h = f2::homology(complex_at(*d, 0, 0));
    const auto h1 = f2::homology(complex_at(*d1, 0, 0));
    for (auto [q, r] : h.betti) CHECK(h1.at(q - 1) == r);
}

TEST_CASE("cones") {
    const Category a = ainfty::load_category(data("a2chain.afc"));
    const auto d = diagonal(a);
    const auto c0 = cone(zero_morphism(d, d));
    CHECK(c0->space(0, 0).size() == 4);
    CHECK(check_bimodule(*c0, 3).empty());
    // direct sum: no cross terms
    for (int m = 0; m < 4; ++m) {
        const SparseVec v = c0->act({a.generator("b")}, 0, 0, m, {});
        for (int y : v) CHECK((y < 1) == (m < 2));
    }

    const Category s = ainfty::load_category(data("sphere2.afc"));
    const auto ds = diagonal(s);
    const auto ci = cone(identity_morphism(ds));
    CHECK(f2::homology(complex_at(*ci, 0, 0)).total() == 0);
    CHECK(check_bimodule(*ci, 4).empty());
    CHECK(ci->space(0, 0)[0].label == "s.e");

    CHECK_THROWS_AS(cone(zero_morphism(ds, ds, 1)), NotClosed);
}

TEST_CASE("hom-complex differential of simple pre-morphisms") {
    const Category a = ainfty::load_category(data("a2chain.afc"));
    const auto d = diagonal(a);
    CHECK(check_closed(*identity_morphism(d), 4).empty());
    CHECK(check_closed(*zero_morphism(d, d), 2).empty());

    // a degree-0 family that is not closed: the identity on (L1, L1) only
    const auto half = make_morphism(d, d, 0, "half", [](const Chain& x, ObjId A, ObjId B, int m, const Chain& y) {
        return x.empty() && y.empty() && A == 0 && B == 0 ? SparseVec{m} : SparseVec{};
    });
    const auto v = check_closed(*half, 1);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().input.length() == 1);

    // d∘d = 0 componentwise
    std::mt19937 rng(5);
    for (int t = 0; t < 5; ++t) {
        const unsigned seed = static_cast<unsigned>(rng());
        const auto rnd = make_morphism(d, d, 0, "rnd",
                                       [&a, seed](const Chain& x, ObjId A, ObjId B, int m, const Chain& y) {
                                           const auto [p0, qs] = output_pair(a, x, A, B, y);
                                           std::seed_seq ss{seed, static_cast<unsigned>(x.size() * 7 + y.size()),
                                                            static_cast<unsigned>(A * 3 + B), static_cast<unsigned>(m)};
                                           std::mt19937 r(ss);
                                           SparseVec out;
                                           const int expected = a.gen(a.hom(A, B)[static_cast<std::size_t>(m)]).degree +
                                                                a.degree_of(x) + a.degree_of(y) -
                                                                static_cast<int>(x.size() + y.size());
                                           for (GenId g : a.hom(p0, qs))
                                               if (a.gen(g).degree == expected && (r() & 1)) out.toggle(a.hom_position(g));
                                           return out;
                                       });
        CHECK(check_degree(*rnd, 3).empty());
        CHECK(check_closed(*differential_of(rnd), 3).empty());
    }
}
