#include "doctest.h"
#include "twistseq/ainfty/functor.hpp"
#include "twistseq/ainfty/modules.hpp"
#include "twistseq/ainfty/relations.hpp"

using namespace twistseq;
using namespace twistseq::ainfty;

namespace {

std::string data(const std::string& name) { return std::string(TWISTSEQ_DATA_DIR) + "/" + name; }

f2::ChainComplex evaluation_complex(const OneSidedModule& m, ObjId at) {
    return f2::ChainComplex::from_images(m.space(at), [&](int e) { return m.act({}, at, e); });
}

// Σ over increasing tuples of Π hom dims along A -> L_{i1} -> ... -> L_{ik} -> B.
int tuple_count(const Category& c, const std::vector<ObjId>& sph, ObjId a, ObjId b) {
    const int n = static_cast<int>(sph.size());
    int total = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        int prod = 1;
        ObjId cur = a;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) {
                prod *= c.hom_dim(cur, sph[static_cast<std::size_t>(i)]);
                cur = sph[static_cast<std::size_t>(i)];
            }
        total += prod * c.hom_dim(cur, b);
    }
    return total;
}

}  // namespace

TEST_CASE("yoneda modules") {
    const Category s = load_category(data("sphere2.afc"));
    const auto yl = yoneda_left(s, 0);
    CHECK(yl->space(0).size() == 2);
    for (int e = 0; e < 2; ++e) CHECK(yl->act({}, 0, e).empty());

    const Category a = load_category(data("a2chain.afc"));
    const ObjId l1 = a.object("L1"), l2 = a.object("L2");
    const auto y2 = yoneda_left(a, l2);
    CHECK(y2->space(l1).size() == 1);
    CHECK(y2->space(l1)[0].label == "a");
    // μ^{1|1}(b, a) = μ2(b, a) = p2
    CHECK(y2->act({a.generator("b")}, l1, 0) == SparseVec{a.hom_position(a.generator("p2"))});

    for (ObjId x : {l1, l2}) {
        CHECK(check_module(*yoneda_left(a, x), 4).empty());
        CHECK(check_module(*yoneda_right(a, x), 4).empty());
    }
    CHECK_THROWS(yoneda_left(a, 5));
}

TEST_CASE("abstract twist") {
    const Category s = load_category(data("sphere2.afc"));
    const auto t = abstract_twist(yoneda_left(s, 0), 0, 1);
    CHECK(t->space(0).size() == 6);
    // e⊗e sits in degree 0 + 0 - 1
    CHECK(t->space(0)[2].degree == -1);
    CHECK(t->space(0)[2].label == "[1]e⊗e");
    CHECK(check_module(*t, 4).empty());
    CHECK_THROWS(abstract_twist(yoneda_right(s, 0), 0, 1));

    const Category a = load_category(data("a2chain.afc"));
    for (ObjId x = 0; x < 2; ++x)
        for (ObjId y = 0; y < 2; ++y) CHECK(check_module(*abstract_twist(yoneda_left(a, x), y, 1), 4).empty());
    const auto tt = abstract_twist(abstract_twist(yoneda_left(a, 0), 1, 2), 0, 1);
    CHECK(check_module(*tt, 4).empty());
}

TEST_CASE("module relation suite catches a broken differential") {
    // a twist whose inner module carries a wrong structure map fails the suite
    const Category s = load_category(data("sphere2.afc"));
    class Broken : public OneSidedModule {
    public:
        explicit Broken(const Category& c) : OneSidedModule(c, Side::left) {
            set_spaces({f2::GradedSpace({{"u", 0, {}}, {"v", 1, {}}, {"w", 2, {}}})});
        }
        SparseVec act(const Chain& in, ObjId, int m) const override {
            return in.empty() && m < 2 ? SparseVec{m + 1} : SparseVec{};
        }
    };
    const auto v = check_module(Broken(s), 2);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == "relation");
    CHECK(v.front().chain.empty());
}

TEST_CASE("iterated twist oracle") {
    const Category s = load_category(data("sphere2.afc"));
    const auto o0 = iterated_twist_oracle(s, {}, 0);
    CHECK(o0->space(0).size() == 2);

    const auto o1 = iterated_twist_oracle(s, {0}, 0);
    CHECK(f2::homology(evaluation_complex(*o1, 0)).total() == 2);

    const Category a = load_category(data("a2chain.afc"));
    const ObjId l1 = a.object("L1"), l2 = a.object("L2");
    const std::vector<ObjId> sph{l1, l2};
    const auto o2 = iterated_twist_oracle(a, sph, l1);
    CHECK(o2->space(l1).size() == 9);
    CHECK(check_module(*o2, 3).empty());
    for (ObjId t : {l1, l2}) {
        const auto o = iterated_twist_oracle(a, sph, t);
        for (ObjId at : {l1, l2}) CHECK(o->space(at).size() == tuple_count(a, sph, at, t));
    }

    Category plain("plain");
    plain.add_object("X");
    plain.set_unit(0, plain.add_generator("e", 0, 0, 0));
    CHECK_THROWS(iterated_twist_oracle(plain, {0}, 0));
}

TEST_CASE("functors") {
    const Category a = load_category(data("a2chain.afc"));
    CHECK(check_functor(a, Functor::identity(a), 4).empty());

    auto g = [&](const char* n) { return a.generator(n); };
    const Functor swap = Functor::strict(a, {1, 0},
                                         {{g("e1"), SparseVec{g("e2")}},
                                          {g("e2"), SparseVec{g("e1")}},
                                          {g("p1"), SparseVec{g("p2")}},
                                          {g("p2"), SparseVec{g("p1")}},
                                          {g("a"), SparseVec{g("b")}},
                                          {g("b"), SparseVec{g("a")}}});
    CHECK(check_functor(a, swap, 4).empty());

    // sending p1 to 0 breaks compatibility with μ2(a, b) = p1
    const Functor bad = Functor::strict(a, {1, 0},
                                        {{g("p2"), SparseVec{g("p1")}}, {g("a"), SparseVec{g("b")}},
                                         {g("b"), SparseVec{g("a")}}});
    CHECK_FALSE(check_functor(a, bad, 2).empty());
}
