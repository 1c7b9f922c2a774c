#include <fstream>
#include <sstream>

#include "doctest.h"
#include "twistseq/ainfty/relations.hpp"

using namespace twistseq::ainfty;

namespace {

std::string data(const std::string& name) { return std::string(TWISTSEQ_DATA_DIR) + "/" + name; }
std::string fixture(const std::string& name) { return std::string(TWISTSEQ_FIXTURE_DIR) + "/" + name; }

int total_hom_dim(const Category& c) {
    int n = 0;
    for (ObjId a = 0; a < c.object_count(); ++a)
        for (ObjId b = 0; b < c.object_count(); ++b) n += c.hom_dim(a, b);
    return n;
}

int parse_error_line(const std::string& text) {
    try {
        parse_category(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("bundled categories parse") {
    const Category s = load_category(data("sphere2.afc"));
    CHECK(s.object_count() == 1);
    CHECK(s.hom_dim(0, 0) == 2);
    CHECK(s.sphere_dim(0) == 2);

    const Category a = load_category(data("a2chain.afc"));
    CHECK(a.object_count() == 2);
    CHECK(total_hom_dim(a) == 6);
    CHECK(a.hom_dim(a.object("L1"), a.object("L2")) == 1);
}

TEST_CASE("parse errors carry the offending line") {
    CHECK(parse_error_line("category t\nobject L\nsphere L 2\ngen L L e 0\ngen L L p 2\nunit L e\nmu 2 : p p -> p\n") == 7);
    CHECK(parse_error_line("category t\nobject L\ngen L L e 0\nunit L f\n") == 4);
    CHECK(parse_error_line("category t\nobject L\ngen L X e 0\n") == 3);
    CHECK(parse_error_line("category t\nobject A\nobject B\ngen A A e 0\ngen B B f 0\ngen A B x 1\nunit A e\nunit B f\n"
                           "mu 2 : x x -> x\n") == 9);
    CHECK(parse_error_line("category t\nobject L\ngen L L e 0\n") > 0);  // missing unit
    CHECK(parse_error_line("object L\ngen L L e 0\nunit L e\n") > 0);
    CHECK(parse_error_line("category t\nobject L\ngen L L e 0\ngen L L p 2\nunit L e\nmu 2 : e p -> 0\n") == 6);
    CHECK_THROWS_AS(load_category(fixture("bad_degree.afc")), ParseError);
}

TEST_CASE("stated unit rows must agree with strict unitality") {
    CHECK_NOTHROW(parse_category("category t\nobject L\ngen L L e 0\ngen L L p 2\nunit L e\nmu 2 : e p -> p\n"));
}

TEST_CASE("stored constants obey the degree law and unit normalization") {
    for (const char* f : {"sphere2.afc", "a2chain.afc"}) {
        const Category c = load_category(data(f));
        for (const auto& [in, out] : c.stored_mu()) {
            const int k = static_cast<int>(in.size());
            for (GenId y : out) CHECK(c.gen(y).degree - c.degree_of(in) == 2 - k);
            for (GenId x : in) CHECK_FALSE(c.is_unit(x));
        }
        for (ObjId o = 0; o < c.object_count(); ++o) {
            const GenId e = c.unit(o);
            CHECK(c.mu(std::vector<GenId>{e}).empty());
            for (GenId x : c.hom(o, o)) {
                CHECK(c.mu(std::vector<GenId>{e, x}) == SparseVec{x});
                CHECK(c.mu(std::vector<GenId>{x, e}) == SparseVec{x});
                CHECK(c.mu(std::vector<GenId>{e, e, x}).empty());
            }
        }
    }
}

TEST_CASE("A-infinity relations on bundled categories") {
    const Category s = load_category(data("sphere2.afc"));
    const Category a = load_category(data("a2chain.afc"));
    CHECK(check_ainfty(s, 6).pass());
    CHECK(check_ainfty(a, 6).pass());
    CHECK(default_max_order(a) == 8);

    const GenId a12 = a.generator("a"), b21 = a.generator("b");
    CHECK(a.mu(std::vector<GenId>{a12, b21}) == SparseVec{a.generator("p1")});
    // (a b) a = p1 a = 0 = a p2 = a (b a)
    CHECK(a.mu(std::vector<GenId>{a.generator("p1"), a12}).empty());
    CHECK(a.mu(std::vector<GenId>{a12, a.generator("p2")}).empty());
}

TEST_CASE("injected non-associative product fails at order 3") {
    Category a = load_category(data("a2chain.afc"));
    const GenId p1 = a.generator("p1");
    a.set_mu_unchecked({p1, p1}, SparseVec{p1});
    const AinftyReport r = check_ainfty(a, 6);
    CHECK_FALSE(r.pass());
    CHECK(r.first_failing_order() == 3);
    CHECK_FALSE(r.violations.empty());

    CHECK_THROWS(a.set_mu({a.generator("a"), a.generator("p2")}, SparseVec{a.generator("a")}));
}

TEST_CASE("mutated fixture fails the relations with a witness") {
    const Category m = load_category(fixture("a2chain_mutated.afc"));
    const AinftyReport r = check_ainfty(m, 4);
    REQUIRE_FALSE(r.pass());
    CHECK(r.first_failing_order() == 3);
    bool found = false;
    for (const auto& v : r.violations)
        if (m.chain_string(v.chain) == "p1 a b") found = true;
    CHECK(found);
}
