// Runs the acceptance criteria and prints one PASS/FAIL line for each.
#include <algorithm>
#include <chrono>
#include <iterator>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "twistseq/ainfty/functor.hpp"
#include "twistseq/ainfty/relations.hpp"
#include "twistseq/bimod/hom_complex.hpp"
#include "twistseq/bimod/suites.hpp"
#include "twistseq/cli/commands.hpp"
#include "twistseq/sequences/les.hpp"
#include "twistseq/twist/keylemma.hpp"

using namespace twistseq;
using ainfty::Category;
using ainfty::ObjId;
using bimod::BimodulePtr;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string data(const std::string& name) { return std::string(TWISTSEQ_DATA_DIR) + "/" + name; }

const Category& sphere() {
    static const Category c = ainfty::load_category(data("sphere2.afc"));
    return c;
}
const Category& a2() {
    static const Category c = ainfty::load_category(data("a2chain.afc"));
    return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int total(const std::map<int, int>& m) {
    int t = 0;
    for (auto [q, r] : m) t += r;
    return t;
}

int rank_at(const std::map<int, int>& m, int q) {
    auto it = m.find(q);
    return it == m.end() ? 0 : it->second;
}

void validation(Outcome& o) {
    for (const char* file : {"sphere2.afc", "a2chain.afc"}) {
        const auto t0 = std::chrono::steady_clock::now();
        cli::RunConfig c;
        c.command = "validate";
        c.category_path = data(file);
        c.max_order = 6;
        const auto r = cli::run(c);
        const double s = seconds_since(t0);
        o.detail << " " << file << " status " << r.status << " in " << s << " s;";
        o.require(r.status == 0, std::string(file) + " validates");
        o.require(s < 1.0, std::string(file) + " under 1 s");
    }
}

void relation_suites(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    twist::Tower t(a2(), {0, 1});
    std::vector<std::pair<std::string, BimodulePtr>> mods{{"diagonal", t.diagonal()}, {"L_1", t.L(1)}, {"L_2", t.L(2)},
                                                          {"G_2", t.G(2)},           {"E_2", t.E()},  {"cone", bimod::cone(t.tilde_ev())}};
    for (const auto& [name, m] : mods) {
        const auto v = bimod::check_bimodule(*m, 4);
        o.detail << " " << name << ":" << v.size();
        o.require(v.empty(), name + " relations");
    }
    const double s = seconds_since(t0);
    o.detail << " in " << s << " s";
    o.require(s < 30.0, "under 30 s");
}

std::vector<std::pair<const Category*, std::vector<ObjId>>> small_towers() {
    return {{&sphere(), {0}}, {&sphere(), {0, 0}}, {&a2(), {0}}, {&a2(), {1}}, {&a2(), {0, 1}}, {&a2(), {1, 0}}};
}

std::string tower_name(const Category& c, const std::vector<ObjId>& sp) {
    std::string s = c.name() + "[";
    for (std::size_t i = 0; i < sp.size(); ++i) s += (i ? "," : "") + c.object_name(sp[i]);
    return s + "]";
}

void closedness(Outcome& o) {
    long checked = 0;
    for (const auto& [cat, sp] : small_towers()) {
        twist::Tower t(*cat, sp);
        for (int i = 0; i < t.n(); ++i) {
            o.require(bimod::check_closed(*t.ev(i), 4, 1).empty(), tower_name(*cat, sp) + " ev_" + std::to_string(i));
            ++checked;
        }
        o.require(bimod::check_closed(*t.tilde_ev(), 4, 1).empty(), tower_name(*cat, sp) + " tilde_ev");
        ++checked;
        o.require(twist::check_keylemma(t, 4).pass(), tower_name(*cat, sp) + " case report");
    }
    o.detail << " " << checked << " maps closed to r+s<=4;";

    // every case occurs with a repeated sphere list
    twist::Tower t4(a2(), {0, 1, 0, 1});
    const auto r4 = twist::check_keylemma(t4, 3);
    o.require(r4.pass(), "n=4 case report");
    for (twist::LemmaCase c : {twist::LemmaCase::case0, twist::LemmaCase::case1, twist::LemmaCase::case2, twist::LemmaCase::case3}) {
        const auto& st = r4.cases.at(c);
        o.detail << " " << twist::case_name(c) << " " << st.nontrivial << "/" << st.violations;
        o.require(st.nontrivial > 0 && st.violations == 0, std::string(twist::case_name(c)) + " exercised and clean");
    }
    o.detail << " (n=4 nontrivial/violations);";

    twist::Tower t(a2(), {0, 1});
    const auto bad = twist::check_keylemma(t, 3, {1, 1});
    const auto& w = bad.cases.at(twist::LemmaCase::case0).witnesses;
    o.require(!bad.pass() && !w.empty(), "mutated ev fails with a witness");
    if (!w.empty()) o.detail << " mutated ev witness: " << w.front() << ";";

    cli::RunConfig c;
    c.command = "check";
    c.category_path = std::string(TWISTSEQ_FIXTURE_DIR) + "/a2chain_mutated.afc";
    c.spheres = {"L1", "L2"};
    const auto r = cli::run(c);
    const bool witnessed = r.report["relations"].contains("witnesses");
    o.require(r.status == 1 && witnessed, "mutated fixture rejected by check");
    if (witnessed) o.detail << " fixture witness: " << r.report["relations"]["witnesses"][0]["chain"].get<std::string>();
}

void degrees(Outcome& o) {
    long maps = 0;
    for (const auto& [cat, sp] : small_towers()) {
        twist::Tower t(*cat, sp);
        for (int i = 0; i < t.n(); ++i, ++maps)
            o.require(t.ev(i)->degree() == 0 && bimod::check_degree(*t.ev(i), 4).empty(),
                      tower_name(*cat, sp) + " ev_" + std::to_string(i));
        o.require(t.tilde_ev()->degree() == 0 && bimod::check_degree(*t.tilde_ev(), 4).empty(),
                  tower_name(*cat, sp) + " tilde_ev");
        ++maps;
    }
    o.detail << " " << maps << " maps, every component of degree 0 up to r+s<=4";
}

void rearrangement(Outcome& o) {
    twist::Tower t(a2(), {0, 1});
    t.set_rearrange_bound(4);
    const auto& steps = t.rearrangements();
    o.require(!steps.empty(), "at least one rearrangement");
    for (const auto& s : steps) o.require(!s.difference, s.difference.value_or(""));
    o.detail << " " << steps.size() << " step(s), tables equal up to length 4";
}

void dimensions(Outcome& o) {
    const ObjId l1 = a2().object("L1");
    twist::Tower t(a2(), {0, 1});
    twist::Tower s(sphere(), {0});
    const int g = t.G(2)->space(l1, l1).size(), e = t.E()->space(l1, l1).size(), e1 = s.E()->space(0, 0).size();
    o.detail << " G2(L1,L1)=" << g << " E2(L1,L1)=" << e << " E1(L,L)=" << e1;
    o.require(g == 9 && e == 7 && e1 == 4, "dimensions 9, 7, 4");
}

void triangle(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    twist::Tower t(sphere(), {0});
    const auto r = sequences::les_of_cone(t.ev(0), {0, 0});
    const double s = seconds_since(t0);
    o.detail << " " << total(r.ranks[0]) << " -> " << total(r.ranks[1]) << " -> " << total(r.ranks[2]) << " exact "
             << r.exact() << " in " << s << " s";
    o.require(total(r.ranks[0]) == 4 && total(r.ranks[1]) == 2 && total(r.ranks[2]) == 2, "ranks 4, 2, 2");
    o.require(r.exact(), "exact");
    o.require(s < 1.0, "under 1 s");
}

void oracle(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    int runs = 0;
    for (const std::vector<ObjId>& sp : {std::vector<ObjId>{0}, {1}, {0, 1}, {1, 0}})
        for (ObjId N = 0; N < 2; ++N)
            for (ObjId M = 0; M < 2; ++M) {
                const auto r = sequences::open_sequence(a2(), sp, N, M);
                o.require(r.oracle_agrees, tower_name(a2(), sp) + " at (" + a2().object_name(N) + "," + a2().object_name(M) + ")");
                ++runs;
            }
    const double s = seconds_since(t0);
    o.detail << " " << runs << " evaluations agree in " << s << " s";
    o.require(s < 60.0, "under 60 s");
}

void graph_identity(Outcome& o) {
    for (const Category* c : {&sphere(), &a2()}) {
        const auto g = bimod::graph_bimodule(*c, ainfty::Functor::identity(*c));
        const auto d = bimod::diagonal(*c);
        const auto diff = bimod::compare_bimodules(*g, *d, 4, true);
        o.require(!diff, c->name() + ": " + diff.value_or(""));
    }
    o.detail << " structure constants equal up to length 4 on both categories";
}

void stability(Outcome& o) {
    struct Case {
        const Category* cat;
        std::vector<ObjId> spheres;
    };
    for (const Case& k : {Case{&sphere(), {0}}, Case{&a2(), {0, 1}}}) {
        twist::Tower t(*k.cat, k.spheres);
        const std::vector<std::pair<std::string, BimodulePtr>> sources{{"Hom(D,D)", t.diagonal()}, {"D", t.E()}};
        for (const auto& [name, src] : sources) {
            std::map<int, std::map<int, int>> ranks;
            std::map<int, std::vector<int>> present;
            for (int cap : {6, 7, 8}) {
                const bimod::HomComplex h(src, t.diagonal(), cap);
                ranks[cap] = h.ranks();
                present[cap] = h.space().degrees();
            }
            // degrees carrying coordinates at both cap 6 and cap 8
            std::vector<int> degrees;
            std::set_intersection(present[6].begin(), present[6].end(), present[8].begin(), present[8].end(),
                                  std::back_inserter(degrees));
            int stabilized = 0;
            for (int q : degrees) {
                if (rank_at(ranks[6], q) != rank_at(ranks[7], q)) continue;
                ++stabilized;
                o.require(rank_at(ranks[6], q) == rank_at(ranks[8], q),
                          k.cat->name() + " " + name + " degree " + std::to_string(q));
            }
            o.detail << " " << k.cat->name() << " " << name << ": " << stabilized << "/" << degrees.size()
                     << " degrees stabilized;";
        }
        for (int cap : {6, 8}) {
            const bimod::HomComplex h(t.diagonal(), t.diagonal(), cap);
            o.require(h.nonzero_class(h.encode(*bimod::identity_morphism(t.diagonal())), 0),
                      k.cat->name() + " identity class at cap " + std::to_string(cap));
        }
    }
    o.detail << " identity class nonzero in degree 0";
}

std::string capture(const std::string& cmd) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return "<popen failed>";
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
    return out;
}

void determinism(Outcome& o) {
    const std::string cli = TWISTSEQ_CLI;
    const std::vector<std::string> invocations{
        "validate " + data("sphere2.afc"),
        "validate " + data("a2chain.afc") + " --max-order 6",
        "build " + data("a2chain.afc") + " --spheres L1,L2",
        "check " + data("a2chain.afc") + " --spheres L1,L2 --bound 3",
        "check " + data("sphere2.afc") + " --spheres L --bound 4",
        "les " + data("a2chain.afc") + " --spheres L1,L2 --pair L1,L2",
        "hochschild " + data("sphere2.afc") + " --spheres L --cap 6",
        "hochschild " + data("a2chain.afc") + " --spheres L1,L2 --cap 4",
    };
    for (const auto& args : invocations) {
        const std::string cmd = cli + " " + args + " --format json";
        const std::string first = capture(cmd), second = capture(cmd);
        o.require(!first.empty() && first == second, args);
    }
    o.detail << " " << invocations.size() << " invocations, byte-identical json across two processes";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"A-infinity validation", validation},
        {"bimodule relation suites", relation_suites},
        {"closedness by case", closedness},
        {"degree of ev and tilde_ev", degrees},
        {"cone rearrangement", rearrangement},
        {"dimension formulas", dimensions},
        {"n=1 triangle", triangle},
        {"oracle equivalence", oracle},
        {"graph of the identity", graph_identity},
        {"hom complex stability", stability},
        {"determinism", determinism},
    };
    int failed = 0;
    int index = 1;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double s = seconds_since(t0);
        std::printf("%s %2d %-28s %7.2fs %s\n", o.pass ? "PASS" : "FAIL", index++, name.c_str(), s, o.detail.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
