#include "twistseq/cli/commands.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "twistseq/ainfty/relations.hpp"
#include "twistseq/bimod/suites.hpp"
#include "twistseq/sequences/les.hpp"
#include "twistseq/twist/keylemma.hpp"

namespace twistseq::cli {

namespace {

using json = nlohmann::ordered_json;
using ainfty::Category;
using ainfty::ObjId;

constexpr std::size_t max_listed = 5;

// Problems with the invocation or the input file; reported with status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json ranks_json(const std::map<int, int>& m) {
    json out = json::object();
    for (auto [q, r] : m)
        if (r != 0) out[std::to_string(q)] = r;
    return out;
}

json degree_table(const f2::GradedSpace& s) {
    json out = json::object();
    for (int q : s.degrees()) out[std::to_string(q)] = s.dim(q);
    return out;
}

json set_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

json violations_json(const bimod::Bimodule& m, const std::vector<bimod::Violation>& v) {
    json out = {{"violations", v.size()}};
    if (!v.empty()) out["witness"] = v.front().kind + " at " + bimod::describe(m, v.front().input);
    return out;
}

json les_json(const sequences::LesReport& r) {
    json legs = json::array();
    const auto chi = r.euler();
    for (int i = 0; i < 3; ++i) {
        json leg = {{"name", r.legs[i]}, {"ranks", ranks_json(r.ranks[i])}, {"map_ranks", ranks_json(r.map_ranks[i])},
                    {"euler", chi[i]}};
        if (r.cap >= 0) leg["unstable"] = set_json(r.unstable[i]);
        legs.push_back(std::move(leg));
    }
    json positions = json::array();
    for (const auto& p : r.positions)
        positions.push_back({{"leg", p.leg},
                             {"degree", p.degree},
                             {"dim", p.dim},
                             {"in", p.incoming},
                             {"out", p.outgoing},
                             {"exact", p.exact}});
    json out = {{"legs", legs}, {"positions", positions}, {"exact", r.exact()}, {"euler_additive", r.euler_additive()}};
    if (r.cap >= 0) out["cap"] = r.cap;
    if (!r.composite_failures.empty()) out["composite_failures"] = r.composite_failures;
    return out;
}

struct Prepared {
    Category cat;
    std::vector<ObjId> spheres;
    json report;
};

ObjId resolve(const Category& cat, const std::string& name) {
    const auto o = cat.find_object(name);
    if (!o) throw InputError("unknown object '" + name + "'");
    return *o;
}

Prepared prepare(const RunConfig& c) {
    static const std::vector<std::string> commands{"validate", "build", "check", "les", "hochschild"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
        throw InputError("unknown command '" + c.command + "'");
    if (c.bound < 1) throw InputError("--bound must be at least 1");
    if (c.cap < 0) throw InputError("--cap must be non-negative");
    if (c.max_order && *c.max_order < 1) throw InputError("--max-order must be at least 1");
    const bool twist = c.command != "validate";
    if (twist && c.spheres.empty()) throw InputError(c.command + " needs --spheres");
    if (c.command == "les" && !c.pair) throw InputError("les needs --pair");

    Prepared p;
    try {
        p.cat = ainfty::load_category(c.category_path);
    } catch (const ainfty::ParseError& e) {
        throw InputError(std::string("parse error: ") + e.what());
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    for (const auto& s : c.spheres) {
        const ObjId o = resolve(p.cat, s);
        if (!p.cat.sphere_dim(o)) throw InputError("object '" + s + "' is not declared as a sphere");
        p.spheres.push_back(o);
    }
    if (c.pair) resolve(p.cat, c.pair->first), resolve(p.cat, c.pair->second);
    if (c.at) resolve(p.cat, c.at->first), resolve(p.cat, c.at->second);

    p.report = {{"schema", schema_version}, {"command", c.command}, {"category", p.cat.name()}};
    if (twist) {
        p.report["spheres"] = c.spheres;
        p.report["n"] = c.spheres.size();
    }
    return p;
}

int finish(json& report, bool ok) {
    report["status"] = ok ? "pass" : "fail";
    return ok ? pass : failed;
}

json ainfty_json(const Category& cat, const ainfty::AinftyReport& r) {
    json orders = json::array();
    for (auto [k, n] : r.chains_checked) {
        int bad = 0;
        for (const auto& v : r.violations) bad += v.order == k;
        orders.push_back({{"order", k}, {"chains", n}, {"violations", bad}});
    }
    json out = {{"max_order", r.max_order}, {"orders", orders}, {"pass", r.pass()}};
    if (!r.pass()) {
        out["first_failing_order"] = r.first_failing_order();
        json list = json::array();
        for (std::size_t i = 0; i < r.violations.size() && i < max_listed; ++i)
            list.push_back({{"order", r.violations[i].order},
                            {"chain", cat.chain_string(r.violations[i].chain)},
                            {"value", cat.vec_string(r.violations[i].value)}});
        out["witnesses"] = list;
    }
    return out;
}

int cmd_validate(const RunConfig& c, Prepared& p) {
    const int order = c.max_order.value_or(ainfty::default_max_order(p.cat));
    const auto r = ainfty::check_ainfty(p.cat, order);
    p.report["objects"] = p.cat.object_count();
    p.report["generators"] = p.cat.generator_count();
    p.report["relations"] = ainfty_json(p.cat, r);
    return finish(p.report, r.pass());
}

std::vector<std::pair<ObjId, ObjId>> pairs_of(const Category& cat, const std::optional<std::pair<std::string, std::string>>& at) {
    if (at) return {{cat.object(at->first), cat.object(at->second)}};
    std::vector<std::pair<ObjId, ObjId>> out;
    for (ObjId A = 0; A < cat.object_count(); ++A)
        for (ObjId B = 0; B < cat.object_count(); ++B) out.emplace_back(A, B);
    return out;
}

int cmd_build(const RunConfig& c, Prepared& p) {
    twist::Tower t(p.cat, p.spheres);
    const auto cone = bimod::cone(t.tilde_ev());
    json pairs = json::array();
    for (auto [A, B] : pairs_of(p.cat, c.at)) {
        json L = json::array(), G = json::array();
        for (int i = 1; i <= t.n(); ++i) L.push_back(t.L(i)->space(A, B).size());
        for (int i = 0; i <= t.n(); ++i) G.push_back(t.G(i)->space(A, B).size());
        pairs.push_back({{"pair", {p.cat.object_name(A), p.cat.object_name(B)}},
                         {"dims",
                          {{"diagonal", t.diagonal()->space(A, B).size()},
                           {"L", L},
                           {"G", G},
                           {"E", t.E()->space(A, B).size()},
                           {"cone_tilde_ev", cone->space(A, B).size()}}},
                         {"degrees", {{"E", degree_table(t.E()->space(A, B))}, {"G", degree_table(t.G(t.n())->space(A, B))}}}});
    }
    p.report["pairs"] = pairs;
    json census = json::object();
    for (auto [k, v] : twist::census(t, c.bound)) census[twist::kind_name(k)] = v;
    p.report["census"] = {{"bound", c.bound}, {"terms", census}};
    return finish(p.report, true);
}

int cmd_check(const RunConfig& c, Prepared& p) {
    const int order = c.max_order.value_or(ainfty::default_max_order(p.cat));
    const auto rel = ainfty::check_ainfty(p.cat, order);
    p.report["bound"] = c.bound;
    p.report["relations"] = ainfty_json(p.cat, rel);
    if (!rel.pass()) {
        p.report["skipped"] = "the category fails its A-infinity relations";
        return finish(p.report, false);
    }
    bool ok = true;
    twist::Tower t(p.cat, p.spheres);
    const int bound = c.bound;

    json suites = json::array();
    auto suite = [&](const std::string& name, const bimod::Bimodule& m) {
        const auto v = bimod::check_bimodule(m, bound);
        ok = ok && v.empty();
        json entry = {{"name", name}};
        entry.update(violations_json(m, v));
        suites.push_back(entry);
    };
    suite("diagonal", *t.diagonal());
    for (int i = 1; i <= t.n(); ++i) suite("L_" + std::to_string(i), *t.L(i));
    for (int i = 1; i <= t.n(); ++i) suite("G_" + std::to_string(i), *t.G(i));
    suite("E", *t.E());
    const auto cone = bimod::cone(t.tilde_ev());
    suite("cone(tilde_ev)", *cone);
    p.report["relation_suites"] = suites;

    json closed = json::array(), degree = json::array();
    auto morphism = [&](const bimod::MorphismPtr& f) {
        const auto vc = bimod::check_closed(*f, bound, 1);
        const auto vd = bimod::check_degree(*f, bound);
        ok = ok && vc.empty() && vd.empty();
        json a = {{"map", f->name()}}, b = {{"map", f->name()}};
        a.update(violations_json(*f->source(), vc));
        b.update(violations_json(*f->source(), vd));
        closed.push_back(a);
        degree.push_back(b);
    };
    for (int i = 0; i < t.n(); ++i) morphism(t.ev(i));
    morphism(t.tilde_ev());
    p.report["closedness"] = closed;
    p.report["degree"] = degree;

    const auto kl = twist::check_keylemma(t, bound);
    json cases = {{"inputs", kl.inputs}};
    for (const auto& [k, st] : kl.cases)
        cases[twist::case_name(k)] = {{"nontrivial", st.nontrivial}, {"violations", st.violations}, {"witnesses", st.witnesses}};
    cases["pass"] = kl.pass();
    ok = ok && kl.pass();
    p.report["cases"] = cases;

    json steps = json::array();
    int step = 1;
    for (const auto& r : t.rearrangements()) {
        json s = {{"step", step++}, {"equal", !r.difference}};
        if (r.difference) s["difference"] = *r.difference;
        ok = ok && !r.difference;
        steps.push_back(s);
    }
    p.report["rearrangement"] = steps;
    const auto cone_diff = bimod::compare_bimodules(*cone, *t.G(t.n()), bound, true);
    ok = ok && !cone_diff;
    p.report["cone_equality"] = {{"equal", !cone_diff}};
    if (cone_diff) p.report["cone_equality"]["difference"] = *cone_diff;

    const auto tc = twist::compare_with_table(t, bound);
    json table = {{"structure_equal", !tc.structure_difference},
                  {"tilde_ev_equal", !tc.tilde_ev_difference},
                  {"mixed_nonzero", tc.mixed_nonzero},
                  {"full_terms_outside", tc.full_terms_outside}};
    if (tc.structure_difference) table["structure_difference"] = *tc.structure_difference;
    if (tc.tilde_ev_difference) table["tilde_ev_difference"] = *tc.tilde_ev_difference;
    if (!tc.full_example.empty()) table["full_example"] = tc.full_example;
    ok = ok && !tc.structure_difference && !tc.tilde_ev_difference;
    p.report["contraction_table"] = table;
    return finish(p.report, ok);
}

int cmd_les(const RunConfig& c, Prepared& p) {
    const ObjId N = p.cat.object(c.pair->first), M = p.cat.object(c.pair->second);
    const auto o = sequences::open_sequence(p.cat, p.spheres, N, M);
    p.report["pair"] = {c.pair->first, c.pair->second};
    p.report["sequence"] = les_json(o.les);
    p.report["oracle"] = {{"cone", ranks_json(o.cone_ranks)}, {"oracle", ranks_json(o.oracle_ranks)}, {"agrees", o.oracle_agrees}};
    return finish(p.report, o.les.exact() && o.oracle_agrees);
}

json stability_json(const bimod::CapStability& s) {
    return {{"ranks", ranks_json(s.ranks)}, {"next_cap_ranks", ranks_json(s.next)}, {"unstable", set_json(s.unstable)}};
}

int cmd_hochschild(const RunConfig& c, Prepared& p) {
    const auto d = sequences::build_D(p.cat, p.spheres, c.cap, true);
    p.report["cap"] = c.cap;
    p.report["degrees"] = "raw";
    p.report["diagonal"] = stability_json(d.diagonal);
    p.report["D"] = stability_json(d.d);
    p.report["precomposition"] = ranks_json(d.precomposition);
    p.report["identity_nonzero"] = d.identity_nonzero;
    p.report["sequence"] = les_json(*d.sequence);
    return finish(p.report, d.identity_nonzero && d.sequence->exact());
}

void text_lines(const json& j, const std::string& indent, std::ostringstream& out);

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat(const json& j) {
    if (j.is_object() || j.is_array())
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) return false;
    return true;
}

std::string inline_form(const json& j) {
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
        return s + "]";
    }
    if (j.is_object()) {
        std::string s;
        for (auto it = j.begin(); it != j.end(); ++it) s += (s.empty() ? "" : "  ") + it.key() + "=" + scalar(it.value());
        return s.empty() ? "-" : s;
    }
    return scalar(j);
}

void text_lines(const json& j, const std::string& indent, std::ostringstream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (flat(v)) {
            out << indent << it.key() << ": " << inline_form(v) << "\n";
        } else if (v.is_object()) {
            out << indent << it.key() << ":\n";
            text_lines(v, indent + "  ", out);
        } else {
            out << indent << it.key() << ":\n";
            for (const auto& e : v) {
                if (flat(e)) {
                    out << indent << "  - " << inline_form(e) << "\n";
                } else {
                    out << indent << "  -\n";
                    text_lines(e, indent + "    ", out);
                }
            }
        }
    }
}

}  // namespace

RunResult run(const RunConfig& config) {
    RunResult r;
    Prepared p;
    try {
        p = prepare(config);
    } catch (const InputError& e) {
        r.status = input_error;
        r.report = {{"schema", schema_version}, {"command", config.command}, {"status", "error"}, {"error", e.what()}};
        return r;
    }
    try {
        if (config.command == "validate") r.status = cmd_validate(config, p);
        if (config.command == "build") r.status = cmd_build(config, p);
        if (config.command == "check") r.status = cmd_check(config, p);
        if (config.command == "les") r.status = cmd_les(config, p);
        if (config.command == "hochschild") r.status = cmd_hochschild(config, p);
    } catch (const std::exception& e) {
        // the input was well formed but a construction failed on it
        p.report["error"] = e.what();
        finish(p.report, false);
        r.status = failed;
    }
    r.report = std::move(p.report);
    return r;
}

std::string render(const RunResult& result, Format format) {
    if (format == Format::json) return result.report.dump(2) + "\n";
    std::ostringstream out;
    text_lines(result.report, "", out);
    return out.str();
}

}  // namespace twistseq::cli
