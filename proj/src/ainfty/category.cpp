#include "twistseq/ainfty/category.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace twistseq::ainfty {

ObjId Category::add_object(const std::string& name) {
    if (find_object(name)) throw std::invalid_argument("duplicate object '" + name + "'");
    objects_.push_back(name);
    const auto n = objects_.size();
    for (auto& row : hom_) row.resize(n);
    hom_.emplace_back(n);
    unit_.emplace_back();
    sphere_.emplace_back();
    return static_cast<ObjId>(n - 1);
}

GenId Category::add_generator(const std::string& name, ObjId source, ObjId target, int degree) {
    if (find_generator(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
    if (source < 0 || source >= object_count() || target < 0 || target >= object_count())
        throw std::invalid_argument("generator '" + name + "' has an unknown endpoint");
    gens_.push_back(Generator{name, source, target, degree, false, static_cast<int>(hom_[source][target].size())});
    const auto id = static_cast<GenId>(gens_.size() - 1);
    hom_[source][target].push_back(id);
    return id;
}

void Category::set_unit(ObjId obj, GenId unit) {
    const Generator& g = gen(unit);
    if (g.source != obj || g.target != obj)
        throw std::invalid_argument("unit '" + g.name + "' is not an endomorphism of " + object_name(obj));
    if (g.degree != 0) throw std::invalid_argument("unit '" + g.name + "' must have degree 0");
    if (unit_[obj]) throw std::invalid_argument("object " + object_name(obj) + " already has a unit");
    for (const auto& [in, out] : mu_)
        for (GenId x : in)
            if (x == unit) throw std::invalid_argument("unit '" + g.name + "' already used as a μ input");
    unit_[obj] = unit;
    gens_[unit].unit = true;
}

void Category::set_sphere(ObjId obj, int dim) {
    if (sphere_.at(obj)) throw std::invalid_argument("object " + object_name(obj) + " already declared a sphere");
    sphere_[obj] = dim;
}

void Category::set_mu_unchecked(std::vector<GenId> inputs, SparseVec output) {
    if (inputs.empty()) throw std::invalid_argument("μ needs at least one input");
    if (!composable(inputs)) throw std::invalid_argument("μ inputs '" + chain_string(inputs) + "' are not composable");
    for (GenId x : inputs)
        if (is_unit(x)) throw std::invalid_argument("stored μ constants may not take unit inputs");
    const ObjId a = gen(inputs.front()).source;
    const ObjId b = gen(inputs.back()).target;
    for (GenId y : output)
        if (gen(y).source != a || gen(y).target != b)
            throw std::invalid_argument("μ output '" + gen(y).name + "' does not lie in hom(" + object_name(a) + ", " +
                                        object_name(b) + ")");
    if (mu_.count(inputs)) throw std::invalid_argument("μ on '" + chain_string(inputs) + "' stated twice");
    max_order_ = std::max(max_order_, static_cast<int>(inputs.size()));
    if (!output.empty()) mu_.emplace(std::move(inputs), std::move(output));
}

void Category::set_mu(std::vector<GenId> inputs, SparseVec output) {
    const int k = static_cast<int>(inputs.size());
    const int expected = degree_of(inputs) + 2 - k;
    for (GenId y : output)
        if (gen(y).degree != expected)
            throw std::invalid_argument("degree law violated: μ" + std::to_string(k) + "(" + chain_string(inputs) +
                                        ") must have degree " + std::to_string(expected) + " but '" + gen(y).name +
                                        "' has degree " + std::to_string(gen(y).degree));
    set_mu_unchecked(std::move(inputs), std::move(output));
}

void Category::validate() const {
    for (ObjId o = 0; o < object_count(); ++o) {
        if (!unit_[o]) throw std::invalid_argument("object " + object_name(o) + " has no unit");
        if (auto d = sphere_[o]) {
            const auto& h = hom(o, o);
            bool ok = h.size() == 2;
            if (ok) {
                const GenId other = h[0] == *unit_[o] ? h[1] : h[0];
                ok = (h[0] == *unit_[o] || h[1] == *unit_[o]) && gen(other).degree == *d;
            }
            if (!ok)
                throw std::invalid_argument("sphere " + object_name(o) + " must have hom(" + object_name(o) + "," +
                                            object_name(o) + ") spanned by its unit and one generator of degree " +
                                            std::to_string(*d));
        }
    }
    for (const auto& [in, out] : mu_) {
        const int k = static_cast<int>(in.size());
        for (GenId y : out)
            if (gen(y).degree != degree_of(in) + 2 - k)
                throw std::invalid_argument("degree law violated at μ" + std::to_string(k) + "(" + chain_string(in) +
                                            ")");
    }
}

std::optional<ObjId> Category::find_object(const std::string& name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name) return static_cast<ObjId>(i);
    return std::nullopt;
}

ObjId Category::object(const std::string& name) const {
    if (auto o = find_object(name)) return *o;
    throw std::invalid_argument("unknown object '" + name + "'");
}

std::optional<GenId> Category::find_generator(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<GenId>(i);
    return std::nullopt;
}

GenId Category::generator(const std::string& name) const {
    if (auto g = find_generator(name)) return *g;
    throw std::invalid_argument("unknown generator '" + name + "'");
}

const std::vector<GenId>& Category::hom(ObjId a, ObjId b) const {
    return hom_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
}

GenId Category::unit(ObjId o) const {
    if (!unit_.at(o)) throw std::logic_error("object " + object_name(o) + " has no unit");
    return *unit_[o];
}

SparseVec Category::mu(std::span<const GenId> inputs) const {
    const std::size_t k = inputs.size();
    if (k == 2) {
        if (is_unit(inputs[0])) return SparseVec{inputs[1]};
        if (is_unit(inputs[1])) return SparseVec{inputs[0]};
    }
    if (k > static_cast<std::size_t>(max_order_)) return {};
    for (GenId x : inputs)
        if (is_unit(x)) return {};
    auto it = mu_.find(std::vector<GenId>(inputs.begin(), inputs.end()));
    return it == mu_.end() ? SparseVec{} : it->second;
}

bool Category::composable(std::span<const GenId> chain) const {
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (gen(chain[i - 1]).target != gen(chain[i]).source) return false;
    return true;
}

int Category::degree_of(std::span<const GenId> chain) const {
    int d = 0;
    for (GenId g : chain) d += gen(g).degree;
    return d;
}

std::optional<int> Category::longest_nonunit_chain() const {
    const int n = object_count();
    // longest[o] = longest non-unit chain starting at o; cycle => unbounded.
    std::vector<int> state(static_cast<std::size_t>(n), 0), longest(static_cast<std::size_t>(n), 0);
    bool cyclic = false;
    std::function<void(int)> visit = [&](int o) {
        state[o] = 1;
        for (int t = 0; t < n; ++t)
            for (GenId g : hom(o, t)) {
                if (is_unit(g)) continue;
                if (state[t] == 1) {
                    cyclic = true;
                    continue;
                }
                if (state[t] == 0) visit(t);
                longest[o] = std::max(longest[o], longest[t] + 1);
            }
        state[o] = 2;
    };
    for (int o = 0; o < n; ++o)
        if (state[o] == 0) visit(o);
    if (cyclic) return std::nullopt;
    int best = 0;
    for (int v : longest) best = std::max(best, v);
    return best;
}

std::string Category::chain_string(std::span<const GenId> chain) const {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ' ';
        s += gen(chain[i]).name;
    }
    return s;
}

std::string Category::vec_string(const SparseVec& v) const {
    if (v.empty()) return "0";
    std::string s;
    for (GenId g : v) {
        if (!s.empty()) s += " + ";
        s += gen(g).name;
    }
    return s;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, int line, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected an integer ") + what + ", got '" + s + "'");
    }
}

}  // namespace

Category parse_category(const std::string& text) {
    struct MuLine {
        int line;
        std::vector<std::string> tokens;
    };
    std::vector<MuLine> mu_lines;
    std::vector<std::pair<int, std::string>> object_lines;
    std::vector<std::pair<int, std::string>> sphere_lines;
    std::optional<std::string> name;
    Category cat;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto tok = split_ws(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        try {
            if (kw == "category") {
                if (tok.size() != 2) throw ParseError(lineno, "usage: category <name>");
                if (name) throw ParseError(lineno, "category name given twice");
                name = tok[1];
            } else if (kw == "object") {
                if (tok.size() != 2) throw ParseError(lineno, "usage: object <Obj>");
                cat.add_object(tok[1]);
                object_lines.emplace_back(lineno, tok[1]);
            } else if (kw == "sphere") {
                if (tok.size() != 3) throw ParseError(lineno, "usage: sphere <Obj> <d>");
                auto o = cat.find_object(tok[1]);
                if (!o) throw ParseError(lineno, "unknown object '" + tok[1] + "'");
                cat.set_sphere(*o, parse_int(tok[2], lineno, "sphere dimension"));
                sphere_lines.emplace_back(lineno, tok[1]);
            } else if (kw == "gen") {
                if (tok.size() != 5) throw ParseError(lineno, "usage: gen <Src> <Dst> <name> <degree>");
                auto s = cat.find_object(tok[1]);
                auto t = cat.find_object(tok[2]);
                if (!s) throw ParseError(lineno, "unknown object '" + tok[1] + "'");
                if (!t) throw ParseError(lineno, "unknown object '" + tok[2] + "'");
                cat.add_generator(tok[3], *s, *t, parse_int(tok[4], lineno, "degree"));
            } else if (kw == "unit") {
                if (tok.size() != 3) throw ParseError(lineno, "usage: unit <Obj> <name>");
                auto o = cat.find_object(tok[1]);
                if (!o) throw ParseError(lineno, "unknown object '" + tok[1] + "'");
                auto g = cat.find_generator(tok[2]);
                if (!g) throw ParseError(lineno, "unknown generator '" + tok[2] + "'");
                cat.set_unit(*o, *g);
            } else if (kw == "mu") {
                mu_lines.push_back({lineno, tok});
            } else {
                throw ParseError(lineno, "unknown directive '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!name) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'category <name>' line");
    cat.set_name(*name);
    Category& named = cat;

    for (const auto& [line, tok] : mu_lines) {
        // mu <k> : x1 .. xk -> y1 [+ y2 ...]
        if (tok.size() < 5 || tok[2] != ":") throw ParseError(line, "usage: mu <k> : <x1> ... <xk> -> <y1> [+ <y2> ...]");
        const int k = parse_int(tok[1], line, "arity");
        std::size_t i = 3;
        std::vector<GenId> inputs;
        for (; i < tok.size() && tok[i] != "->"; ++i) {
            auto g = named.find_generator(tok[i]);
            if (!g) throw ParseError(line, "unknown generator '" + tok[i] + "'");
            inputs.push_back(*g);
        }
        if (i == tok.size()) throw ParseError(line, "missing '->'");
        if (static_cast<int>(inputs.size()) != k)
            throw ParseError(line, "arity " + std::to_string(k) + " but " + std::to_string(inputs.size()) + " inputs");
        if (k < 1) throw ParseError(line, "arity must be at least 1");
        std::vector<int> outs;
        bool expect_term = true;
        for (++i; i < tok.size(); ++i) {
            if (expect_term) {
                if (tok[i] != "0") {
                    auto g = named.find_generator(tok[i]);
                    if (!g) throw ParseError(line, "unknown generator '" + tok[i] + "'");
                    outs.push_back(*g);
                }
                expect_term = false;
            } else {
                if (tok[i] != "+") throw ParseError(line, "expected '+' between output terms");
                expect_term = true;
            }
        }
        if (expect_term) throw ParseError(line, "missing output after '->' or trailing '+'");
        if (!named.composable(inputs)) throw ParseError(line, "inputs '" + named.chain_string(inputs) + "' are not composable");
        SparseVec out(outs);

        bool has_unit = false;
        for (GenId x : inputs) has_unit = has_unit || named.is_unit(x);
        if (has_unit) {
            // Unit rows are implicit; stating them is allowed only if consistent.
            if (named.mu(inputs) != out)
                throw ParseError(line, "stated value of μ" + std::to_string(k) + "(" + named.chain_string(inputs) +
                                           ") contradicts strict unitality");
            continue;
        }
        try {
            named.set_mu(std::move(inputs), std::move(out));
        } catch (const std::exception& e) {
            throw ParseError(line, e.what());
        }
    }

    try {
        named.validate();
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        int line = lineno;
        for (const auto& [l, obj] : sphere_lines)
            if (msg.find("sphere " + obj + " ") != std::string::npos) line = l;
        for (const auto& [l, obj] : object_lines)
            if (msg.find("object " + obj + " ") != std::string::npos) line = l;
        throw ParseError(line, msg);
    }
    return named;
}

Category load_category(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_category(ss.str());
}

}  // namespace twistseq::ainfty
