#include "twistseq/bimod/suites.hpp"

#include <map>

namespace twistseq::bimod {

namespace {

class ChainCache {
public:
    ChainCache(const Category& cat, bool units) : cat_(cat), units_(units) {}
    const std::vector<Chain>& to(ObjId o, int len) { return get(to_, o, len, false); }
    const std::vector<Chain>& from(ObjId o, int len) { return get(from_, o, len, true); }

private:
    using Table = std::map<std::pair<ObjId, int>, std::vector<Chain>>;
    const std::vector<Chain>& get(Table& t, ObjId o, int len, bool forward) {
        auto it = t.find({o, len});
        if (it == t.end())
            it = t.emplace(std::make_pair(o, len), forward ? ainfty::chains_from(cat_, o, len, units_)
                                                           : ainfty::chains_to(cat_, o, len, units_))
                     .first;
        return it->second;
    }
    const Category& cat_;
    bool units_;
    Table to_, from_;
};

std::string vec_labels(const GradedSpace& s, const SparseVec& v) {
    if (v.empty()) return "0";
    std::string out;
    for (int i : v) out += (out.empty() ? "" : " + ") + s[i].label;
    return out;
}

}  // namespace

void for_each_input(const Bimodule& m, int bound, bool units, const std::function<void(const Input&)>& fn) {
    const Category& cat = m.category();
    ChainCache cache(cat, units);
    Input in;
    for (int t = 0; t <= bound; ++t)
        for (int r = 0; r <= t; ++r)
            for (ObjId A = 0; A < cat.object_count(); ++A)
                for (ObjId B = 0; B < cat.object_count(); ++B) {
                    const int dim = m.space(A, B).size();
                    if (dim == 0) continue;
                    in.A = A;
                    in.B = B;
                    for (const Chain& a : cache.to(A, r))
                        for (const Chain& b : cache.from(B, t - r)) {
                            in.a = a;
                            in.b = b;
                            for (in.m = 0; in.m < dim; ++in.m) fn(in);
                        }
                }
}

long count_inputs(const Bimodule& m, int bound) {
    long n = 0;
    for_each_input(m, bound, true, [&](const Input&) { ++n; });
    return n;
}

std::string describe(const Bimodule& m, const Input& in) {
    const Category& cat = m.category();
    std::string s = cat.chain_string(in.a);
    s += (s.empty() ? "| " : " | ") + m.space(in.A, in.B)[in.m].label + " |";
    const std::string b = cat.chain_string(in.b);
    if (!b.empty()) s += " " + b;
    return s;
}

std::vector<Violation> check_bimodule(const Bimodule& mod, int bound) {
    const Category& cat = mod.category();
    std::vector<Violation> out;
    for_each_input(mod, bound, true, [&](const Input& in) {
        const std::size_t r = in.a.size(), s = in.b.size();
        const auto [p0, qs] = output_pair(cat, in.a, in.A, in.B, in.b);

        const SparseVec once = mod.act(in.a, in.A, in.B, in.m, in.b);
        const int expected = mod.space(in.A, in.B).degree(in.m) + cat.degree_of(in.a) + cat.degree_of(in.b) + 1 -
                             static_cast<int>(r + s);
        for (int y : once)
            if (mod.space(p0, qs).degree(y) != expected) {
                out.push_back({"degree", in, once});
                break;
            }

        f2::Accumulator acc;
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j <= s; ++j) {
                const Chain ai = ainfty::slice(in.a, i, r), bj = ainfty::slice(in.b, 0, j);
                const auto [pi, qj] = output_pair(cat, ai, in.A, in.B, bj);
                const Chain ao = ainfty::slice(in.a, 0, i), bo = ainfty::slice(in.b, j, s);
                for (int y : mod.act(ai, in.A, in.B, in.m, bj)) acc.add(mod.act(ao, pi, qj, y, bo));
            }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 1; i + j <= r; ++j)
                for (GenId y : cat.mu(std::span<const GenId>(in.a).subspan(i, j)))
                    acc.add(mod.act(ainfty::splice(in.a, i, i + j, y), in.A, in.B, in.m, in.b));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 1; i + j <= s; ++j)
                for (GenId y : cat.mu(std::span<const GenId>(in.b).subspan(i, j)))
                    acc.add(mod.act(in.a, in.A, in.B, in.m, ainfty::splice(in.b, i, i + j, y)));
        SparseVec v = acc.finish();
        if (!v.empty()) out.push_back({"relation", in, std::move(v)});
    });
    return out;
}

std::vector<Violation> check_closed(const PreMorphism& f, int bound, int limit) {
    std::vector<Violation> out;
    for_each_input(*f.source(), bound, true, [&](const Input& in) {
        if (limit > 0 && static_cast<int>(out.size()) >= limit) return;
        SparseVec v = differential_sides(f, in.a, in.A, in.B, in.m, in.b).total();
        if (!v.empty()) out.push_back({"closed", in, std::move(v)});
    });
    return out;
}

std::vector<Violation> check_degree(const PreMorphism& f, int bound) {
    const Category& cat = f.category();
    std::vector<Violation> out;
    for_each_input(*f.source(), bound, true, [&](const Input& in) {
        const auto [p0, qs] = output_pair(cat, in.a, in.A, in.B, in.b);
        const int expected = f.source()->space(in.A, in.B).degree(in.m) + cat.degree_of(in.a) +
                             cat.degree_of(in.b) + f.degree() - in.length();
        const SparseVec v = f.apply(in.a, in.A, in.B, in.m, in.b);
        for (int y : v)
            if (f.target()->space(p0, qs).degree(y) != expected) {
                out.push_back({"degree", in, v});
                break;
            }
    });
    return out;
}

std::optional<std::string> compare_bimodules(const Bimodule& x, const Bimodule& y, int bound, bool labels) {
    if (&x.category() != &y.category()) return "different categories";
    const Category& cat = x.category();
    for (ObjId A = 0; A < cat.object_count(); ++A)
        for (ObjId B = 0; B < cat.object_count(); ++B) {
            const GradedSpace &sx = x.space(A, B), &sy = y.space(A, B);
            const std::string where = "(" + cat.object_name(A) + "," + cat.object_name(B) + ")";
            if (sx.size() != sy.size()) return "dimension differs at " + where;
            for (int i = 0; i < sx.size(); ++i) {
                if (sx[i].degree != sy[i].degree) return "degree of element " + std::to_string(i) + " differs at " + where;
                if (sx[i].word != sy[i].word) return "word of element " + std::to_string(i) + " differs at " + where;
                if (labels && sx[i].label != sy[i].label)
                    return "label '" + sx[i].label + "' vs '" + sy[i].label + "' at " + where;
            }
        }
    std::optional<std::string> diff;
    for_each_input(x, bound, true, [&](const Input& in) {
        if (diff) return;
        const SparseVec vx = x.act(in.a, in.A, in.B, in.m, in.b);
        const SparseVec vy = y.act(in.a, in.A, in.B, in.m, in.b);
        if (vx != vy) {
            const auto [p0, qs] = output_pair(cat, in.a, in.A, in.B, in.b);
            diff = "structure map differs on " + describe(x, in) + ": " + vec_labels(x.space(p0, qs), vx) + " vs " +
                   vec_labels(y.space(p0, qs), vy);
        }
    });
    return diff;
}

std::optional<std::string> compare_morphisms(const PreMorphism& f, const PreMorphism& g, int bound) {
    if (f.degree() != g.degree()) return "degrees differ";
    const Category& cat = f.category();
    std::optional<std::string> diff;
    for_each_input(*f.source(), bound, true, [&](const Input& in) {
        if (diff) return;
        const SparseVec vf = f.apply(in.a, in.A, in.B, in.m, in.b);
        const SparseVec vg = g.apply(in.a, in.A, in.B, in.m, in.b);
        if (vf != vg) {
            const auto [p0, qs] = output_pair(cat, in.a, in.A, in.B, in.b);
            diff = "components differ on " + describe(*f.source(), in) + ": " +
                   vec_labels(f.target()->space(p0, qs), vf) + " vs " + vec_labels(g.target()->space(p0, qs), vg);
        }
    });
    return diff;
}

namespace {

// Position in y of every element of x, per pair; nullopt with a message on mismatch.
std::optional<std::string> word_map(const Bimodule& x, const Bimodule& y, std::vector<std::vector<int>>& map) {
    const Category& cat = x.category();
    const int n = cat.object_count();
    map.assign(static_cast<std::size_t>(n * n), {});
    for (ObjId A = 0; A < n; ++A)
        for (ObjId B = 0; B < n; ++B) {
            const GradedSpace &sx = x.space(A, B), &sy = y.space(A, B);
            const std::string where = "(" + cat.object_name(A) + "," + cat.object_name(B) + ")";
            if (sx.size() != sy.size()) return "dimension differs at " + where;
            auto& row = map[static_cast<std::size_t>(A * n + B)];
            for (int i = 0; i < sx.size(); ++i) {
                const auto j = sy.find(sx[i].word);
                if (sx[i].word.empty() || !j) return "no match for '" + sx[i].label + "' at " + where;
                if (sx[i].degree != sy[*j].degree) return "degree of '" + sx[i].label + "' differs at " + where;
                row.push_back(*j);
            }
        }
    return std::nullopt;
}

SparseVec mapped(const std::vector<int>& row, const SparseVec& v) {
    std::vector<int> out;
    for (int i : v) out.push_back(row[static_cast<std::size_t>(i)]);
    return SparseVec(std::move(out));
}

}  // namespace

std::optional<std::string> compare_by_word(const Bimodule& x, const Bimodule& y, int bound) {
    std::vector<std::vector<int>> map;
    if (auto err = word_map(x, y, map)) return err;
    const Category& cat = x.category();
    const auto n = static_cast<std::size_t>(cat.object_count());
    std::optional<std::string> diff;
    for_each_input(x, bound, true, [&](const Input& in) {
        if (diff) return;
        const auto [p0, qs] = output_pair(cat, in.a, in.A, in.B, in.b);
        const auto& row_in = map[static_cast<std::size_t>(in.A) * n + static_cast<std::size_t>(in.B)];
        const auto& row_out = map[static_cast<std::size_t>(p0) * n + static_cast<std::size_t>(qs)];
        const SparseVec vx = mapped(row_out, x.act(in.a, in.A, in.B, in.m, in.b));
        const SparseVec vy = y.act(in.a, in.A, in.B, row_in[static_cast<std::size_t>(in.m)], in.b);
        if (vx != vy)
            diff = "structure map differs on " + describe(x, in) + ": " + vec_labels(y.space(p0, qs), vx) + " vs " +
                   vec_labels(y.space(p0, qs), vy);
    });
    return diff;
}

std::optional<std::string> compare_morphisms_by_word(const PreMorphism& f, const PreMorphism& g, int bound) {
    if (f.degree() != g.degree()) return "degrees differ";
    std::vector<std::vector<int>> map;
    if (auto err = word_map(*f.source(), *g.source(), map)) return err;
    const Category& cat = f.category();
    const auto n = static_cast<std::size_t>(cat.object_count());
    std::optional<std::string> diff;
    for_each_input(*f.source(), bound, true, [&](const Input& in) {
        if (diff) return;
        const auto& row_in = map[static_cast<std::size_t>(in.A) * n + static_cast<std::size_t>(in.B)];
        const SparseVec vf = f.apply(in.a, in.A, in.B, in.m, in.b);
        const SparseVec vg = g.apply(in.a, in.A, in.B, row_in[static_cast<std::size_t>(in.m)], in.b);
        if (vf != vg) {
            const auto [p0, qs] = output_pair(cat, in.a, in.A, in.B, in.b);
            diff = "components differ on " + describe(*f.source(), in) + ": " +
                   vec_labels(f.target()->space(p0, qs), vf) + " vs " + vec_labels(g.target()->space(p0, qs), vg);
        }
    });
    return diff;
}

}  // namespace twistseq::bimod
