#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistseq/f2/f2_matrix.hpp"

namespace twistseq::f2 {

/// Structured label for elements of bar-type tensor summands: the factor chain
/// x0 ⊗ x1 ⊗ ... ⊗ xk (category generator ids) together with the index tuple
/// of the intermediate objects. Elements of spaces without such structure
/// carry an empty word.
struct ChainWord {
    std::vector<int> tuple;
    std::vector<int> factors;

    bool empty() const { return factors.empty(); }
    auto operator<=>(const ChainWord&) const = default;
    bool operator==(const ChainWord&) const = default;
};

struct BasisElement {
    std::string label;
    int degree = 0;
    ChainWord word;
};

/// Finite graded vector space with an ordered, labelled basis.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<BasisElement> basis);

    int size() const { return static_cast<int>(basis_.size()); }
    bool empty() const { return basis_.empty(); }
    const BasisElement& operator[](int i) const { return basis_[static_cast<std::size_t>(i)]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int degree(int i) const { return basis_[static_cast<std::size_t>(i)].degree; }

    /// Degrees that occur, ascending.
    std::vector<int> degrees() const;
    /// Global indices of the generators of degree q, in basis order.
    const std::vector<int>& in_degree(int q) const;
    int dim(int q) const { return static_cast<int>(in_degree(q).size()); }
    /// Position of generator i inside its degree block.
    int local_index(int i) const { return local_[static_cast<std::size_t>(i)]; }

    /// Index of the unique generator carrying `w`, if any.
    std::optional<int> find(const ChainWord& w) const;
    std::optional<int> find(const std::string& label) const;

    /// The space with every degree lowered by k.
    GradedSpace shifted(int k) const;

private:
    std::vector<BasisElement> basis_;
    std::map<int, std::vector<int>> by_degree_;
    std::vector<int> local_;
    std::map<ChainWord, int> by_word_;  // -1 marks an ambiguous word
    std::map<std::string, int> by_label_;
};

/// Thrown when a differential fails to square to zero.
class NotAComplex : public std::runtime_error {
public:
    NotAComplex(int degree, const std::string& what) : std::runtime_error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

/// Linear map between graded spaces of fixed degree, stored blockwise: the
/// block at source degree q maps local coordinates of degree q into local
/// coordinates of target degree q + degree.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedSpace source, GradedSpace target, int degree, std::map<int, F2Matrix> blocks);

    /// Builds the blocks from the image of every source generator (global indices).
    static GradedMap from_images(const GradedSpace& source, const GradedSpace& target, int degree,
                                 const std::function<SparseVec(int)>& image);

    int degree() const { return degree_; }
    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    /// Block at source degree q (a zero matrix of the right shape if absent).
    F2Matrix block(int q) const;

private:
    GradedSpace source_;
    GradedSpace target_;
    int degree_ = 0;
    std::map<int, F2Matrix> blocks_;
};

/// Cochain complex (differential of degree +1). d∘d = 0 is verified on construction.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(GradedSpace space, std::map<int, F2Matrix> differential);

    static ChainComplex from_images(GradedSpace space, const std::function<SparseVec(int)>& d);

    const GradedSpace& space() const { return space_; }
    int dim(int q) const { return space_.dim(q); }
    std::vector<int> degrees() const { return space_.degrees(); }
    /// d: C^q -> C^{q+1} in local coordinates.
    F2Matrix d(int q) const;

private:
    GradedSpace space_;
    std::map<int, F2Matrix> d_;
};

struct Homology {
    std::map<int, int> betti;                             // degree -> rank
    std::map<int, std::vector<SparseVec>> representatives;  // local coordinates

    int total() const {
        int t = 0;
        for (auto [q, b] : betti) t += b;
        return t;
    }
    int at(int q) const {
        auto it = betti.find(q);
        return it == betti.end() ? 0 : it->second;
    }
};

Homology homology(const ChainComplex& c, bool with_representatives = true);

/// Rank of the map H^q(src) -> H^{q+deg}(tgt) induced by the block `f_q`
/// (local coordinates). The caller is responsible for f being a chain map.
int induced_rank(const ChainComplex& src, const ChainComplex& tgt, int q, int deg, const F2Matrix& f_q);

/// Euler characteristic Σ (-1)^q rank.
int euler_characteristic(const std::map<int, int>& ranks);

}  // namespace twistseq::f2
