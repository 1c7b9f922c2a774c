#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistseq/f2/sparse_vec.hpp"

namespace twistseq::ainfty {

using f2::SparseVec;
using ObjId = int;
using GenId = int;

struct Generator {
    std::string name;
    ObjId source = 0;
    ObjId target = 0;
    int degree = 0;
    bool unit = false;
    int position = 0;  // index inside hom(source, target)
};

/// Error raised while reading a category file; carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Finite-dimensional, strictly unital A∞ category over F2.
///
/// Composition order: μ_k(x1, ..., xk) takes a path A0 -x1-> A1 -> ... -xk-> Ak
/// and lands in hom(A0, Ak). Generator ids are global; outputs of μ are
/// SparseVecs of generator ids. Unit rows of μ2 are implicit.
class Category {
public:
    Category() = default;
    explicit Category(std::string name) : name_(std::move(name)) {}

    // Builder interface. All validation that does not need the full table
    // happens here; `validate()` checks the rest.
    ObjId add_object(const std::string& name);
    GenId add_generator(const std::string& name, ObjId source, ObjId target, int degree);
    void set_unit(ObjId obj, GenId unit);
    void set_sphere(ObjId obj, int dim);
    /// Sets μ_k on a composable chain of non-unit generators. Checks
    /// composability, output hom space and the degree law.
    void set_mu(std::vector<GenId> inputs, SparseVec output);
    /// Same, without the degree-law check. Used to inject broken structure
    /// constants in falsification tests.
    void set_mu_unchecked(std::vector<GenId> inputs, SparseVec output);
    /// Checks units, sphere declarations and the degree law of stored constants.
    void validate() const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    int object_count() const { return static_cast<int>(objects_.size()); }
    const std::string& object_name(ObjId o) const { return objects_.at(static_cast<std::size_t>(o)); }
    std::optional<ObjId> find_object(const std::string& name) const;
    ObjId object(const std::string& name) const;

    int generator_count() const { return static_cast<int>(gens_.size()); }
    const Generator& gen(GenId g) const { return gens_[static_cast<std::size_t>(g)]; }
    std::optional<GenId> find_generator(const std::string& name) const;
    GenId generator(const std::string& name) const;

    /// Generators of hom(a, b), in declaration order.
    const std::vector<GenId>& hom(ObjId a, ObjId b) const;
    int hom_position(GenId g) const { return gen(g).position; }
    int hom_dim(ObjId a, ObjId b) const { return static_cast<int>(hom(a, b).size()); }
    GenId unit(ObjId o) const;
    bool is_unit(GenId g) const { return gen(g).unit; }
    std::optional<int> sphere_dim(ObjId o) const { return sphere_.at(static_cast<std::size_t>(o)); }

    /// μ_k on a composable chain, k = inputs.size() >= 1.
    SparseVec mu(std::span<const GenId> inputs) const;

    /// Stored (non-implicit) constants.
    const std::map<std::vector<GenId>, SparseVec>& stored_mu() const { return mu_; }
    int max_stored_order() const { return max_order_; }

    /// True when the chain is composable (consecutive targets match sources).
    bool composable(std::span<const GenId> chain) const;
    int degree_of(std::span<const GenId> chain) const;

    /// Length of the longest composable chain of non-unit generators, or
    /// nullopt when chains of every length exist.
    std::optional<int> longest_nonunit_chain() const;

    /// Generator names of a chain, space separated.
    std::string chain_string(std::span<const GenId> chain) const;
    std::string vec_string(const SparseVec& v) const;

private:
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Generator> gens_;
    std::vector<std::vector<std::vector<GenId>>> hom_;
    std::vector<std::optional<GenId>> unit_;
    std::vector<std::optional<int>> sphere_;
    std::map<std::vector<GenId>, SparseVec> mu_;
    int max_order_ = 0;
};

/// Reads the line-oriented category format. Throws ParseError with the line
/// number on any malformed or invalid input.
Category parse_category(const std::string& text);
Category load_category(const std::string& path);

}  // namespace twistseq::ainfty
