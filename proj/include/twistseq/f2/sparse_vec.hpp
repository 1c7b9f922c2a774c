#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace twistseq::f2 {

/// Vector over the two-element field, stored as the sorted set of indices
/// whose coefficient is 1. Addition is symmetric difference.
class SparseVec {
public:
    SparseVec() = default;
    SparseVec(std::initializer_list<int> idx) : idx_(idx) { normalize_(); }
    explicit SparseVec(std::vector<int> idx) : idx_(std::move(idx)) { normalize_(); }

    bool empty() const { return idx_.empty(); }
    std::size_t size() const { return idx_.size(); }
    const std::vector<int>& indices() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    bool contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

    void toggle(int i) {
        auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
        if (it != idx_.end() && *it == i)
            idx_.erase(it);
        else
            idx_.insert(it, i);
    }

    SparseVec& operator+=(const SparseVec& o) {
        std::vector<int> out;
        out.reserve(idx_.size() + o.idx_.size());
        std::set_symmetric_difference(idx_.begin(), idx_.end(), o.idx_.begin(), o.idx_.end(),
                                      std::back_inserter(out));
        idx_ = std::move(out);
        return *this;
    }
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }

    /// Shift every index by `offset`.
    SparseVec offset(int offset) const {
        SparseVec r;
        r.idx_.reserve(idx_.size());
        for (int i : idx_) r.idx_.push_back(i + offset);
        return r;
    }

    bool operator==(const SparseVec&) const = default;
    auto operator<=>(const SparseVec&) const = default;

private:
    void normalize_() {
        std::sort(idx_.begin(), idx_.end());
        std::vector<int> out;
        out.reserve(idx_.size());
        for (std::size_t i = 0; i < idx_.size();) {
            std::size_t j = i;
            while (j < idx_.size() && idx_[j] == idx_[i]) ++j;
            if ((j - i) % 2 == 1) out.push_back(idx_[i]);
            i = j;
        }
        idx_ = std::move(out);
    }

    std::vector<int> idx_;
};

/// Collects toggles cheaply and cancels pairs once at the end.
class Accumulator {
public:
    void toggle(int i) { buf_.push_back(i); }
    void add(const SparseVec& v) { buf_.insert(buf_.end(), v.begin(), v.end()); }
    void add_offset(const SparseVec& v, int offset) {
        for (int i : v) buf_.push_back(i + offset);
    }
    SparseVec finish() { return SparseVec(std::move(buf_)); }

private:
    std::vector<int> buf_;
};

}  // namespace twistseq::f2
