#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace domviz {

// Subset of the vertex range [0, n) for a fixed universe size n.
// Backed by 64-bit words so union, intersection, complement and cardinality
// are word-parallel; n is bounded by the product cap (4096), i.e. 64 words.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) {
        if (universe < 0)
            throw std::invalid_argument("VertexSet: negative universe");
        n_ = universe;
        words_.assign(word_count(universe), 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check_range(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& other) {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    // Number of members not in `other`; avoids building the difference set.
    int count_minus(const VertexSet& other) const {
        check_same_universe(other);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~other.words_[i]);
        return c;
    }

    // Smallest member, -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Smallest member strictly greater than v, -1 if none.
    int next_after(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
        return out;
    }

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next_after(v_);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

private:
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void check_range(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe [0, " + std::to_string(n_) + ")");
    }

    void check_same_universe(const VertexSet& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(n_) +
                                        " vs " + std::to_string(other.n_) + ")");
    }

    // Clear bits at positions >= n_ in the last word.
    void trim() {
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Convenience constructor used all over the tests.
inline VertexSet make_set(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

}  // namespace domviz
