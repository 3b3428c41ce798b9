#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace floodpoly {

/// Bitmask over the vertices 0..n-1 of a fixed host graph size.
/// One 64-bit word per 64 vertices; the n <= 64 case is the hot path and
/// callers that care (the enumeration kernel) work on raw words directly.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(std::size_t n);
    static VertexSet of(std::size_t n, std::initializer_list<std::size_t> vertices);
    static VertexSet from_mask(std::size_t n, std::uint64_t mask); // n <= 64

    std::size_t universe_size() const { return n_; }

    bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void insert(std::size_t v);
    void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t count() const;
    bool empty() const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet complement() const;

    std::uint64_t word(std::size_t i) const { return words_[i]; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t as_mask() const; // n <= 64 only

    std::vector<std::size_t> to_indices() const;
    /// "{v_1, v_4, v_6}" style, 1-indexed.
    std::string to_display_string() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Ordering by size, then lexicographically on ascending vertex indices.
    static bool size_lex_less(const VertexSet& a, const VertexSet& b);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;

    void check_index(std::size_t v) const;
};

} // namespace floodpoly
