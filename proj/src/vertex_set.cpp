#include "floodpoly/vertex_set.hpp"

#include <bit>
#include <stdexcept>

namespace floodpoly {

void VertexSet::check_index(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex index " + std::to_string(v) +
                                         " out of range for universe of size " + std::to_string(n_));
}

void VertexSet::insert(std::size_t v) {
    check_index(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

VertexSet VertexSet::full(std::size_t n) {
    VertexSet out(n);
    for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = ~std::uint64_t{0};
    if (n % 64) out.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return out;
}

VertexSet VertexSet::of(std::size_t n, std::initializer_list<std::size_t> vertices) {
    VertexSet out(n);
    for (std::size_t v : vertices) out.insert(v);
    return out;
}

VertexSet VertexSet::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) throw std::out_of_range("from_mask requires n <= 64");
    if (n < 64 && (mask >> n)) throw std::out_of_range("mask has bits beyond universe");
    VertexSet out(n);
    if (!out.words_.empty()) out.words_[0] = mask;
    return out;
}

std::size_t VertexSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_) {
        if (w) return false;
    }
    return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
    return out;
}

std::uint64_t VertexSet::as_mask() const {
    if (n_ > 64) throw std::out_of_range("as_mask requires n <= 64");
    return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> VertexSet::to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_display_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](std::size_t v) {
        if (!first) out += ", ";
        out += "v_" + std::to_string(v + 1);
        first = false;
    });
    out += "}";
    return out;
}

bool VertexSet::size_lex_less(const VertexSet& a, const VertexSet& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    auto ia = a.to_indices(), ib = b.to_indices();
    return ia < ib;
}

} // namespace floodpoly
