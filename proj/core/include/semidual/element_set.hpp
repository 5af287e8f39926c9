#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace semidual {

// Upper bound on the carrier size of any single structure.
inline constexpr std::size_t kMaxElements = 256;

// Fixed-capacity bitset over element indices of one owning structure.
class ElementSet {
public:
    static constexpr std::size_t kWords = kMaxElements / 64;

    ElementSet() = default;
    ElementSet(std::initializer_list<int> members) {
        for (int m : members) insert(m);
    }

    static ElementSet full(std::size_t n);
    static ElementSet single(std::size_t i) {
        ElementSet s;
        s.insert(i);
        return s;
    }
    static ElementSet from_indices(const std::vector<int>& members);

    bool contains(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void insert(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool subset_of(const ElementSet& o) const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const ElementSet& o) const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
        return *this;
    }
    ElementSet& operator-=(const ElementSet& o) {
        for (std::size_t k = 0; k < kWords; ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    ElementSet complement(std::size_t n) const { return full(n) - *this; }

    // Smallest member, or -1.
    int first() const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < kWords; ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const;
    std::size_t hash() const;

    // Raw word, used for compact encodings of small sets.
    std::uint64_t word(std::size_t k) const { return w_[k]; }

private:
    std::array<std::uint64_t, kWords> w_{};
};

// Deterministic listing order: by cardinality, then lexicographically on the
// ascending index sequence.
bool canonical_less(const ElementSet& a, const ElementSet& b);
void sort_canonical(std::vector<ElementSet>& sets);

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace semidual
