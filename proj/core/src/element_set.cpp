#include "semidual/element_set.hpp"

#include <algorithm>

namespace semidual {

ElementSet ElementSet::full(std::size_t n) {
    ElementSet s;
    for (std::size_t k = 0; k < kWords && n > 0; ++k) {
        if (n >= 64) {
            s.w_[k] = ~std::uint64_t{0};
            n -= 64;
        } else {
            s.w_[k] = (std::uint64_t{1} << n) - 1;
            n = 0;
        }
    }
    return s;
}

ElementSet ElementSet::from_indices(const std::vector<int>& members) {
    ElementSet s;
    for (int m : members) s.insert(static_cast<std::size_t>(m));
    return s;
}

std::vector<int> ElementSet::indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
}

std::size_t ElementSet::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : w_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    auto ia = a.indices(), ib = b.indices();
    return ia < ib;
}

void sort_canonical(std::vector<ElementSet>& sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
}

} // namespace semidual
