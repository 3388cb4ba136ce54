#pragma once

#include <random>
#include <vector>

#include "denum/partition.hpp"

namespace denum {

// Deterministic verification corpora. Draws use mt19937 with modulo, never
// std::uniform_int_distribution, whose mapping is implementation-defined and
// would break byte-identical output across platforms.
inline Components random_components(std::mt19937& gen, int max_len, long max_component) {
    int n = 1 + static_cast<int>(gen() % static_cast<unsigned long>(max_len));
    Components c(static_cast<std::size_t>(n));
    for (long& d : c) d = 1 + static_cast<long>(gen() % static_cast<unsigned long>(max_component));
    return c;
}

// Fixed anchors so non-coprime and repeated components are always exercised.
inline const std::vector<Components>& anchor_components() {
    static const std::vector<Components> anchors = {
        {2, 4, 6}, {6, 10, 15}, {1, 2, 3, 4, 5}, {2, 2}};
    return anchors;
}

inline std::vector<Components> seeded_corpus(unsigned long seed, int count, int max_len,
                                             long max_component, bool with_anchors) {
    std::mt19937 gen(static_cast<std::mt19937::result_type>(seed));
    std::vector<Components> out;
    if (with_anchors)
        out.insert(out.end(), anchor_components().begin(), anchor_components().end());
    for (int i = 0; i < count; ++i) out.push_back(random_components(gen, max_len, max_component));
    return out;
}

}  // namespace denum
