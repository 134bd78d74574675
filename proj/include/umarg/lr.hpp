#pragma once

#include <cstdint>

#include "umarg/partition.hpp"

namespace umarg {

// Littlewood-Richardson coefficient c^{outer}_{inner_left, inner_right}:
// the number of LR skew tableaux of shape outer/inner_left with content
// inner_right. Size mismatch or non-containment yields 0, never an error.
struct LrQuery {
    Partition outer;
    Partition inner_left;
    Partition inner_right;
};

std::uint64_t lr_coefficient(const LrQuery& q);

// lr_coefficient(q) > 0, stopping at the first witness tableau.
bool lr_positive(const LrQuery& q);

std::uint64_t lr_coefficient(const Partition& outer, const Partition& inner_left,
                             const Partition& inner_right);
bool lr_positive(const Partition& outer, const Partition& inner_left,
                 const Partition& inner_right);

} // namespace umarg
