#pragma once

#include <cstdint>

namespace hstar {

/// Desk-scale limits. Exceeding one raises ResourceLimit instead of running away.
struct ResourceCaps {
    std::int64_t max_volume = 1'000'000;         // |Lambda| / parallelepiped points
    std::int64_t max_box_points = 10'000'000;    // bounding box of a dilate
    std::int64_t max_codewords = 1'000'000;      // p^r for full enumeration
    std::int64_t max_field_order = 2048;         // q for Bernoulli sweeps
    std::int64_t max_search_nodes = 5'000'000;   // isomorphism / canonical-form search
};

}  // namespace hstar
