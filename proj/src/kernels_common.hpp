#pragma once

#include <cstdint>

namespace qadv::kern {

// The indices selected by (i & fixed_mask) == fixed_val form a lattice whose
// contiguous runs have length 2^ctz(fixed_mask).  Enumerate (start, len)
// pairs; `fixed_val` bits must lie inside `fixed_mask`.
template <class F>
inline void for_each_run(std::uint64_t size, std::uint64_t fixed_mask, std::uint64_t fixed_val, F&& f) {
    if (fixed_mask == 0) {
        f(std::uint64_t(0), size);
        return;
    }
    const std::uint64_t low = fixed_mask & (~fixed_mask + 1);  // lowest set bit
    const std::uint64_t run = low;                             // contiguous run length
    const std::uint64_t free_high = ~fixed_mask & (size - 1) & ~(run - 1);
    std::uint64_t sub = 0;
    do {
        f(sub | fixed_val, run);
        sub = (sub - free_high) & free_high;
    } while (sub != 0);
}

}  // namespace qadv::kern
