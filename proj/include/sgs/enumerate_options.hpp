#pragma once

#include <cstdint>

namespace sgs {

// Controls for tree enumeration.  split_depth fixes the task decomposition
// and is part of the deterministic contract: results (including floating
// aggregates) are byte-identical across thread counts at a fixed split depth.
struct EnumOptions {
    int split_depth = 8;
    int threads = 1;  // 0 = hardware concurrency
    std::uint64_t node_budget = 10'000'000'000ull;
};

}  // namespace sgs
