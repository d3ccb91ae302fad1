#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lsc/arrangement.hpp"

namespace lsc {

struct TripleCoverage {
    int max_count = 0;
    std::array<int, 3> witness{};  // lexicographically smallest triple attaining max_count
};

// Largest number of cells covered by all three segments of a triple, over
// every triple. Requires an axis-parallel instance with n >= 3 (throws
// NotAxisParallel / TooFewSegments).
TripleCoverage triple_coverage_max(const Arrangement& arr);

// Same result, single-threaded. Kept as the reference for the parallel
// kernel and for benchmarking.
TripleCoverage triple_coverage_max_serial(const Arrangement& arr);

// Per-bucket maxima, bucketed by how many of the three pairs intersect
// (0, 1 or 2). Index 3 is unused for axis-parallel input.
struct TripleBuckets {
    std::array<int, 4> max_count{};
    std::array<std::array<int, 3>, 4> witness{};
    std::array<std::int64_t, 4> triples{};
};
TripleBuckets triple_coverage_by_intersections(const Arrangement& arr);

}  // namespace lsc
