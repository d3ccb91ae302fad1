#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsc/cover_model.hpp"

namespace lsc {

// Minimum hitting set of `sets`; among minimum solutions, the
// lexicographically smallest sorted id list. Returns nullopt when every
// hitting set is larger than `ub`. Sets must be nonempty.
std::optional<std::vector<int>> min_hitting_set(const SetCollection& sets,
                                                std::optional<int> ub = std::nullopt);

// Exact solver over the merged demands. Throws BudgetExceeded when ub is
// given and the optimum exceeds it.
Cover solve_exact(const CoverInstance& ci, std::optional<int> ub = std::nullopt);

// Repeatedly picks the element hitting the most unhit demands, smallest id on
// ties.
Cover solve_greedy(const CoverInstance& ci);

struct LocalSearchParams {
    int k = 2;  // largest |A'| considered in a swap
    std::int64_t max_iterations = 1'000'000;
    // Permutes the scan order of ground elements; 0 keeps id order.
    std::uint64_t seed = 0;
};

struct LocalSearchResult {
    Cover cover;
    std::vector<int> size_history;  // cover size after each iteration, starting with |ground|
    std::int64_t iterations = 0;
    bool cap_exceeded = false;
};

// Starting from the whole allowed ground set, replace some A' (|A'| <= k) by
// a strictly smaller M drawn from the unchosen ground elements whenever the
// result stays feasible. Stops when no such swap exists.
LocalSearchResult local_search(const CoverInstance& ci, const LocalSearchParams& params);

struct Swap {
    std::vector<int> removed;
    std::vector<int> added;
};

// First improving swap of radius <= k in the solver's scan order (A' by
// increasing size then lexicographic in scan rank; M likewise), or nullopt if
// `current` is locally optimal.
std::optional<Swap> find_improving_swap(const CoverInstance& ci, const std::vector<int>& current, int k,
                                        const std::vector<int>& scan_order);

// Scan order for a seed: ground ids, shuffled unless seed == 0.
std::vector<int> scan_order(const CoverInstance& ci, std::uint64_t seed);

}  // namespace lsc
