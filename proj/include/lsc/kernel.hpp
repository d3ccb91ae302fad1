#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lsc/cover_model.hpp"

namespace lsc {

// How reduction thresholds are counted.
//  fixpoint: each pair (element) is tested against the current collection
//            and sweeps repeat until nothing fires.
//  single_pass: one lexicographic sweep with counts taken from the input
//            collection before any replacement.
enum class ReductionMode { fixpoint, single_pass };

struct PairReduction {
    int first = 0;
    int second = 0;
    int removed = 0;  // sets replaced by {first, second}
};

struct SingletonReduction {
    int element = 0;
    int removed = 0;
};

enum class KernelVerdict { kernel, no_solution_at_most_k };

struct KernelTrace {
    int k = 0;
    SetCollection input;  // the unmerged per-cell collection
    std::vector<PairReduction> pair_reductions;
    std::vector<SingletonReduction> singleton_reductions;
    SetCollection c1;
    SetCollection c2;
    KernelVerdict verdict = KernelVerdict::kernel;
};

struct PairStage {
    SetCollection c1;
    std::vector<PairReduction> reductions;
};

struct SingletonStage {
    SetCollection c2;
    std::vector<SingletonReduction> reductions;
};

// Replaces all sets containing a pair {i, j} by the single set {i, j} when
// the pair occurs in more than 6k of them. Pairs are tested in
// lexicographic order. Replacement sets are appended at the end.
PairStage reduce_pairs(const SetCollection& sets, int k, ReductionMode mode = ReductionMode::fixpoint);

// Replaces all sets containing s by {s} when s occurs in more than 6k^2 of
// them. Elements are tested in increasing id.
SingletonStage reduce_singletons(const SetCollection& sets, int k,
                                 ReductionMode mode = ReductionMode::fixpoint);

// Pair then singleton reduction on the unmerged demands; the verdict is
// no_solution_at_most_k exactly when |C2| > 6k^3.
KernelTrace kernelize(const CoverInstance& ci, int k, ReductionMode mode = ReductionMode::fixpoint);

// Co-occurrence counts of every pair inside the given sets, keyed by
// (i, j) with i < j. The OpenMP variant is checked against the serial one.
using PairCounts = std::map<std::pair<int, int>, int>;
PairCounts count_pairs_serial(const SetCollection& sets);
PairCounts count_pairs(const SetCollection& sets);

// Exact minimum hitting set by breadth-first search over bitmasks of hit
// sets; at most kMaxDpSets sets. Lexicographically smallest among the
// minimum covers found at the first layer reaching the full mask.
inline constexpr int kMaxDpSets = 24;
std::optional<std::vector<int>> hitting_set_dp(const SetCollection& sets);

struct FptResult {
    std::optional<Cover> cover;  // nullopt means no cover of size <= k
    KernelTrace trace;
};

// Kernelize, solve the kernel exactly (bitmask DP up to kMaxDpSets sets,
// branch and bound otherwise) and return a cover of size <= k if one exists.
FptResult solve_fpt(const CoverInstance& ci, int k, ReductionMode mode = ReductionMode::fixpoint);

}  // namespace lsc
