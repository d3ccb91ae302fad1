#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsc/arrangement.hpp"

namespace lsc {

using SetCollection = std::vector<std::vector<int>>;  // each inner set sorted

enum class TargetMode { all_cells, rectangular_cells };

// Which segments may be chosen: all of them, or those of one orientation.
struct AllowedMode {
    std::optional<OrientationTag> orientation;

    static AllowedMode all() { return {}; }
    static AllowedMode one_orientation(OrientationTag tag) { return {std::move(tag)}; }
    bool allows(const Segment& s) const { return !orientation || s.orientation == *orientation; }
};

std::string to_string(TargetMode mode);
std::string to_string(const AllowedMode& mode);

struct DemandSet {
    int id = 0;
    std::vector<int> elements;
    std::vector<int> origin_cells;
    int multiplicity = 0;
};

struct CoverOptions {
    TargetMode target = TargetMode::all_cells;
    AllowedMode allowed;
    // Only meaningful for all_cells; the unbounded cell is a target by default.
    bool include_unbounded = true;
};

// Hitting-set view of an arrangement: ground = allowed segment ids, one
// demand per target cell. `demands` merges identical element sets (ordered by
// first origin cell); `unmerged` keeps one set per target cell, in cell order.
struct CoverInstance {
    int num_segments = 0;
    std::vector<int> ground;
    std::vector<DemandSet> demands;
    SetCollection unmerged;
    std::vector<int> unmerged_cells;
    CoverOptions options;

    SetCollection merged_sets() const;
};

struct Cover {
    std::vector<int> chosen;  // sorted

    int size() const { return static_cast<int>(chosen.size()); }
    friend bool operator==(const Cover&, const Cover&) = default;
};

// Throws Infeasible(cell) naming the first target cell without an allowed
// covering segment.
CoverInstance to_cover_instance(const Arrangement& arr, const CoverOptions& options = {});

// Abstract instance straight from demand sets (one per pseudo-cell, cell id =
// position). Useful where no geometry is involved.
CoverInstance from_sets(const SetCollection& sets, int num_segments);

bool is_feasible(const CoverInstance& ci, const Cover& c);
bool hits_all(const SetCollection& sets, const std::vector<int>& chosen);

}  // namespace lsc
