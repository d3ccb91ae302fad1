#include "lsc/cover_model.hpp"

#include <algorithm>
#include <map>

#include "lsc/error.hpp"

namespace lsc {

std::string to_string(TargetMode mode) {
    return mode == TargetMode::all_cells ? "all" : "rect";
}

std::string to_string(const AllowedMode& mode) {
    return mode.orientation ? "orient:" + to_string(*mode.orientation) : "all";
}

SetCollection CoverInstance::merged_sets() const {
    SetCollection out;
    out.reserve(demands.size());
    for (const auto& d : demands) out.push_back(d.elements);
    return out;
}

CoverInstance to_cover_instance(const Arrangement& arr, const CoverOptions& options) {
    CoverInstance ci;
    ci.options = options;
    const auto& inst = arr.instance();
    ci.num_segments = inst.size();
    for (const auto& s : inst.segments())
        if (options.allowed.allows(s)) ci.ground.push_back(s.id);

    std::map<std::vector<int>, int> index;
    for (const Cell& cell : arr.cells()) {
        bool target = options.target == TargetMode::all_cells
                          ? (cell.bounded || options.include_unbounded)
                          : cell.rectangular;
        if (!target) continue;
        std::vector<int> elems;
        for (int s : cell.covered_by)
            if (options.allowed.allows(inst.segment(s))) elems.push_back(s);
        if (elems.empty()) throw Infeasible(cell.id);
        ci.unmerged.push_back(elems);
        ci.unmerged_cells.push_back(cell.id);
        auto [it, fresh] = index.emplace(elems, static_cast<int>(ci.demands.size()));
        if (fresh) {
            DemandSet d;
            d.id = it->second;
            d.elements = std::move(elems);
            ci.demands.push_back(std::move(d));
        }
        DemandSet& d = ci.demands[static_cast<std::size_t>(it->second)];
        d.origin_cells.push_back(cell.id);
        ++d.multiplicity;
    }
    return ci;
}

CoverInstance from_sets(const SetCollection& sets, int num_segments) {
    CoverInstance ci;
    ci.num_segments = num_segments;
    for (int s = 0; s < num_segments; ++s) ci.ground.push_back(s);
    std::map<std::vector<int>, int> index;
    for (std::size_t c = 0; c < sets.size(); ++c) {
        std::vector<int> elems = sets[c];
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        for (int e : elems)
            if (e < 0 || e >= num_segments) throw UnknownSegment(e);
        if (elems.empty()) throw Infeasible(static_cast<int>(c));
        ci.unmerged.push_back(elems);
        ci.unmerged_cells.push_back(static_cast<int>(c));
        auto [it, fresh] = index.emplace(elems, static_cast<int>(ci.demands.size()));
        if (fresh) {
            DemandSet d;
            d.id = it->second;
            d.elements = std::move(elems);
            ci.demands.push_back(std::move(d));
        }
        DemandSet& d = ci.demands[static_cast<std::size_t>(it->second)];
        d.origin_cells.push_back(static_cast<int>(c));
        ++d.multiplicity;
    }
    return ci;
}

bool hits_all(const SetCollection& sets, const std::vector<int>& chosen) {
    return std::all_of(sets.begin(), sets.end(), [&](const std::vector<int>& set) {
        return std::any_of(set.begin(), set.end(), [&](int e) {
            return std::binary_search(chosen.begin(), chosen.end(), e);
        });
    });
}

bool is_feasible(const CoverInstance& ci, const Cover& c) {
    std::vector<int> chosen = c.chosen;
    std::sort(chosen.begin(), chosen.end());
    return std::all_of(ci.demands.begin(), ci.demands.end(), [&](const DemandSet& d) {
        return std::any_of(d.elements.begin(), d.elements.end(), [&](int e) {
            return std::binary_search(chosen.begin(), chosen.end(), e);
        });
    });
}

}  // namespace lsc
