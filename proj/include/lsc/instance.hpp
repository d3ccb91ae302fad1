#pragma once

#include <string>
#include <vector>

#include "lsc/geometry.hpp"

namespace lsc {

struct InstanceMetadata {
    std::string name;
    std::string source;

    friend bool operator==(const InstanceMetadata&, const InstanceMetadata&) = default;
};

// A validated set of segments: pairwise non-overlapping, no point on three or
// more segments, ids equal to positions 0..n-1. Only `validate` builds one.
class Instance {
public:
    Instance() = default;

    const std::vector<Segment>& segments() const { return segments_; }
    const Segment& segment(int id) const { return segments_.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(segments_.size()); }
    bool axis_parallel() const;

    InstanceMetadata metadata;

    friend bool operator==(const Instance& a, const Instance& b);
    friend Instance validate(std::vector<Segment> raw, InstanceMetadata meta);

private:
    std::vector<Segment> segments_;
};

// Checks, in order: degenerate segments, duplicates, overlapping pairs, and
// general position. Segment ids are reassigned to list positions. Throws
// DegenerateSegment, DuplicateSegment, OverlapViolation or
// GeneralPositionViolation.
Instance validate(std::vector<Segment> raw, InstanceMetadata meta = {});

// Convenience for integer endpoints.
struct RawSegment {
    long x1, y1, x2, y2;
};
Instance validate_raw(const std::vector<RawSegment>& raw, InstanceMetadata meta = {});

}  // namespace lsc
