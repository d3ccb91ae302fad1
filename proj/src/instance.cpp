#include "lsc/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lsc/error.hpp"

namespace lsc {

bool Instance::axis_parallel() const {
    return std::all_of(segments_.begin(), segments_.end(),
                       [](const Segment& s) { return s.axis_parallel(); });
}

bool operator==(const Instance& a, const Instance& b) {
    if (a.metadata != b.metadata || a.segments_.size() != b.segments_.size()) return false;
    for (std::size_t i = 0; i < a.segments_.size(); ++i) {
        const Segment& s = a.segments_[i];
        const Segment& t = b.segments_[i];
        if (s.id != t.id || s.a != t.a || s.b != t.b) return false;
    }
    return true;
}

Instance validate(std::vector<Segment> raw, InstanceMetadata meta) {
    const int n = static_cast<int>(raw.size());
    for (int i = 0; i < n; ++i) {
        raw[i].id = i;
        if (raw[i].a == raw[i].b) throw DegenerateSegment(i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Segment& s = raw[i];
            const Segment& t = raw[j];
            if ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a))
                throw DuplicateSegment(i, j);
        }

    std::map<Point, std::set<int>> shared;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Intersection x = intersect(raw[i], raw[j]);
            if (x.kind == Intersection::Kind::overlap) throw OverlapViolation(i, j);
            if (x.is_point()) {
                auto& ids = shared[x.point];
                ids.insert(i);
                ids.insert(j);
            }
        }
    for (const auto& [p, ids] : shared)
        if (ids.size() >= 3)
            throw GeneralPositionViolation(to_string(p), std::vector<int>(ids.begin(), ids.end()));

    Instance inst;
    inst.segments_ = std::move(raw);
    inst.metadata = std::move(meta);
    return inst;
}

Instance validate_raw(const std::vector<RawSegment>& raw, InstanceMetadata meta) {
    std::vector<Segment> segs;
    segs.reserve(raw.size());
    for (const auto& r : raw)
        segs.emplace_back(static_cast<int>(segs.size()), Point(r.x1, r.y1), Point(r.x2, r.y2));
    return validate(std::move(segs), std::move(meta));
}

}  // namespace lsc
