#include "lsc/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace lsc {

namespace {

// Incremental validity check for rejection sampling.
class Builder {
public:
    bool try_add(const Segment& t) {
        if (t.a == t.b) return false;
        std::vector<Point> hits;
        for (const auto& s : segs_) {
            Intersection x = intersect(s, t);
            if (x.kind == Intersection::Kind::overlap) return false;
            if (x.is_point()) hits.push_back(x.point);
        }
        std::sort(hits.begin(), hits.end());
        if (std::adjacent_find(hits.begin(), hits.end()) != hits.end()) return false;
        for (const auto& p : hits)
            if (shared_.count(p)) return false;
        shared_.insert(hits.begin(), hits.end());
        segs_.push_back(t);
        return true;
    }

    int size() const { return static_cast<int>(segs_.size()); }

    Instance finish(InstanceMetadata meta) { return validate(segs_, std::move(meta)); }

private:
    std::vector<Segment> segs_;
    std::set<Point> shared_;
};

template <typename Draw>
Instance sample(int n, std::uint64_t seed, int max_attempts, InstanceMetadata meta, Draw draw) {
    if (n < 0) throw std::invalid_argument("negative segment count");
    std::mt19937_64 rng(seed);
    Builder b;
    int failures = 0;
    while (b.size() < n && failures < max_attempts) {
        if (b.try_add(draw(rng, b.size())))
            failures = 0;
        else
            ++failures;
    }
    return b.finish(std::move(meta));
}

}  // namespace

Instance random_axis_parallel(int n, long coord_max, std::uint64_t seed, long min_length, int max_attempts) {
    if (coord_max < 1) throw std::invalid_argument("coord_max must be >= 1");
    if (min_length < 1 || min_length > coord_max) throw std::invalid_argument("min_length must be in [1, coord_max]");
    InstanceMetadata meta{"random-ap-n" + std::to_string(n) + "-s" + std::to_string(seed), "random-axis-parallel"};
    return sample(n, seed, max_attempts, meta, [&](std::mt19937_64& rng, int id) {
        std::uniform_int_distribution<long> coord(0, coord_max);
        long fixed = coord(rng);
        std::uniform_int_distribution<long> length(min_length, coord_max);
        long len = length(rng);
        long lo = std::uniform_int_distribution<long>(0, coord_max - len)(rng);
        long hi = lo + len;
        bool horizontal = (rng() & 1) == 0;
        return horizontal ? Segment(id, Point(lo, fixed), Point(hi, fixed))
                          : Segment(id, Point(fixed, lo), Point(fixed, hi));
    });
}

Instance random_general(int n, long coord_max, std::uint64_t seed, int max_attempts) {
    if (coord_max < 1) throw std::invalid_argument("coord_max must be >= 1");
    InstanceMetadata meta{"random-gen-n" + std::to_string(n) + "-s" + std::to_string(seed), "random-general"};
    return sample(n, seed, max_attempts, meta, [&](std::mt19937_64& rng, int id) {
        std::uniform_int_distribution<long> coord(0, coord_max);
        long x1 = coord(rng), y1 = coord(rng), x2 = coord(rng), y2 = coord(rng);
        return Segment(id, Point(x1, y1), Point(x2, y2));
    });
}

Instance grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
    std::vector<RawSegment> raw;
    for (long r = 0; r < rows; ++r) raw.push_back({-1, r, cols, r});
    for (long c = 0; c < cols; ++c) raw.push_back({c, -1, c, rows});
    return validate_raw(raw, {"grid-" + std::to_string(rows) + "x" + std::to_string(cols), "grid"});
}

Instance triple_tight() {
    // s1 = y 0, s2 = x 4, s3 = x 8 (in the upper half), with chains of
    // auxiliary segments cutting the complement of s1 u s2 u s3 into six
    // cells that each meet all three: the two boxes between s2 and s3, the
    // region over the left arm wrapping across the tops, the region under
    // the right arm, the one wrapping from s3's right side around the right
    // end of s1 to the lower part of s2, and the unbounded rest.
    std::vector<RawSegment> raw = {
        {2, 0, 14, 0},   // s1
        {5, -8, 5, 8},   // s2
        {11, -8, 11, 8}, // s3
        {5, 2, 11, 2},   // lid of the upper middle box
        {5, -2, 11, -2}, // lid of the lower middle box
        {5, 6, 11, 6},   // separates the upper middle region
        // chain from s1's left end over both tops to s3's right side
        {2, 0, 2, 10},
        {2, 10, 13, 10},
        {13, 10, 13, 7},
        {13, 7, 11, 7},
        // chain from s3's right side, around everything, to s2's left side
        {11, 4, 16, 4},
        {16, 4, 16, -11},
        {16, -11, 3, -11},
        {3, -11, 3, -6},
        {3, -6, 5, -6},
        // chain from s1's right end under s3 to s2's right side
        {14, 0, 14, -9},
        {14, -9, 7, -9},
        {7, -9, 7, -5},
        {7, -5, 5, -5},
    };
    return validate_raw(raw, {"triple-tight", "triple-tight"});
}

}  // namespace lsc
