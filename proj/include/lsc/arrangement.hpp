#pragma once

#include <array>
#include <vector>

#include "lsc/instance.hpp"

namespace lsc {

// Half-edge h and its twin are stored at indices 2e and 2e+1 for edge e;
// twin(h) == h ^ 1. A face lies to the left of each of its half-edges.
struct HalfEdge {
    int origin = -1;
    int next = -1;
    int face = -1;
    int segment = -1;
};

struct Cell {
    int id = -1;
    bool bounded = false;
    // One representative half-edge per boundary cycle. For bounded cells the
    // outer cycle comes first; the rest are boundaries of enclosed components.
    std::vector<int> boundary;
    std::vector<int> covered_by;  // sorted segment ids
    bool rectangular = false;
};

// Planar subdivision of a validated instance. Immutable after build.
class Arrangement {
public:
    const Instance& instance() const { return instance_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int id) const { return cells_.at(static_cast<std::size_t>(id)); }
    // incidence()[s] = sorted ids of the cells segment s covers
    const std::vector<std::vector<int>>& incidence() const { return incidence_; }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(half_edges_.size() / 2); }
    int num_cells() const { return static_cast<int>(cells_.size()); }
    int num_components() const { return components_; }
    int unbounded_cell() const { return num_cells() - 1; }

    static int twin(int h) { return h ^ 1; }
    int destination(int h) const { return half_edges_[static_cast<std::size_t>(twin(h))].origin; }

    // Half-edges of the cycle starting at h, in traversal order.
    std::vector<int> cycle(int h) const;
    // Vertex polygon of the cycle starting at h.
    std::vector<Point> cycle_points(int h) const;

    // Cell containing p. p must not lie on a segment, and no vertex may share
    // p's y-coordinate (the horizontal query ray must avoid vertices).
    int locate(const Point& p) const;

    friend Arrangement build(const Instance& inst);

private:
    Instance instance_;
    std::vector<Point> vertices_;  // lexicographically sorted
    std::vector<HalfEdge> half_edges_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> incidence_;
    int components_ = 0;
};

// Cell ids are canonical: bounded cells sorted by their lexicographically
// smallest boundary vertex (ties broken by the angular slot they occupy
// there), the unbounded cell last. Checks the Euler relation
// V - E + F = 1 + C and throws std::logic_error if it fails.
Arrangement build(const Instance& inst);

// Cells incident to every segment in ids; all cells for an empty set.
// Throws UnknownSegment.
std::vector<int> cells_covered_by_all(const Arrangement& arr, const std::vector<int>& ids);

// Signed area of a closed polygon (positive when counter-clockwise).
Rational signed_area(const std::vector<Point>& poly);

// Number of distinct intersecting pairs among three segments (0, 1 or 2 for
// axis-parallel input).
int internal_intersections(const Instance& inst, int a, int b, int c);

}  // namespace lsc

namespace lsc {

// Connected components of the union of segments, from pairwise intersection
// tests alone (independent of the half-edge structure).
int count_components(const Instance& inst);

}  // namespace lsc
