#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lsc/cover_model.hpp"
#include "lsc/instance.hpp"

namespace lsc {

// Simple undirected graph with max degree 3, edges stored as (i, j), i < j,
// sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> degrees() const;
    bool is_vertex_cover(const std::vector<int>& vertices) const;
    bool connected() const;
};

// Normalises and checks the edge list. Throws DegreeViolation, or
// std::invalid_argument for self-loops, parallel edges and bad endpoints.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct VertexCover {
    int size = 0;
    std::vector<int> vertices;
};

// Minimum vertex cover by subset enumeration in increasing size; the
// witness is the lexicographically smallest minimum cover. Throws TooLarge
// for n > 20.
VertexCover vc_brute_force(const Graph& g);

// Random graph with max degree 3: candidate pairs in shuffled order, each
// accepted with probability 1/2 while both endpoints have spare degree.
Graph random_max_deg3(int n, std::uint64_t seed);

struct SegmentRole {
    enum class Kind { horizontal, vertical, connector, small_connector, edge, blocker };
    Kind kind = Kind::blocker;
    int i = -1;     // vertex (or lower edge endpoint)
    int j = -1;     // upper edge endpoint, or small connector index 1..4
    char axis = 0;  // 'h' or 'v' for edge segments

    friend bool operator==(const SegmentRole&, const SegmentRole&) = default;
};

std::string to_string(const SegmentRole& role);
SegmentRole parse_role(const std::string& text);

struct GadgetLayout {
    Graph graph;
    Instance instance;
    std::vector<SegmentRole> roles;  // indexed by segment id

    int find(SegmentRole::Kind kind, int i, int j = -1, char axis = 0) const;
};

// Vertex-cover-to-covering construction on an integer grid. Vertex u_i gets
// H_i, V_i, a connector C_i and four small connectors forming two
// rectangular cells; each edge {i, j} (i < j) gets a horizontal and a
// vertical unit segment closing a rectangular cell against V_j and H_i.
// Any other rectangular cell receives a blocker segment in its interior,
// repeated until every rectangular cell touches a connector or an edge
// segment. Throws DegreeViolation.
GadgetLayout build_gadget(const Graph& g);

// Rectangular cells of the layout that touch neither a connector nor an
// edge segment. Empty for every layout build_gadget returns.
std::vector<int> unguarded_rectangular_cells(const GadgetLayout& layout);

struct MapBackResult {
    std::vector<int> normalized;  // the dominated cover made of H, V and C only
    std::vector<int> vertices;    // the vertex cover read off it
};

// Replaces small connectors by their connector, edge segments by the H/V
// segments that dominate them, drops blockers, and reads off
// M = { u_i : H_i or V_i chosen }. Throws InfeasibleCover when `cover` does
// not cover every rectangular cell.
MapBackResult map_back(const GadgetLayout& layout, const CoverInstance& rect_instance, const Cover& cover);

}  // namespace lsc
