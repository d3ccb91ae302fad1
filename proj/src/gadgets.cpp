#include "lsc/gadgets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lsc/arrangement.hpp"
#include "lsc/error.hpp"

namespace lsc {

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

bool Graph::is_vertex_cover(const std::vector<int>& vertices) const {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : vertices) in.at(static_cast<std::size_t>(v)) = 1;
    return std::all_of(edges.begin(), edges.end(), [&](auto e) { return in[e.first] || in[e.second]; });
}

bool Graph::connected() const {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edges");
    Graph g{n, std::move(edges)};
    auto deg = g.degrees();
    for (int v = 0; v < n; ++v)
        if (deg[v] > 3) throw DegreeViolation(v, deg[v]);
    return g;
}

VertexCover vc_brute_force(const Graph& g) {
    if (g.n > 20) throw TooLarge("vertex cover brute force supports at most 20 vertices");
    for (int size = 0; size <= g.n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (g.is_vertex_cover(pick)) return {size, pick};
            int i = size - 1;
            while (i >= 0 && pick[i] == g.n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {g.n, {}};  // unreachable: the full vertex set is a cover
}

Graph random_max_deg3(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : candidates) {
        if (deg[a] >= 3 || deg[b] >= 3) continue;
        if (rng() & 1) {
            edges.emplace_back(a, b);
            ++deg[a];
            ++deg[b];
        }
    }
    return make_graph(n, std::move(edges));
}

std::string to_string(const SegmentRole& role) {
    using K = SegmentRole::Kind;
    switch (role.kind) {
        case K::horizontal: return "H " + std::to_string(role.i);
        case K::vertical: return "V " + std::to_string(role.i);
        case K::connector: return "C " + std::to_string(role.i);
        case K::small_connector: return "S " + std::to_string(role.i) + " " + std::to_string(role.j);
        case K::edge:
            return "E " + std::to_string(role.i) + " " + std::to_string(role.j) + " " + std::string(1, role.axis);
        case K::blocker: return "B";
    }
    return "B";
}

SegmentRole parse_role(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    SegmentRole r;
    using K = SegmentRole::Kind;
    if (tag == "H") r.kind = K::horizontal;
    else if (tag == "V") r.kind = K::vertical;
    else if (tag == "C") r.kind = K::connector;
    else if (tag == "S") r.kind = K::small_connector;
    else if (tag == "E") r.kind = K::edge;
    else if (tag == "B") return r;
    else throw std::invalid_argument("unknown role '" + text + "'");
    if (!(in >> r.i)) throw std::invalid_argument("role missing index: '" + text + "'");
    if (r.kind == K::small_connector || r.kind == K::edge)
        if (!(in >> r.j)) throw std::invalid_argument("role missing second index: '" + text + "'");
    if (r.kind == K::edge)
        if (!(in >> r.axis) || (r.axis != 'h' && r.axis != 'v'))
            throw std::invalid_argument("edge role needs axis h or v: '" + text + "'");
    return r;
}

int GadgetLayout::find(SegmentRole::Kind kind, int i, int j, char axis) const {
    for (std::size_t s = 0; s < roles.size(); ++s) {
        const auto& r = roles[s];
        if (r.kind == kind && r.i == i && (j < 0 || r.j == j) && (axis == 0 || r.axis == axis))
            return static_cast<int>(s);
    }
    return -1;
}

namespace {

// Grid step: all coordinates are multiples of kUnit so a blocker fits
// strictly inside any cell.
constexpr long kUnit = 4;

struct Placed {
    RawSegment seg;
    SegmentRole role;
};

void place(std::vector<Placed>& out, long x1, long y1, long x2, long y2, SegmentRole role) {
    out.push_back({{x1 * kUnit, y1 * kUnit, x2 * kUnit, y2 * kUnit}, role});
}

Instance to_instance(const std::vector<Placed>& placed, const Graph& g) {
    std::vector<RawSegment> raw;
    for (const auto& p : placed) raw.push_back(p.seg);
    InstanceMetadata meta;
    meta.name = "gadget-n" + std::to_string(g.n) + "-m" + std::to_string(g.edges.size());
    meta.source = "gadget";
    return validate_raw(raw, meta);
}

bool guards(const SegmentRole& r) {
    return r.kind == SegmentRole::Kind::connector || r.kind == SegmentRole::Kind::edge;
}

std::vector<int> unguarded(const Arrangement& arr, const std::vector<SegmentRole>& roles) {
    std::vector<int> out;
    for (const Cell& c : arr.cells()) {
        if (!c.rectangular) continue;
        bool ok = std::any_of(c.covered_by.begin(), c.covered_by.end(), [&](int s) { return guards(roles[s]); });
        if (!ok) out.push_back(c.id);
    }
    return out;
}

}  // namespace

std::vector<int> unguarded_rectangular_cells(const GadgetLayout& layout) {
    return unguarded(build(layout.instance), layout.roles);
}

GadgetLayout build_gadget(const Graph& input) {
    Graph g = make_graph(input.n, input.edges);
    using K = SegmentRole::Kind;
    const long n = g.n;
    std::vector<Placed> placed;
    for (int i = 0; i < g.n; ++i) {
        const long b = 4L * i;
        place(placed, b + 2, b, 4 * n + 2, b, {K::horizontal, i, -1, 0});
        place(placed, b, -3, b, b - 1, {K::vertical, i, -1, 0});
        place(placed, b, b - 1, b + 3, b - 1, {K::connector, i, -1, 0});
        place(placed, b + 2, b - 1, b + 2, b, {K::small_connector, i, 1, 0});
        place(placed, b + 3, b - 1, b + 3, b, {K::small_connector, i, 2, 0});
        place(placed, b + 1, b - 2, b + 1, b - 1, {K::small_connector, i, 3, 0});
        place(placed, b, b - 2, b + 1, b - 2, {K::small_connector, i, 4, 0});
    }
    // Edge {i, j}, i < j: unit pair in the upper-right quadrant of V_j x H_i.
    for (auto [i, j] : g.edges) {
        const long x = 4L * j;
        const long y = 4L * i;
        place(placed, x, y + 1, x + 1, y + 1, {K::edge, i, j, 'h'});
        place(placed, x + 1, y, x + 1, y + 1, {K::edge, i, j, 'v'});
    }

    std::vector<SegmentRole> roles;
    for (const auto& p : placed) roles.push_back(p.role);
    Instance inst = to_instance(placed, g);
    while (true) {
        Arrangement arr = build(inst);
        auto bad = unguarded(arr, roles);
        if (bad.empty()) break;
        for (int c : bad) {
            auto poly = arr.cycle_points(arr.cell(c).boundary.front());
            Rational x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y;
            for (const auto& p : poly) {
                x0 = std::min(x0, p.x);
                x1 = std::max(x1, p.x);
                y0 = std::min(y0, p.y);
            }
            Rational mid = (x0 + x1) / 2;
            long xm = mid.get_num().get_si();
            long yb = y0.get_num().get_si();
            placed.push_back({{xm, yb + 1, xm, yb + 2}, {K::blocker, -1, -1, 0}});
            roles.push_back({K::blocker, -1, -1, 0});
        }
        inst = to_instance(placed, g);
    }
    return GadgetLayout{g, std::move(inst), std::move(roles)};
}

MapBackResult map_back(const GadgetLayout& layout, const CoverInstance& rect_instance, const Cover& cover) {
    if (!is_feasible(rect_instance, cover))
        throw InfeasibleCover("cover misses a rectangular cell of the gadget");
    using K = SegmentRole::Kind;
    std::set<int> kept;
    std::map<std::pair<int, int>, int> edge_hits;
    for (int s : cover.chosen) {
        const auto& r = layout.roles.at(static_cast<std::size_t>(s));
        switch (r.kind) {
            case K::horizontal:
            case K::vertical:
            case K::connector: kept.insert(s); break;
            case K::small_connector: kept.insert(layout.find(K::connector, r.i)); break;
            case K::edge: ++edge_hits[{r.i, r.j}]; break;
            case K::blocker: break;
        }
    }
    for (auto [edge, hits] : edge_hits) {
        auto [i, j] = edge;
        int h = layout.find(K::horizontal, i);
        int v = layout.find(K::vertical, j);
        if (hits >= 2) {
            kept.insert(h);
            kept.insert(v);
        } else if (!kept.count(h) && !kept.count(v)) {
            kept.insert(h);
        }
    }
    MapBackResult out;
    out.normalized.assign(kept.begin(), kept.end());
    if (!is_feasible(rect_instance, Cover{out.normalized}))
        throw std::logic_error("normalized cover is infeasible");
    std::set<int> vertices;
    for (int s : out.normalized) {
        const auto& r = layout.roles[static_cast<std::size_t>(s)];
        if (r.kind == K::horizontal || r.kind == K::vertical) vertices.insert(r.i);
    }
    out.vertices.assign(vertices.begin(), vertices.end());
    return out;
}

}  // namespace lsc
