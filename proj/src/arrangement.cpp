#include "lsc/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "lsc/error.hpp"

namespace lsc {

namespace {

int half_plane(const Point& d) {
    return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1;
}

// Counter-clockwise angular order starting from the positive x-axis.
bool angle_less(const Point& a, const Point& b) {
    int ha = half_plane(a);
    int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return sgn(cross(a, b)) > 0;
}

bool same_direction(const Point& a, const Point& b) {
    return sgn(cross(a, b)) == 0 && sgn(a.x * b.x + a.y * b.y) > 0;
}

// Strict containment for a point known not to lie on the polygon boundary.
bool strictly_inside(const std::vector<Point>& poly, const Point& p) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct CycleInfo {
    int start = -1;
    Rational area;
    int min_vertex = -1;
    int component = -1;
};

}  // namespace

Rational signed_area(const std::vector<Point>& poly) {
    Rational twice(0);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        twice += a.x * b.y - a.y * b.x;
    }
    return twice / 2;
}

std::vector<int> Arrangement::cycle(int h) const {
    std::vector<int> out;
    int cur = h;
    do {
        out.push_back(cur);
        cur = half_edges_[static_cast<std::size_t>(cur)].next;
    } while (cur != h);
    return out;
}

std::vector<Point> Arrangement::cycle_points(int h) const {
    std::vector<Point> pts;
    for (int e : cycle(h)) pts.push_back(vertices_[static_cast<std::size_t>(half_edges_[e].origin)]);
    return pts;
}

int Arrangement::locate(const Point& p) const {
    for (const Point& v : vertices_)
        if (v.y == p.y) throw std::invalid_argument("query point shares y with a vertex");
    int best = -1;
    Rational best_x;
    for (std::size_t h = 0; h < half_edges_.size(); h += 2) {
        const Point& u = vertices_[static_cast<std::size_t>(half_edges_[h].origin)];
        const Point& v = vertices_[static_cast<std::size_t>(half_edges_[h + 1].origin)];
        if (u.y == v.y) continue;
        const Point& lo = u.y < v.y ? u : v;
        const Point& hi = u.y < v.y ? v : u;
        if (!(lo.y < p.y && p.y < hi.y)) continue;
        Rational x = lo.x + (p.y - lo.y) * (hi.x - lo.x) / (hi.y - lo.y);
        if (x == p.x) throw std::invalid_argument("query point lies on a segment");
        if (x < p.x && (best < 0 || x > best_x)) {
            best = static_cast<int>(h);
            best_x = x;
        }
    }
    if (best < 0) return unbounded_cell();
    // The downward half-edge has the query point on its left.
    int down = vertices_[static_cast<std::size_t>(half_edges_[best].origin)].y >
                       vertices_[static_cast<std::size_t>(half_edges_[best + 1].origin)].y
                   ? best
                   : best + 1;
    return half_edges_[static_cast<std::size_t>(down)].face;
}

Arrangement build(const Instance& inst) {
    Arrangement arr;
    arr.instance_ = inst;
    const auto& segs = inst.segments();
    const int n = inst.size();

    // Points on each segment: endpoints plus crossings.
    std::vector<std::vector<Point>> on_segment(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        on_segment[i].push_back(segs[i].a);
        on_segment[i].push_back(segs[i].b);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Intersection x = intersect(segs[i], segs[j]);
            if (x.is_point()) {
                on_segment[i].push_back(x.point);
                on_segment[j].push_back(x.point);
            }
        }

    std::map<Point, int> vertex_id;
    for (auto& pts : on_segment) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (const Point& p : pts) vertex_id.emplace(p, 0);
    }
    int next_id = 0;
    for (auto& [p, id] : vertex_id) {
        id = next_id++;
        arr.vertices_.push_back(p);
    }
    const int num_vertices = next_id;

    std::vector<Point> direction;
    for (int s = 0; s < n; ++s) {
        const auto& pts = on_segment[s];
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            int u = vertex_id.at(pts[k]);
            int v = vertex_id.at(pts[k + 1]);
            arr.half_edges_.push_back(HalfEdge{u, -1, -1, s});
            arr.half_edges_.push_back(HalfEdge{v, -1, -1, s});
            direction.emplace_back(pts[k + 1].x - pts[k].x, pts[k + 1].y - pts[k].y);
            direction.emplace_back(pts[k].x - pts[k + 1].x, pts[k].y - pts[k + 1].y);
        }
    }
    const int num_half = static_cast<int>(arr.half_edges_.size());

    // Rotation system: outgoing half-edges in counter-clockwise order.
    std::vector<std::vector<int>> outgoing(static_cast<std::size_t>(num_vertices));
    for (int h = 0; h < num_half; ++h) outgoing[arr.half_edges_[h].origin].push_back(h);
    std::vector<int> slot(static_cast<std::size_t>(num_half));
    for (auto& out : outgoing) {
        std::sort(out.begin(), out.end(),
                  [&](int a, int b) { return angle_less(direction[a], direction[b]); });
        for (std::size_t k = 0; k < out.size(); ++k) slot[out[k]] = static_cast<int>(k);
    }
    // next(h) is the clockwise neighbour of twin(h) around h's destination.
    for (int h = 0; h < num_half; ++h) {
        int t = Arrangement::twin(h);
        const auto& out = outgoing[arr.half_edges_[t].origin];
        int deg = static_cast<int>(out.size());
        arr.half_edges_[h].next = out[(slot[t] + deg - 1) % deg];
    }

    UnionFind uf(num_vertices);
    for (int h = 0; h < num_half; h += 2) uf.unite(arr.half_edges_[h].origin, arr.half_edges_[h + 1].origin);
    std::vector<int> component_of(static_cast<std::size_t>(num_vertices), -1);
    std::vector<int> component_min_vertex;
    for (int v = 0; v < num_vertices; ++v) {
        int r = uf.find(v);
        if (component_of[r] < 0) {
            component_of[r] = static_cast<int>(component_min_vertex.size());
            component_min_vertex.push_back(v);  // ids ascend, so first seen is smallest
        }
        component_of[v] = component_of[r];
    }
    arr.components_ = static_cast<int>(component_min_vertex.size());

    std::vector<CycleInfo> cycles;
    std::vector<int> cycle_of(static_cast<std::size_t>(num_half), -1);
    for (int h = 0; h < num_half; ++h) {
        if (cycle_of[h] >= 0) continue;
        CycleInfo info;
        info.start = h;
        int cur = h;
        std::vector<Point> poly;
        int min_v = num_vertices;
        do {
            cycle_of[cur] = static_cast<int>(cycles.size());
            int o = arr.half_edges_[cur].origin;
            poly.push_back(arr.vertices_[o]);
            min_v = std::min(min_v, o);
            cur = arr.half_edges_[cur].next;
        } while (cur != h);
        info.area = signed_area(poly);
        info.min_vertex = min_v;
        info.component = component_of[min_v];
        cycles.push_back(std::move(info));
    }

    // Positive cycles bound faces from outside; each component has exactly
    // one non-positive cycle, its outer boundary.
    std::vector<int> outer_cycles;
    std::vector<int> hole_of_component(static_cast<std::size_t>(arr.components_), -1);
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
        if (sgn(cycles[c].area) > 0) {
            outer_cycles.push_back(c);
        } else {
            int comp = cycles[c].component;
            if (hole_of_component[comp] >= 0)
                throw std::logic_error("component with two outer boundaries");
            hole_of_component[comp] = c;
        }
    }

    const int num_bounded = static_cast<int>(outer_cycles.size());
    std::vector<std::vector<Point>> outer_polys;
    outer_polys.reserve(outer_cycles.size());
    for (int c : outer_cycles) {
        std::vector<Point> poly;
        int cur = cycles[c].start;
        do {
            poly.push_back(arr.vertices_[arr.half_edges_[cur].origin]);
            cur = arr.half_edges_[cur].next;
        } while (cur != cycles[c].start);
        outer_polys.push_back(std::move(poly));
    }

    // Provisional faces: index f < num_bounded for outer_cycles[f], the
    // unbounded face at num_bounded.
    std::vector<std::vector<int>> face_cycles(static_cast<std::size_t>(num_bounded + 1));
    for (int f = 0; f < num_bounded; ++f) face_cycles[f].push_back(outer_cycles[f]);
    for (int comp = 0; comp < arr.components_; ++comp) {
        int hole = hole_of_component[comp];
        if (hole < 0) throw std::logic_error("component without an outer boundary");
        const Point& probe = arr.vertices_[component_min_vertex[comp]];
        int host = num_bounded;
        std::optional<Rational> host_area;
        for (int f = 0; f < num_bounded; ++f) {
            if (cycles[outer_cycles[f]].component == comp) continue;
            if (host_area && !(cycles[outer_cycles[f]].area < *host_area)) continue;
            if (strictly_inside(outer_polys[f], probe)) {
                host = f;
                host_area = cycles[outer_cycles[f]].area;
            }
        }
        face_cycles[host].push_back(hole);
    }

    // Canonical order.
    struct Key {
        int vertex;
        int slot;
    };
    std::vector<Key> keys(static_cast<std::size_t>(num_bounded));
    for (int f = 0; f < num_bounded; ++f) {
        int v = cycles[outer_cycles[f]].min_vertex;
        int best_slot = num_half;
        int cur = cycles[outer_cycles[f]].start;
        do {
            if (arr.half_edges_[cur].origin == v) best_slot = std::min(best_slot, slot[cur]);
            cur = arr.half_edges_[cur].next;
        } while (cur != cycles[outer_cycles[f]].start);
        keys[f] = Key{v, best_slot};
    }
    std::vector<int> order(static_cast<std::size_t>(num_bounded));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[a].vertex != keys[b].vertex ? keys[a].vertex < keys[b].vertex
                                                : keys[a].slot < keys[b].slot;
    });
    order.push_back(num_bounded);

    arr.incidence_.assign(static_cast<std::size_t>(n), {});
    for (int id = 0; id < static_cast<int>(order.size()); ++id) {
        int f = order[id];
        auto& holes = face_cycles[f];
        std::sort(holes.begin() + (f < num_bounded ? 1 : 0), holes.end(),
                  [&](int a, int b) { return cycles[a].min_vertex < cycles[b].min_vertex; });
        Cell cell;
        cell.id = id;
        cell.bounded = f < num_bounded;
        std::vector<int> segs_here;
        int axis_edges = 0;
        int corners = 0;
        int edge_count = 0;
        for (int c : holes) {
            cell.boundary.push_back(cycles[c].start);
            int cur = cycles[c].start;
            do {
                arr.half_edges_[cur].face = id;
                int s = arr.half_edges_[cur].segment;
                segs_here.push_back(s);
                if (segs[s].axis_parallel()) ++axis_edges;
                if (!same_direction(direction[cur], direction[arr.half_edges_[cur].next])) ++corners;
                ++edge_count;
                cur = arr.half_edges_[cur].next;
            } while (cur != cycles[c].start);
        }
        std::sort(segs_here.begin(), segs_here.end());
        segs_here.erase(std::unique(segs_here.begin(), segs_here.end()), segs_here.end());
        cell.covered_by = segs_here;
        cell.rectangular = cell.bounded && cell.boundary.size() == 1 && axis_edges == edge_count &&
                           corners == 4 && segs_here.size() == 4;
        for (int s : segs_here) arr.incidence_[s].push_back(id);
        arr.cells_.push_back(std::move(cell));
    }

    const long lhs = static_cast<long>(num_vertices) - arr.num_edges() + arr.num_cells();
    if (lhs != 1 + arr.components_)
        throw std::logic_error("Euler relation violated: V-E+F=" + std::to_string(lhs) +
                               ", 1+C=" + std::to_string(1 + arr.components_));
    return arr;
}

std::vector<int> cells_covered_by_all(const Arrangement& arr, const std::vector<int>& ids) {
    const int n = arr.instance().size();
    for (int s : ids)
        if (s < 0 || s >= n) throw UnknownSegment(s);
    std::vector<int> out(static_cast<std::size_t>(arr.num_cells()));
    std::iota(out.begin(), out.end(), 0);
    for (int s : ids) {
        std::vector<int> next;
        const auto& inc = arr.incidence()[s];
        std::set_intersection(out.begin(), out.end(), inc.begin(), inc.end(), std::back_inserter(next));
        out.swap(next);
    }
    return out;
}

int internal_intersections(const Instance& inst, int a, int b, int c) {
    int count = 0;
    const int ids[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (intersect(inst.segment(ids[i]), inst.segment(ids[j])).kind != Intersection::Kind::empty)
                ++count;
    return count;
}

}  // namespace lsc

namespace lsc {

int count_components(const Instance& inst) {
    const int n = inst.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersect(inst.segment(i), inst.segment(j)).kind != Intersection::Kind::empty) {
                int a = find(i), b = find(j);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
    return components;
}

}  // namespace lsc
