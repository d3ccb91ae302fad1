// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lsc/error.hpp"
#include "lsc/gadgets.hpp"
#include "lsc/generate.hpp"
#include "lsc/io.hpp"
#include "lsc/kernel.hpp"
#include "lsc/report.hpp"
#include "lsc/solvers.hpp"
#include "lsc/triple_coverage.hpp"
#include "support/oracles.hpp"

using namespace lsc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& run) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(start));
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << o.detail << "; "
              << secs << "]" << std::endl;
    if (!o.pass) ++failures;
}

// 200 axis-parallel instances, n <= 12, coordinates in [0, 32].
std::vector<Instance> axis_parallel_suite() {
    std::vector<Instance> out;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        long coord = seed % 3 == 0 ? 8 : seed % 3 == 1 ? 16 : 32;
        out.push_back(random_axis_parallel(n, coord, 1000 + seed, seed % 2 ? coord / 2 : 1));
    }
    return out;
}

std::vector<Instance> general_suite() {
    std::vector<Instance> out;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        out.push_back(random_general(n, 32, 5000 + seed));
    }
    return out;
}

// Mixed instances for the kernel criteria: random ones of varying density
// plus grids, where the reduction rules actually fire.
std::vector<Instance> kernel_suite() {
    std::vector<Instance> out;
    for (std::uint64_t seed = 0; out.size() < 80; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        out.push_back(seed % 4 == 3 ? random_general(n, 10, 7000 + seed) : random_axis_parallel(n, 8, 7000 + seed, 4));
    }
    for (int rows = 1; rows <= 3 && out.size() < 100; ++rows)
        for (int cols = 1; rows + cols <= 12 && out.size() < 100; ++cols) out.push_back(grid(rows, cols));
    return out;
}

std::vector<Graph> acceptance_graphs() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n)
        for (Graph& g : oracle::connected_max_deg3_graphs(n)) out.push_back(std::move(g));
    return out;
}

CoverInstance rect_instance(const Instance& inst) {
    CoverOptions o;
    o.target = TargetMode::rectangular_cells;
    return to_cover_instance(build(inst), o);
}

std::string fmt(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3f", v);
    return b;
}

}  // namespace

int main() {
    const auto ap = axis_parallel_suite();
    const auto gen = general_suite();

    report(1, "arrangement correctness (Euler relation, point-sampling membership)", [&] {
        auto start = Clock::now();
        int euler_bad = 0, sample_bad = 0, samples = 0, bounded = 0;
        std::vector<const Instance*> all;
        for (const auto& i : ap) all.push_back(&i);
        for (const auto& i : gen) all.push_back(&i);
        std::uint64_t seed = 0;
        for (const Instance* inst : all) {
            Arrangement arr = build(*inst);
            if (arr.num_vertices() - arr.num_edges() + arr.num_cells() != 1 + count_components(*inst)) ++euler_bad;
            for (const Cell& c : arr.cells()) bounded += c.bounded;
            if (arr.num_vertices() == 0) continue;
            std::mt19937_64 rng(++seed);
            for (int t = 0; t < 40; ++t) {
                Point p = oracle::sample_point(arr, rng);
                int cell = arr.locate(p);
                auto claims = oracle::bounded_cells_claiming(arr, p);
                bool ok = arr.cell(cell).bounded ? claims == std::vector<int>{cell} : claims.empty();
                auto hit = oracle::first_hit_leftward(*inst, p);
                const auto& cov = arr.cell(cell).covered_by;
                ok = ok && (hit ? std::binary_search(cov.begin(), cov.end(), *hit) : cell == arr.unbounded_cell());
                sample_bad += !ok;
                ++samples;
            }
        }
        double secs = seconds_since(start);
        Outcome o;
        o.pass = euler_bad == 0 && sample_bad == 0 && secs < 60 && ap.size() == 200 && gen.size() == 50;
        o.detail = std::to_string(all.size()) + " instances, " + std::to_string(bounded) + " bounded cells, " +
                   std::to_string(samples) + " samples, euler violations " + std::to_string(euler_bad) +
                   ", membership violations " + std::to_string(sample_bad);
        return o;
    });

    report(2, "triple coverage at most 6, per-case bounds 2/4/6, tight witness", [&] {
        int violations = 0;
        std::array<int, 3> seen{};
        for (const auto& inst : ap) {
            if (inst.size() < 3) continue;
            Arrangement arr = build(inst);
            TripleBuckets b = triple_coverage_by_intersections(arr);
            TripleCoverage t = triple_coverage_max(arr);
            violations += b.max_count[0] > 2;
            violations += b.max_count[1] > 4;
            violations += b.max_count[2] > 6;
            violations += t.max_count > 6;
            violations += b.triples[3] != 0;
            for (int x = 0; x < 3; ++x) seen[x] = std::max(seen[x], b.max_count[x]);
        }
        TripleCoverage tight = triple_coverage_max(build(triple_tight()));
        Outcome o;
        o.pass = violations == 0 && tight.max_count == 6;
        o.detail = "violations " + std::to_string(violations) + ", observed maxima " + std::to_string(seen[0]) + "/" +
                   std::to_string(seen[1]) + "/" + std::to_string(seen[2]) + ", triple-tight " +
                   std::to_string(tight.max_count);
        return o;
    });

    const auto ks = kernel_suite();

    report(3, "kernel preserves optimum; fpt(k=OPT) optimal, fpt(k=OPT-1) none", [&] {
        int violations = 0, reductions = 0;
        for (const auto& inst : ks) {
            CoverInstance ci = to_cover_instance(build(inst));
            int opt = oracle::min_cover_size(ci.unmerged, ci.num_segments).value();
            for (int k : {opt, opt + 1}) {
                if (k < 1) continue;
                KernelTrace t = kernelize(ci, k);
                reductions += static_cast<int>(t.pair_reductions.size() + t.singleton_reductions.size());
                violations += oracle::min_cover_size(t.c1, ci.num_segments) != opt;
                violations += oracle::min_cover_size(t.c2, ci.num_segments) != opt;
            }
            FptResult at = solve_fpt(ci, opt);
            violations += !at.cover || at.cover->size() != opt || !is_feasible(ci, *at.cover);
            if (opt >= 1) violations += solve_fpt(ci, opt - 1).cover.has_value();
        }
        Outcome o;
        o.pass = violations == 0 && ks.size() == 100;
        o.detail = std::to_string(ks.size()) + " instances, " + std::to_string(reductions) +
                   " reductions applied, violations " + std::to_string(violations);
        return o;
    });

    report(4, "kernel size |C2| <= 6k^3 when a size-k cover exists", [&] {
        int violations = 0, checks = 0, largest = 0;
        for (const auto& inst : ks) {
            CoverInstance ci = to_cover_instance(build(inst));
            int opt = oracle::min_cover_size(ci.unmerged, ci.num_segments).value();
            for (int k = std::max(1, opt); k <= std::max(1, opt) + 2; ++k) {
                KernelTrace t = kernelize(ci, k);
                ++checks;
                largest = std::max(largest, static_cast<int>(t.c2.size()));
                violations += t.verdict != KernelVerdict::kernel;
                violations += static_cast<long long>(t.c2.size()) > 6LL * k * k * k;
            }
        }
        Outcome o;
        o.pass = violations == 0;
        o.detail = std::to_string(checks) + " (instance, k) pairs, largest |C2| " + std::to_string(largest) +
                   ", violations " + std::to_string(violations);
        return o;
    });

    const auto graphs = acceptance_graphs();
    std::vector<GadgetLayout> layouts;
    for (const Graph& g : graphs) layouts.push_back(build_gadget(g));

    report(5, "gadget optimum equals n + VC and is at most 5 VC", [&] {
        auto start = Clock::now();
        int violations = 0, audit = 0;
        for (const GadgetLayout& layout : layouts) {
            const Graph& g = layout.graph;
            int vc = vc_brute_force(g).size;
            int opt = solve_exact(rect_instance(layout.instance)).size();
            violations += opt != g.n + vc;
            if (!g.edges.empty()) violations += opt > 5 * vc;
            audit += !unguarded_rectangular_cells(layout).empty();
        }
        Outcome o;
        o.pass = violations == 0 && audit == 0 && graphs.size() >= 30 && seconds_since(start) < 300;
        o.detail = std::to_string(graphs.size()) + " connected graphs (n <= 6), violations " +
                   std::to_string(violations) + ", audit failures " + std::to_string(audit);
        return o;
    });

    report(6, "map-back yields a vertex cover with |M| - VC <= |y| - OPT", [&] {
        int violations = 0, samples = 0;
        std::mt19937_64 rng(2024);
        for (const GadgetLayout& layout : layouts) {
            CoverInstance ci = rect_instance(layout.instance);
            int vc = vc_brute_force(layout.graph).size;
            Cover best = solve_exact(ci);
            int opt = best.size();
            std::vector<Cover> ys{best, solve_greedy(ci)};
            for (int t = 0; t < 20; ++t) ys.push_back(Cover{oracle::random_feasible_cover(ci, rng)});
            for (const Cover& y : ys) {
                MapBackResult m = map_back(layout, ci, y);
                ++samples;
                violations += !layout.graph.is_vertex_cover(m.vertices);
                violations += static_cast<int>(m.vertices.size()) - vc > y.size() - opt;
            }
        }
        Outcome o;
        o.pass = violations == 0;
        o.detail = std::to_string(samples) + " covers over " + std::to_string(layouts.size()) +
                   " gadgets, violations " + std::to_string(violations);
        return o;
    });

    report(7, "local search (k=2, one orientation): feasible, locally optimal, monotone", [&] {
        int violations = 0, instances = 0, at_opt = 0, over_twice_k3 = 0, above_opt_k1 = 0;
        double ratio_sum = 0, ratio_max = 0;
        for (std::uint64_t seed = 0; instances < 100; ++seed) {
            Instance inst = random_axis_parallel(4 + static_cast<int>(seed % 7), 12, 9000 + seed, 6);
            CoverOptions opts;
            opts.allowed = AllowedMode::one_orientation(seed % 2 ? OrientationTag::vertical()
                                                                 : OrientationTag::horizontal());
            CoverInstance ci;
            try {
                ci = to_cover_instance(build(inst), opts);
            } catch (const Infeasible&) {
                continue;
            }
            ++instances;
            LocalSearchParams p;
            p.k = 2;
            LocalSearchResult r = local_search(ci, p);
            violations += !is_feasible(ci, r.cover);
            violations += !oracle::locally_optimal(ci, r.cover.chosen, 2);
            violations += r.cap_exceeded;
            for (std::size_t i = 1; i < r.size_history.size(); ++i)
                violations += r.size_history[i] >= r.size_history[i - 1];
            int opt = solve_exact(ci).size();
            violations += r.cover.size() < opt;
            double ratio = static_cast<double>(r.cover.size()) / opt;
            ratio_sum += ratio;
            ratio_max = std::max(ratio_max, ratio);
            at_opt += r.cover.size() == opt;
            p.k = 1;
            above_opt_k1 += local_search(ci, p).cover.size() > opt;
            p.k = 3;
            over_twice_k3 += local_search(ci, p).cover.size() > 2 * opt;
        }
        Outcome o;
        o.pass = violations == 0;
        o.detail = std::to_string(instances) + " instances, violations " + std::to_string(violations) +
                   ", ratio to OPT mean " + fmt(ratio_sum / instances) + " max " + fmt(ratio_max) + ", optimal in " +
                   std::to_string(at_opt) + ", k=1 above OPT in " + std::to_string(above_opt_k1) +
                   ", k=3 above 2 OPT in " + std::to_string(over_twice_k3);
        return o;
    });

    report(8, "deterministic reports and parse/emit round trip", [&] {
        int mismatches = 0, runs = 0;
        std::vector<Instance> suite = ap;
        suite.insert(suite.end(), gen.begin(), gen.end());
        suite.insert(suite.end(), ks.begin(), ks.end());
        suite.push_back(triple_tight());
        for (const auto& layout : layouts) suite.push_back(layout.instance);
        for (const Instance& inst : suite) {
            std::string text = emit_instance(inst);
            Instance back = parse_instance_text(text);
            mismatches += !(back == inst);
            mismatches += emit_instance(back) != text;
            for (SolverKind s : {SolverKind::exact, SolverKind::greedy, SolverKind::local, SolverKind::fpt}) {
                SolveRequest req;
                req.solver = s;
                req.seed = 7;
                if (s == SolverKind::fpt) req.k = std::max(1, inst.size() / 2);
                SolveOutcome a = run_solve(back, req);
                SolveOutcome b = run_solve(parse_instance_text(text), req);
                mismatches += a.body != b.body || a.exit_code != b.exit_code;
                ++runs;
            }
        }
        Outcome o;
        o.pass = mismatches == 0;
        o.detail = std::to_string(suite.size()) + " instances, " + std::to_string(runs) +
                   " report pairs, mismatches " + std::to_string(mismatches);
        return o;
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
