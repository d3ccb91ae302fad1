#include "lsc/report.hpp"

#include <sstream>
#include <stdexcept>

#include "lsc/arrangement.hpp"
#include "lsc/error.hpp"
#include "lsc/solvers.hpp"

namespace lsc {

std::string to_string(SolverKind kind) {
    switch (kind) {
        case SolverKind::exact: return "exact";
        case SolverKind::greedy: return "greedy";
        case SolverKind::local: return "local";
        case SolverKind::fpt: return "fpt";
    }
    return "exact";
}

SolverKind parse_solver(const std::string& text) {
    if (text == "exact") return SolverKind::exact;
    if (text == "greedy") return SolverKind::greedy;
    if (text == "local") return SolverKind::local;
    if (text == "fpt") return SolverKind::fpt;
    throw Error("unknown solver '" + text + "' (expected exact|greedy|local|fpt)");
}

TargetMode parse_target(const std::string& text) {
    if (text == "all") return TargetMode::all_cells;
    if (text == "rect") return TargetMode::rectangular_cells;
    throw Error("unknown target '" + text + "' (expected all|rect)");
}

AllowedMode parse_allowed(const std::string& text) {
    if (text == "all") return AllowedMode::all();
    const std::string prefix = "orient:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            return AllowedMode::one_orientation(parse_orientation(text.substr(prefix.size())));
        } catch (const std::invalid_argument& e) {
            throw Error(e.what());
        }
    }
    throw Error("unknown allowed mode '" + text + "' (expected all|orient:<tag>)");
}

namespace {

void write_ids(std::ostream& out, const std::vector<int>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
}

}  // namespace

SolveOutcome run_solve(const Instance& inst, const SolveRequest& req) {
    SolveOutcome outcome;
    std::ostringstream out;
    Arrangement arr = build(inst);
    int bounded = 0, rect = 0;
    for (const Cell& c : arr.cells()) {
        bounded += c.bounded;
        rect += c.rectangular;
    }
    out << "instance: " << inst.metadata.name << '\n';
    out << "segments: " << inst.size() << '\n';
    out << "cells: " << arr.num_cells() << " (bounded " << bounded << ", rectangular " << rect << ")\n";
    out << "target: " << to_string(req.options.target) << '\n';
    out << "allowed: " << to_string(req.options.allowed) << '\n';
    out << "unbounded-cell: " << (req.options.include_unbounded ? "included" : "excluded") << '\n';
    out << "solver: " << to_string(req.solver) << '\n';

    const int k = req.k.value_or(2);
    switch (req.solver) {
        case SolverKind::local:
            out << "params: k=" << k << " seed=" << req.seed << " max-iterations=" << req.max_iterations << '\n';
            break;
        case SolverKind::fpt:
            if (!req.k) throw Error("solver fpt requires -k");
            out << "params: k=" << *req.k << " reduction="
                << (req.reduction == ReductionMode::fixpoint ? "fixpoint" : "single-pass") << '\n';
            break;
        default: out << "params: none\n"; break;
    }

    CoverInstance ci;
    try {
        ci = to_cover_instance(arr, req.options);
    } catch (const Infeasible& e) {
        out << "status: infeasible\n";
        out << "offending-cell: " << e.cell << '\n';
        outcome.exit_code = kExitInfeasible;
        outcome.body = out.str();
        return outcome;
    }
    out << "demands: " << ci.demands.size() << " merged, " << ci.unmerged.size() << " unmerged\n";

    std::optional<Cover> cover;
    switch (req.solver) {
        case SolverKind::exact: cover = solve_exact(ci); break;
        case SolverKind::greedy: cover = solve_greedy(ci); break;
        case SolverKind::local: {
            LocalSearchParams p;
            p.k = k;
            p.seed = req.seed;
            p.max_iterations = req.max_iterations;
            auto r = local_search(ci, p);
            cover = r.cover;
            out << "iterations: " << r.iterations << (r.cap_exceeded ? " (cap exceeded)" : "") << '\n';
            break;
        }
        case SolverKind::fpt: {
            auto r = solve_fpt(ci, *req.k, req.reduction);
            const auto& t = r.trace;
            out << "kernel: pair-reductions=" << t.pair_reductions.size()
                << " singleton-reductions=" << t.singleton_reductions.size() << " |C|=" << t.input.size()
                << " |C1|=" << t.c1.size() << " |C2|=" << t.c2.size() << " verdict="
                << (t.verdict == KernelVerdict::kernel ? "kernel" : "no-solution-at-most-k") << '\n';
            cover = r.cover;
            break;
        }
    }

    if (!cover) {
        out << "status: no-solution-at-most-k\n";
        outcome.exit_code = kExitNoSolution;
    } else {
        out << "status: ok\n";
        out << "size: " << cover->size() << '\n';
        out << "chosen: ";
        write_ids(out, cover->chosen);
        out << '\n';
    }
    if (req.oracle) {
        int opt = solve_exact(ci).size();
        out << "oracle-opt: " << opt << '\n';
        if (cover) out << "oracle-gap: " << cover->size() - opt << '\n';
    }
    outcome.cover = cover;
    outcome.body = out.str();
    return outcome;
}

}  // namespace lsc
