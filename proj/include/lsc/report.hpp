#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lsc/cover_model.hpp"
#include "lsc/instance.hpp"
#include "lsc/kernel.hpp"

namespace lsc {

enum class SolverKind { exact, greedy, local, fpt };

std::string to_string(SolverKind kind);
SolverKind parse_solver(const std::string& text);
TargetMode parse_target(const std::string& text);
AllowedMode parse_allowed(const std::string& text);

struct SolveRequest {
    SolverKind solver = SolverKind::exact;
    CoverOptions options;
    std::optional<int> k;  // fpt budget, or local-search swap radius (default 2)
    std::uint64_t seed = 0;
    std::int64_t max_iterations = 1'000'000;
    ReductionMode reduction = ReductionMode::fixpoint;
    bool oracle = false;  // also run the exact solver and report the gap
};

enum ExitCode { kExitOk = 0, kExitInput = 2, kExitNoSolution = 3, kExitInfeasible = 4 };

struct SolveOutcome {
    int exit_code = kExitOk;
    std::optional<Cover> cover;
    std::string body;  // deterministic report text
};

// Runs arrangement -> cover model -> solver and formats the report body.
// Input errors propagate as exceptions; infeasibility and an exceeded fpt
// budget are reported through exit_code.
SolveOutcome run_solve(const Instance& inst, const SolveRequest& request);

}  // namespace lsc
