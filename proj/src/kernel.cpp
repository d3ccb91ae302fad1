#include "lsc/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "lsc/error.hpp"
#include "lsc/solvers.hpp"

namespace lsc {

namespace {

void add_pairs(PairCounts& counts, const std::vector<int>& set, int delta) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) counts[{set[a], set[b]}] += delta;
}

bool contains(const std::vector<int>& set, int e) {
    return std::binary_search(set.begin(), set.end(), e);
}

SetCollection alive_sets(const SetCollection& all, const std::vector<char>& alive) {
    SetCollection out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (alive[i]) out.push_back(all[i]);
    return out;
}

std::int64_t six_k_pow(int k, int power) {
    std::int64_t v = 6;
    for (int i = 0; i < power; ++i) v *= k;
    return v;
}

}  // namespace

PairCounts count_pairs_serial(const SetCollection& sets) {
    PairCounts counts;
    for (const auto& s : sets) add_pairs(counts, s, 1);
    return counts;
}

PairCounts count_pairs(const SetCollection& sets) {
    const int n = static_cast<int>(sets.size());
    PairCounts merged;
#pragma omp parallel
    {
        PairCounts local;
#pragma omp for schedule(dynamic, 16) nowait
        for (int i = 0; i < n; ++i) add_pairs(local, sets[static_cast<std::size_t>(i)], 1);
#pragma omp critical(lsc_pair_merge)
        for (const auto& [key, c] : local) merged[key] += c;
    }
    return merged;
}

PairStage reduce_pairs(const SetCollection& sets, int k, ReductionMode mode) {
    if (k < 1) throw std::invalid_argument("pair reduction needs k >= 1");
    const std::int64_t threshold = six_k_pow(k, 1);
    SetCollection all = sets;
    std::vector<char> alive(all.size(), 1);
    PairCounts live = count_pairs(all);
    const PairCounts snapshot = live;
    PairStage stage;

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> candidates;
        candidates.reserve(snapshot.size());
        for (const auto& [key, c] : (mode == ReductionMode::fixpoint ? live : snapshot))
            if (c > threshold) candidates.push_back(key);
        for (const auto& key : candidates) {
            const auto& counts = mode == ReductionMode::fixpoint ? live : snapshot;
            auto it = counts.find(key);
            if (it == counts.end() || it->second <= threshold) continue;
            PairReduction red{key.first, key.second, 0};
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (!alive[i] || !contains(all[i], key.first) || !contains(all[i], key.second)) continue;
                alive[i] = 0;
                add_pairs(live, all[i], -1);
                ++red.removed;
            }
            all.push_back({key.first, key.second});
            alive.push_back(1);
            live[key] += 1;
            stage.reductions.push_back(red);
            changed = true;
        }
        if (mode == ReductionMode::single_pass) break;
    }
    stage.c1 = alive_sets(all, alive);
    return stage;
}

SingletonStage reduce_singletons(const SetCollection& sets, int k, ReductionMode mode) {
    if (k < 1) throw std::invalid_argument("singleton reduction needs k >= 1");
    const std::int64_t threshold = six_k_pow(k, 2);
    SetCollection all = sets;
    std::vector<char> alive(all.size(), 1);
    std::map<int, int> live;
    for (const auto& s : all)
        for (int e : s) ++live[e];
    const std::map<int, int> snapshot = live;
    SingletonStage stage;

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> candidates;
        for (const auto& [e, c] : (mode == ReductionMode::fixpoint ? live : snapshot))
            if (c > threshold) candidates.push_back(e);
        for (int e : candidates) {
            const auto& counts = mode == ReductionMode::fixpoint ? live : snapshot;
            if (counts.at(e) <= threshold) continue;
            SingletonReduction red{e, 0};
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (!alive[i] || !contains(all[i], e)) continue;
                alive[i] = 0;
                for (int x : all[i]) --live[x];
                ++red.removed;
            }
            all.push_back({e});
            alive.push_back(1);
            ++live[e];
            stage.reductions.push_back(red);
            changed = true;
        }
        if (mode == ReductionMode::single_pass) break;
    }
    stage.c2 = alive_sets(all, alive);
    return stage;
}

KernelTrace kernelize(const CoverInstance& ci, int k, ReductionMode mode) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    KernelTrace trace;
    trace.k = k;
    trace.input = ci.unmerged;
    if (k == 0) {
        // Nothing to reduce: either there is nothing to hit or no cover fits.
        trace.c1 = trace.c2 = trace.input;
        trace.verdict = trace.input.empty() ? KernelVerdict::kernel : KernelVerdict::no_solution_at_most_k;
        return trace;
    }
    PairStage pairs = reduce_pairs(trace.input, k, mode);
    SingletonStage singles = reduce_singletons(pairs.c1, k, mode);
    trace.pair_reductions = std::move(pairs.reductions);
    trace.singleton_reductions = std::move(singles.reductions);
    trace.c1 = std::move(pairs.c1);
    trace.c2 = std::move(singles.c2);
    trace.verdict = static_cast<std::int64_t>(trace.c2.size()) > six_k_pow(k, 3)
                        ? KernelVerdict::no_solution_at_most_k
                        : KernelVerdict::kernel;
    return trace;
}

std::optional<std::vector<int>> hitting_set_dp(const SetCollection& sets) {
    const int m = static_cast<int>(sets.size());
    if (m > kMaxDpSets) throw TooLarge("bitmask DP supports at most 24 sets");
    if (m == 0) return std::vector<int>{};
    std::vector<int> elems;
    for (const auto& s : sets) elems.insert(elems.end(), s.begin(), s.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<std::uint32_t> emask(elems.size(), 0);
    for (int i = 0; i < m; ++i)
        for (int e : sets[static_cast<std::size_t>(i)]) {
            auto pos = std::lower_bound(elems.begin(), elems.end(), e) - elems.begin();
            emask[static_cast<std::size_t>(pos)] |= 1u << i;
        }
    const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    constexpr std::uint8_t kUnseen = 0xff;
    std::vector<std::uint8_t> dist(static_cast<std::size_t>(full) + 1, kUnseen);
    dist[0] = 0;
    std::vector<std::uint32_t> frontier{0};
    std::uint8_t layer = 0;
    while (dist[full] == kUnseen && !frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask : frontier)
            for (std::uint32_t em : emask) {
                std::uint32_t nm = mask | em;
                if (dist[nm] == kUnseen) {
                    dist[nm] = static_cast<std::uint8_t>(layer + 1);
                    next.push_back(nm);
                }
            }
        frontier.swap(next);
        ++layer;
    }
    if (dist[full] == kUnseen) return std::nullopt;

    // Walk back: at each step take the smallest element that leads to a mask
    // one layer closer to the start.
    std::vector<int> chosen;
    std::uint32_t cur = full;
    while (cur != 0) {
        const std::uint8_t want = static_cast<std::uint8_t>(dist[cur] - 1);
        bool stepped = false;
        for (std::size_t e = 0; e < elems.size() && !stepped; ++e) {
            const std::uint32_t inside = cur & emask[e];
            if (inside == 0) continue;
            const std::uint32_t base = cur & ~emask[e];
            for (std::uint32_t sub = inside;; sub = (sub - 1) & inside) {
                const std::uint32_t prev = base | sub;
                if (dist[prev] == want) {
                    chosen.push_back(elems[e]);
                    cur = prev;
                    stepped = true;
                    break;
                }
                if (sub == 0) break;
            }
        }
        if (!stepped) throw std::logic_error("hitting set DP reconstruction failed");
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

FptResult solve_fpt(const CoverInstance& ci, int k, ReductionMode mode) {
    FptResult result;
    result.trace = kernelize(ci, k, mode);
    if (result.trace.verdict == KernelVerdict::no_solution_at_most_k) return result;
    const SetCollection& kernel = result.trace.c2;
    std::optional<std::vector<int>> best;
    if (static_cast<int>(kernel.size()) <= kMaxDpSets)
        best = hitting_set_dp(kernel);
    else
        best = min_hitting_set(kernel, k);
    if (!best || static_cast<int>(best->size()) > k) return result;
    Cover cover{*best};
    if (!is_feasible(ci, cover)) throw std::logic_error("kernel cover does not cover the instance");
    result.cover = std::move(cover);
    return result;
}

}  // namespace lsc
