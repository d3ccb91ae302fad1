#include "lsc/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "lsc/error.hpp"

namespace lsc {

namespace {

// Include-first depth-first search over elements in increasing id. With the
// budget set to the optimum, the first cover found is the lexicographically
// smallest minimum cover.
class LexHittingSearch {
public:
    explicit LexHittingSearch(const SetCollection& sets) {
        for (const auto& s : sets) elems_.insert(elems_.end(), s.begin(), s.end());
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        containing_.resize(elems_.size());
        for (const auto& s : sets) {
            std::vector<int> dense;
            for (int e : s) dense.push_back(dense_index(e));
            std::sort(dense.begin(), dense.end());
            for (int d : dense) containing_[d].push_back(static_cast<int>(sets_.size()));
            sets_.push_back(std::move(dense));
        }
        by_size_.resize(sets_.size());
        std::iota(by_size_.begin(), by_size_.end(), 0);
        std::stable_sort(by_size_.begin(), by_size_.end(),
                         [&](int a, int b) { return sets_[a].size() < sets_[b].size(); });
        mark_.assign(elems_.size(), 0);
    }

    int num_elements() const { return static_cast<int>(elems_.size()); }

    int initial_lower_bound() {
        reset();
        return lower_bound(0);
    }

    bool run(int budget, std::vector<int>& out) {
        reset();
        if (!dfs(0, budget)) return false;
        out.clear();
        for (int d : chosen_) out.push_back(elems_[d]);
        return true;
    }

private:
    int dense_index(int e) const {
        return static_cast<int>(std::lower_bound(elems_.begin(), elems_.end(), e) - elems_.begin());
    }

    void reset() {
        hit_.assign(sets_.size(), 0);
        unhit_ = static_cast<int>(sets_.size());
        chosen_.clear();
    }

    // Disjoint packing of unhit sets restricted to elements >= idx. Returns
    // a huge value when some unhit set can no longer be hit.
    int lower_bound(int idx) {
        ++stamp_;
        int count = 0;
        for (int s : by_size_) {
            if (hit_[s] > 0) continue;
            const auto& set = sets_[s];
            auto first = std::lower_bound(set.begin(), set.end(), idx);
            if (first == set.end()) return std::numeric_limits<int>::max();
            bool clash = std::any_of(first, set.end(), [&](int e) { return mark_[e] == stamp_; });
            if (clash) continue;
            for (auto it = first; it != set.end(); ++it) mark_[*it] = stamp_;
            ++count;
        }
        return count;
    }

    void include(int e) {
        chosen_.push_back(e);
        for (int s : containing_[e])
            if (hit_[s]++ == 0) --unhit_;
    }

    void exclude_last() {
        int e = chosen_.back();
        chosen_.pop_back();
        for (int s : containing_[e])
            if (--hit_[s] == 0) ++unhit_;
    }

    bool dfs(int idx, int budget) {
        if (unhit_ == 0) return true;
        if (budget == 0 || idx == num_elements()) return false;
        if (lower_bound(idx) > budget) return false;
        bool useful = std::any_of(containing_[idx].begin(), containing_[idx].end(),
                                  [&](int s) { return hit_[s] == 0; });
        if (useful) {
            include(idx);
            if (dfs(idx + 1, budget - 1)) return true;
            exclude_last();
        }
        return dfs(idx + 1, budget);
    }

    std::vector<int> elems_;
    std::vector<std::vector<int>> sets_;
    std::vector<std::vector<int>> containing_;
    std::vector<int> by_size_;
    std::vector<int> hit_;
    std::vector<int> chosen_;
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
    int unhit_ = 0;
};

template <typename F>
bool for_each_combination(int n, int r, F&& visit) {
    if (r > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (visit(idx)) return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::optional<std::vector<int>> min_hitting_set(const SetCollection& sets, std::optional<int> ub) {
    if (sets.empty()) return std::vector<int>{};
    for (const auto& s : sets)
        if (s.empty()) return std::nullopt;
    LexHittingSearch search(sets);
    int limit = search.num_elements();
    if (ub) limit = std::min(limit, *ub);
    std::vector<int> out;
    for (int budget = search.initial_lower_bound(); budget <= limit; ++budget)
        if (search.run(budget, out)) return out;
    return std::nullopt;
}

Cover solve_exact(const CoverInstance& ci, std::optional<int> ub) {
    auto best = min_hitting_set(ci.merged_sets(), ub);
    if (!best) throw BudgetExceeded(ub.value_or(-1));
    return Cover{*best};
}

Cover solve_greedy(const CoverInstance& ci) {
    const int n = ci.num_segments;
    std::vector<std::vector<int>> containing(static_cast<std::size_t>(n));
    for (const auto& d : ci.demands)
        for (int e : d.elements) containing[e].push_back(d.id);
    std::vector<char> hit(ci.demands.size(), 0);
    std::size_t remaining = ci.demands.size();
    std::vector<int> chosen;
    while (remaining > 0) {
        int best = -1;
        int best_gain = 0;
        for (int e = 0; e < n; ++e) {
            int gain = 0;
            for (int d : containing[e]) gain += hit[d] ? 0 : 1;
            if (gain > best_gain) {
                best = e;
                best_gain = gain;
            }
        }
        if (best < 0) throw Infeasible(-1);
        chosen.push_back(best);
        for (int d : containing[best])
            if (!hit[d]) {
                hit[d] = 1;
                --remaining;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return Cover{chosen};
}

std::vector<int> scan_order(const CoverInstance& ci, std::uint64_t seed) {
    std::vector<int> order = ci.ground;
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

std::optional<Swap> find_improving_swap(const CoverInstance& ci, const std::vector<int>& current, int k,
                                        const std::vector<int>& order) {
    const int n = ci.num_segments;
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    std::vector<char> in_current(static_cast<std::size_t>(n), 0);
    for (int e : current) in_current[e] = 1;

    std::vector<int> inside, outside;
    for (int e : order) (in_current[e] ? inside : outside).push_back(e);

    std::vector<std::vector<int>> containing(static_cast<std::size_t>(n));
    for (const auto& d : ci.demands)
        for (int e : d.elements) containing[e].push_back(d.id);
    std::vector<int> hit_count(ci.demands.size(), 0);
    for (int e : current)
        for (int d : containing[e]) ++hit_count[d];

    std::optional<Swap> found;
    std::vector<int> exposed;
    for (int a = 1; a <= k && !found; ++a) {
        for_each_combination(static_cast<int>(inside.size()), a, [&](const std::vector<int>& pick) {
            exposed.clear();
            for (int i : pick)
                for (int d : containing[inside[i]])
                    if (--hit_count[d] == 0) exposed.push_back(d);
            for (int i : pick)
                for (int d : containing[inside[i]]) ++hit_count[d];

            auto make_swap = [&](const std::vector<int>& m) {
                Swap s;
                for (int i : pick) s.removed.push_back(inside[i]);
                for (int j : m) s.added.push_back(outside[j]);
                return s;
            };
            if (exposed.empty()) {
                found = make_swap({});
                return true;
            }
            for (int msize = 1; msize < a; ++msize) {
                bool ok = for_each_combination(
                    static_cast<int>(outside.size()), msize, [&](const std::vector<int>& m) {
                        for (int d : exposed) {
                            const auto& el = ci.demands[d].elements;
                            bool hit = std::any_of(m.begin(), m.end(), [&](int j) {
                                return std::binary_search(el.begin(), el.end(), outside[j]);
                            });
                            if (!hit) return false;
                        }
                        found = make_swap(m);
                        return true;
                    });
                if (ok) return true;
            }
            return false;
        });
    }
    return found;
}

LocalSearchResult local_search(const CoverInstance& ci, const LocalSearchParams& params) {
    if (params.k < 1) throw std::invalid_argument("local search radius k must be >= 1");
    LocalSearchResult result;
    std::vector<int> current = ci.ground;
    const auto order = scan_order(ci, params.seed);
    result.size_history.push_back(static_cast<int>(current.size()));
    while (true) {
        if (result.iterations >= params.max_iterations) {
            result.cap_exceeded = true;
            break;
        }
        auto swap = find_improving_swap(ci, current, params.k, order);
        if (!swap) break;
        std::sort(swap->removed.begin(), swap->removed.end());
        std::vector<int> next;
        for (int e : current)
            if (!std::binary_search(swap->removed.begin(), swap->removed.end(), e)) next.push_back(e);
        next.insert(next.end(), swap->added.begin(), swap->added.end());
        std::sort(next.begin(), next.end());
        current = std::move(next);
        ++result.iterations;
        result.size_history.push_back(static_cast<int>(current.size()));
    }
    result.cover = Cover{current};
    return result;
}

}  // namespace lsc
