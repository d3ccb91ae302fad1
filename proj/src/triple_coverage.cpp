#include "lsc/triple_coverage.hpp"

#include <bit>

#include "lsc/error.hpp"

namespace lsc {

namespace {

// Row-major bit matrix: row s holds the cells incident to segment s.
class IncidenceBits {
public:
    explicit IncidenceBits(const Arrangement& arr)
        : words_((static_cast<std::size_t>(arr.num_cells()) + 63) / 64),
          bits_(words_ * static_cast<std::size_t>(arr.instance().size()), 0) {
        const auto& inc = arr.incidence();
        for (std::size_t s = 0; s < inc.size(); ++s)
            for (int c : inc[s]) bits_[s * words_ + static_cast<std::size_t>(c) / 64] |= 1ULL << (c % 64);
    }

    int common(int a, int b, int c) const {
        const std::uint64_t* ra = &bits_[static_cast<std::size_t>(a) * words_];
        const std::uint64_t* rb = &bits_[static_cast<std::size_t>(b) * words_];
        const std::uint64_t* rc = &bits_[static_cast<std::size_t>(c) * words_];
        int total = 0;
        for (std::size_t w = 0; w < words_; ++w) total += std::popcount(ra[w] & rb[w] & rc[w]);
        return total;
    }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

void check_preconditions(const Arrangement& arr) {
    const auto& inst = arr.instance();
    for (const auto& s : inst.segments())
        if (!s.axis_parallel()) throw NotAxisParallel(s.id);
    if (inst.size() < 3) throw TooFewSegments(inst.size(), 3);
}

// Higher count wins; equal counts keep the lexicographically smaller triple.
bool better(int count, const std::array<int, 3>& t, const TripleCoverage& cur) {
    return count > cur.max_count || (count == cur.max_count && t < cur.witness);
}

TripleCoverage scan_from(const IncidenceBits& bits, int n, int i) {
    TripleCoverage best{-1, {i, i + 1, i + 2}};
    for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            int c = bits.common(i, j, k);
            std::array<int, 3> t{i, j, k};
            if (better(c, t, best)) best = {c, t};
        }
    return best;
}

}  // namespace

TripleCoverage triple_coverage_max_serial(const Arrangement& arr) {
    check_preconditions(arr);
    const int n = arr.instance().size();
    IncidenceBits bits(arr);
    TripleCoverage best{-1, {0, 1, 2}};
    for (int i = 0; i + 2 < n; ++i) {
        TripleCoverage row = scan_from(bits, n, i);
        if (better(row.max_count, row.witness, best)) best = row;
    }
    return best;
}

TripleCoverage triple_coverage_max(const Arrangement& arr) {
    check_preconditions(arr);
    const int n = arr.instance().size();
    IncidenceBits bits(arr);
    std::vector<TripleCoverage> rows(static_cast<std::size_t>(n - 2));
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n - 2; ++i) rows[static_cast<std::size_t>(i)] = scan_from(bits, n, i);
    TripleCoverage best{-1, {0, 1, 2}};
    for (const auto& row : rows)
        if (better(row.max_count, row.witness, best)) best = row;
    return best;
}

TripleBuckets triple_coverage_by_intersections(const Arrangement& arr) {
    check_preconditions(arr);
    const auto& inst = arr.instance();
    const int n = inst.size();
    std::vector<char> meets(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool m = intersect(inst.segment(i), inst.segment(j)).kind != Intersection::Kind::empty;
            meets[static_cast<std::size_t>(i) * n + j] = meets[static_cast<std::size_t>(j) * n + i] = m;
        }
    IncidenceBits bits(arr);
    TripleBuckets out;
    out.max_count.fill(-1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int bucket = meets[static_cast<std::size_t>(i) * n + j] + meets[static_cast<std::size_t>(i) * n + k] +
                             meets[static_cast<std::size_t>(j) * n + k];
                int c = bits.common(i, j, k);
                ++out.triples[bucket];
                if (c > out.max_count[bucket]) {
                    out.max_count[bucket] = c;
                    out.witness[bucket] = {i, j, k};
                }
            }
    for (auto& m : out.max_count)
        if (m < 0) m = 0;
    return out;
}

}  // namespace lsc
