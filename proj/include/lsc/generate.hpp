#pragma once

#include <cstdint>

#include "lsc/instance.hpp"

namespace lsc {

// Random valid instances by rejection: candidate segments that would overlap
// an existing one or put a third segment through an existing meeting point
// are redrawn. Endpoints are integers in [0, coord_max]. Deterministic per
// seed. May return fewer than n segments if `max_attempts` candidates are
// rejected in a row. Axis-parallel segments are at least `min_length` long.
Instance random_axis_parallel(int n, long coord_max, std::uint64_t seed, long min_length = 1,
                              int max_attempts = 10000);
Instance random_general(int n, long coord_max, std::uint64_t seed, int max_attempts = 10000);

// rows horizontals at y = 0..rows-1 spanning x in [-1, cols], then cols
// verticals at x = 0..cols-1 spanning y in [-1, rows]. 2 x 2 is the "#".
Instance grid(int rows, int cols);

// One horizontal crossed by two verticals (ids 0, 1, 2) plus auxiliary
// segments arranged so that six cells are incident to all three.
Instance triple_tight();

}  // namespace lsc
