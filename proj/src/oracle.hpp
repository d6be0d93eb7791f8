#pragma once

#include <cstdint>

#include "multigraph.hpp"

namespace mmc {

enum class OracleMethod { Exhaustive, LocalSearch };

struct OracleResult {
    Rational value;
    Cut witness{1};
    OracleMethod method = OracleMethod::Exhaustive;
    bool exact = false;
};

// Exact maximum cut by Gray-code enumeration of the 2^{n-1} cuts with
// vertex 0 fixed outside S and O(deg) incremental weight updates. The
// witness is the numerically least mask attaining the maximum. The scan is
// partitioned over the top mask bits when threads > 1; results are
// independent of the thread count.
OracleResult brute_force_maxcut(const Multigraph& g, int max_n = 30, int threads = 1);

// Best cut over seeded random restarts of single-flip hill climbing.
// Deterministic given (restarts, seed); the witness is locally optimal and
// canonicalized so that vertex 0 is outside S.
OracleResult local_search_maxcut(const Multigraph& g, std::uint64_t restarts, std::uint64_t seed);

} // namespace mmc
