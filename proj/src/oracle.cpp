#include "oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "errors.hpp"
#include "rounding.hpp"

namespace mmc {

namespace {

struct IntGraph {
    int n;
    std::int64_t scale;
    std::vector<std::int64_t> w;                            // dense n*n
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj; // positive edges
    std::vector<std::int64_t> deg;
};

IntGraph prepare(const Multigraph& g) {
    IntGraph ig;
    ig.n = g.n();
    auto scaled = g.scaled_int_weights();
    ig.scale = scaled.scale;
    ig.w = std::move(scaled.w);
    ig.adj.resize(static_cast<std::size_t>(ig.n));
    ig.deg.assign(static_cast<std::size_t>(ig.n), 0);
    std::int64_t total = 0;
    for (int i = 0; i < ig.n; ++i)
        for (int j = 0; j < ig.n; ++j) {
            std::int64_t wij = ig.w[static_cast<std::size_t>(i) * ig.n + j];
            if (wij == 0 || i == j) continue;
            ig.adj[static_cast<std::size_t>(i)].emplace_back(j, wij);
            ig.deg[static_cast<std::size_t>(i)] += wij;
            if (i < j) total += wij;
        }
    if (total > (std::int64_t{1} << 61))
        throw SizeLimitError("total scaled weight too large for incremental updates");
    return ig;
}

struct BlockBest {
    std::int64_t value = -1;
    std::uint64_t mask = 0; // bit v-1 <=> vertex v in S (vertex 0 never in S)
};

// Gray-code scan of one block: the top fixed_bits of the (n-1)-bit mask are
// pinned to block_id, the remaining low bits are enumerated.
BlockBest scan_block(const IntGraph& ig, int fixed_bits, std::uint64_t block_id) {
    const int n = ig.n;
    const int m = n - 1;
    const int low_bits = m - fixed_bits;
    const std::uint64_t base_mask = block_id << low_bits;

    std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);
    for (int bit = 0; bit < m; ++bit)
        if (base_mask & (std::uint64_t{1} << bit)) side[static_cast<std::size_t>(bit) + 1] = 1;

    std::vector<std::int64_t> contrib(static_cast<std::size_t>(n), 0);
    std::int64_t weight = 0;
    for (int v = 0; v < n; ++v) {
        for (const auto& [u, wv] : ig.adj[static_cast<std::size_t>(v)])
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) {
                contrib[static_cast<std::size_t>(v)] += wv;
                if (u > v) weight += wv;
            }
    }

    BlockBest best{weight, base_mask};
    std::uint64_t mask = base_mask;
    const std::uint64_t steps = low_bits >= 64 ? 0 : (std::uint64_t{1} << low_bits);
    for (std::uint64_t step = 1; step < steps; ++step) {
        const int bit = std::countr_zero(step);
        const int v = bit + 1;
        weight += ig.deg[static_cast<std::size_t>(v)] - 2 * contrib[static_cast<std::size_t>(v)];
        side[static_cast<std::size_t>(v)] ^= 1;
        mask ^= std::uint64_t{1} << bit;
        for (const auto& [u, wv] : ig.adj[static_cast<std::size_t>(v)])
            contrib[static_cast<std::size_t>(u)] +=
                side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] ? wv : -wv;
        contrib[static_cast<std::size_t>(v)] =
            ig.deg[static_cast<std::size_t>(v)] - contrib[static_cast<std::size_t>(v)];
        if (weight > best.value || (weight == best.value && mask < best.mask))
            best = {weight, mask};
    }
    return best;
}

} // namespace

OracleResult brute_force_maxcut(const Multigraph& g, int max_n, int threads) {
    const int n = g.n();
    if (n > max_n)
        throw SizeLimitError("brute force is limited to " + std::to_string(max_n) +
                             " vertices; use local search");
    OracleResult res;
    res.method = OracleMethod::Exhaustive;
    res.exact = true;
    if (n == 1) {
        res.value = 0;
        res.witness = Cut(1);
        return res;
    }
    IntGraph ig = prepare(g);
    const int m = n - 1;
    int fixed_bits = 0;
    if (threads > 1) {
        while ((1 << fixed_bits) < threads && fixed_bits < m - 1) ++fixed_bits;
    }
    const std::uint64_t blocks = std::uint64_t{1} << fixed_bits;
    std::vector<BlockBest> results(blocks);
    if (blocks == 1) {
        results[0] = scan_block(ig, fixed_bits, 0);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        const int nthreads = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), blocks);
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                for (std::uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1))
                    results[b] = scan_block(ig, fixed_bits, b);
            });
        for (auto& th : pool) th.join();
    }
    BlockBest best = results[0];
    for (const auto& r : results)
        if (r.value > best.value || (r.value == best.value && r.mask < best.mask)) best = r;

    res.value = Rational(best.value, ig.scale);
    Cut witness(static_cast<std::size_t>(n));
    for (int bit = 0; bit < m; ++bit)
        if (best.mask & (std::uint64_t{1} << bit)) witness.set(static_cast<std::size_t>(bit) + 1, true);
    res.witness = witness;
    return res;
}

namespace {

bool side_less(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    for (std::size_t v = a.size(); v-- > 0;)
        if (a[v] != b[v]) return a[v] < b[v];
    return false;
}

} // namespace

OracleResult local_search_maxcut(const Multigraph& g, std::uint64_t restarts, std::uint64_t seed) {
    if (restarts < 1) throw DimensionError("at least one restart is required");
    IntGraph ig = prepare(g);
    const int n = ig.n;

    std::int64_t best_weight = -1;
    std::vector<std::uint8_t> best_side;
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
    std::vector<std::int64_t> contrib(static_cast<std::size_t>(n));

    for (std::uint64_t rs = 0; rs < restarts; ++rs) {
        RandomStream stream(seed, rs);
        for (auto& s : side) s = static_cast<std::uint8_t>(stream.next_u64() & 1);

        std::int64_t weight = 0;
        std::fill(contrib.begin(), contrib.end(), 0);
        for (int v = 0; v < n; ++v)
            for (const auto& [u, wv] : ig.adj[static_cast<std::size_t>(v)])
                if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) {
                    contrib[static_cast<std::size_t>(v)] += wv;
                    if (u > v) weight += wv;
                }

        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < n; ++v) {
                std::int64_t delta =
                    ig.deg[static_cast<std::size_t>(v)] - 2 * contrib[static_cast<std::size_t>(v)];
                if (delta <= 0) continue;
                weight += delta;
                side[static_cast<std::size_t>(v)] ^= 1;
                for (const auto& [u, wv] : ig.adj[static_cast<std::size_t>(v)])
                    contrib[static_cast<std::size_t>(u)] +=
                        side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] ? wv
                                                                                               : -wv;
                contrib[static_cast<std::size_t>(v)] =
                    ig.deg[static_cast<std::size_t>(v)] - contrib[static_cast<std::size_t>(v)];
                improved = true;
            }
        }

        if (side[0]) // canonicalize: vertex 0 outside S
            for (auto& s : side) s ^= 1;
        if (weight > best_weight || (weight == best_weight && side_less(side, best_side))) {
            best_weight = weight;
            best_side = side;
        }
    }

    OracleResult res;
    res.method = OracleMethod::LocalSearch;
    res.exact = false;
    res.value = Rational(best_weight, ig.scale);
    Cut witness(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (best_side[static_cast<std::size_t>(v)]) witness.set(static_cast<std::size_t>(v), true);
    res.witness = witness;
    return res;
}

} // namespace mmc
