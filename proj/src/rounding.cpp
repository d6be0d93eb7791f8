#include "rounding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "errors.hpp"

namespace mmc {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

} // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t chunk) {
    key_ = mix64(seed + kGolden * (chunk + 1));
    key_ = mix64(key_ ^ (seed + 0xda942042e4dd58b5ull));
}

std::uint64_t RandomStream::next_u64() { return mix64(key_ + kGolden * (++counter_)); }

double RandomStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

namespace {

double check_residual(const EmbeddingFactor& f, const std::vector<Rational>& gram) {
    double worst = 0;
    for (int i = 0; i < f.n; ++i)
        for (int j = i; j < f.n; ++j) {
            double dot = 0;
            for (int t = 0; t < f.k; ++t) dot += f.row(i)[t] * f.row(j)[t];
            worst = std::max(worst,
                             std::abs(dot - to_double(gram[static_cast<std::size_t>(i) * f.n + j])));
        }
    return worst;
}

} // namespace

EmbeddingFactor factorize_embedding(const Embedding& e) {
    const int k = e.params.rank();
    auto coords = embedding_root_coordinates(e);
    auto g = root_gram(e.params);

    // Cholesky G = U^T U of the k x k root Gram, in double.
    std::vector<double> u(static_cast<std::size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            double acc = to_double(g[static_cast<std::size_t>(i) * k + j]);
            for (int t = 0; t < i; ++t)
                acc -= u[static_cast<std::size_t>(t) * k + i] * u[static_cast<std::size_t>(t) * k + j];
            if (i == j) {
                if (acc <= 0) throw NumericError("root Gram matrix is not positive definite");
                u[static_cast<std::size_t>(i) * k + i] = std::sqrt(acc);
            } else {
                u[static_cast<std::size_t>(i) * k + j] = acc / u[static_cast<std::size_t>(i) * k + i];
            }
        }
    }

    EmbeddingFactor f;
    f.n = e.n;
    f.k = k;
    f.rows.assign(static_cast<std::size_t>(e.n) * k, 0.0);
    const double scale = std::sqrt(to_double(e.phi));
    for (int v = 0; v < e.n; ++v)
        for (int i = 0; i < k; ++i) {
            double acc = 0;
            for (int j = i; j < k; ++j)
                acc += u[static_cast<std::size_t>(i) * k + j] *
                       to_double(coords[static_cast<std::size_t>(v) * k + j]);
            f.rows[static_cast<std::size_t>(v) * k + i] = scale * acc;
        }
    f.residual = check_residual(f, e.gram);
    if (f.residual > 1e-12)
        throw NumericError("embedding factor residual " + std::to_string(f.residual) +
                           " exceeds 1e-12");
    return f;
}

EmbeddingFactor factorize_gram(const std::vector<Rational>& gram, int n) {
    if (gram.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DimensionError("gram size mismatch");
    // Pivoted Cholesky, rank-revealing.
    std::vector<double> cols; // column-major n x rank
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        diag[static_cast<std::size_t>(i)] = to_double(gram[static_cast<std::size_t>(i) * n + i]);
    std::vector<int> order;
    int rank = 0;
    while (rank < n) {
        int p = -1;
        double best = 1e-13;
        for (int i = 0; i < n; ++i)
            if (diag[static_cast<std::size_t>(i)] > best) {
                best = diag[static_cast<std::size_t>(i)];
                p = i;
            }
        if (p < 0) break;
        double root = std::sqrt(best);
        std::vector<double> col(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            double acc = to_double(gram[static_cast<std::size_t>(i) * n + p]);
            for (int t = 0; t < rank; ++t)
                acc -= cols[static_cast<std::size_t>(t) * n + i] *
                       cols[static_cast<std::size_t>(t) * n + p];
            col[static_cast<std::size_t>(i)] = acc / root;
        }
        for (int i = 0; i < n; ++i) {
            diag[static_cast<std::size_t>(i)] -=
                col[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
            if (diag[static_cast<std::size_t>(i)] < 0) diag[static_cast<std::size_t>(i)] = 0;
        }
        cols.insert(cols.end(), col.begin(), col.end());
        order.push_back(p);
        ++rank;
    }
    EmbeddingFactor f;
    f.n = n;
    f.k = rank;
    f.rows.assign(static_cast<std::size_t>(n) * rank, 0.0);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < rank; ++t)
            f.rows[static_cast<std::size_t>(i) * rank + t] = cols[static_cast<std::size_t>(t) * n + i];
    f.residual = check_residual(f, gram);
    if (f.residual > 1e-12)
        throw NumericError("gram factor residual " + std::to_string(f.residual) + " exceeds 1e-12");
    return f;
}

Cut sample_cut(const EmbeddingFactor& f, RandomStream& stream) {
    std::vector<double> dir(static_cast<std::size_t>(f.k));
    for (auto& d : dir) d = stream.normal();
    Cut cut(static_cast<std::size_t>(f.n));
    for (int i = 0; i < f.n; ++i) {
        double dot = 0;
        for (int t = 0; t < f.k; ++t) dot += dir[static_cast<std::size_t>(t)] * f.row(i)[t];
        if (dot >= 0) cut.set(static_cast<std::size_t>(i), true); // ties go to S
    }
    return cut;
}

namespace {

struct Edge {
    int i, j;
    std::int64_t w;
};

struct ChunkAggregate {
    std::uint64_t count = 0;
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    std::int64_t max = -1;
    std::vector<std::uint8_t> witness;
};

void run_chunk(const EmbeddingFactor& f, const std::vector<Edge>& edges, std::uint64_t seed,
               std::uint64_t chunk, std::uint64_t nsamples, ChunkAggregate& agg) {
    RandomStream stream(seed, chunk);
    const int n = f.n;
    const int k = f.k;
    std::vector<double> dir(static_cast<std::size_t>(k));
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
    agg.count = nsamples;
    for (std::uint64_t s = 0; s < nsamples; ++s) {
        for (auto& d : dir) d = stream.normal();
        for (int i = 0; i < n; ++i) {
            double dot = 0;
            const double* row = f.row(i);
            for (int t = 0; t < k; ++t) dot += dir[static_cast<std::size_t>(t)] * row[t];
            side[static_cast<std::size_t>(i)] = dot >= 0 ? 1 : 0;
        }
        std::int64_t weight = 0;
        for (const auto& e : edges)
            if (side[static_cast<std::size_t>(e.i)] != side[static_cast<std::size_t>(e.j)])
                weight += e.w;
        agg.sum += static_cast<unsigned __int128>(weight);
        agg.sum_sq += static_cast<unsigned __int128>(weight) * static_cast<unsigned __int128>(weight);
        if (weight > agg.max) {
            agg.max = weight;
            agg.witness = side;
        }
    }
}

Int from_u128(unsigned __int128 v) {
    Int out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

} // namespace

CutStats simulate(const Multigraph& g, const EmbeddingFactor& f, std::uint64_t samples,
                  std::uint64_t seed, const std::optional<Int>& hard_upper, int threads,
                  std::uint64_t chunk_size) {
    if (samples < 1) throw DimensionError("at least one sample is required");
    if (chunk_size < 1) throw DimensionError("chunk size must be positive");
    if (g.n() != f.n) throw DimensionError("factor does not match the graph");

    auto scaled = g.scaled_int_weights();
    const std::int64_t L = scaled.scale;
    std::vector<Edge> edges;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            std::int64_t w = scaled.w[static_cast<std::size_t>(i) * g.n() + j];
            if (w != 0) edges.push_back({i, j, w});
        }

    const std::uint64_t nchunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<ChunkAggregate> aggs(nchunks);
    auto work = [&](std::uint64_t c) {
        std::uint64_t lo = c * chunk_size;
        std::uint64_t hi = std::min(samples, lo + chunk_size);
        run_chunk(f, edges, seed, c, hi - lo, aggs[c]);
    };
    if (threads <= 1 || nchunks <= 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c) work(c);
    } else {
        const int nthreads = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), nchunks);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        std::atomic<std::uint64_t> next{0};
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                for (std::uint64_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) work(c);
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction in chunk-index order.
    Int sum = 0, sum_sq = 0;
    std::int64_t max = -1;
    const std::vector<std::uint8_t>* witness = nullptr;
    for (const auto& agg : aggs) {
        sum += from_u128(agg.sum);
        sum_sq += from_u128(agg.sum_sq);
        if (agg.max > max) {
            max = agg.max;
            witness = &agg.witness;
        }
    }

    CutStats stats;
    stats.samples = samples;
    stats.seed = seed;
    stats.chunk_size = chunk_size;
    Rational mean_exact = Rational(sum) / (Rational(samples) * L);
    stats.mean = to_double(mean_exact);
    stats.degenerate = Int(samples) * sum_sq == sum * sum;
    if (samples > 1 && !stats.degenerate) {
        Rational var = (Rational(sum_sq) / (Rational(L) * L) -
                        Rational(samples) * mean_exact * mean_exact) /
                       Rational(samples - 1);
        stats.stddev = std::sqrt(to_double(var));
        stats.cv = mean_exact != 0 ? stats.stddev / stats.mean : 0.0;
    }
    stats.max_weight = Rational(max, L);
    Cut best(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i)
        if ((*witness)[static_cast<std::size_t>(i)]) best.set(static_cast<std::size_t>(i), true);
    stats.max_witness = best;
    if (g.cut_weight(best) != stats.max_weight)
        throw CertificateError("witness re-verification failed in the simulator");
    if (hard_upper && stats.max_weight > *hard_upper)
        throw CertificateError("sampled cut of weight " + to_fraction(stats.max_weight) +
                               " exceeds the certified upper bound " + hard_upper->str());
    return stats;
}

} // namespace mmc
