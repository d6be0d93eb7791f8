#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "certificates.hpp"
#include "multigraph.hpp"

namespace mmc {

// Counter-based splittable random stream: substream (seed, chunk) yields a
// sequence independent of every other chunk, so chunked parallel and serial
// runs produce identical statistics. Normal deviates via polar Box-Muller.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t chunk);

    std::uint64_t next_u64();
    double uniform01(); // in (0, 1)
    double normal();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0;
};

// Concrete unit vectors realizing an exact Gram matrix: n rows of length k
// with F F^T = gram within 1e-12.
struct EmbeddingFactor {
    int n = 0;
    int k = 0;
    std::vector<double> rows; // row-major n*k
    double residual = 0;      // max |F F^T - gram|

    const double* row(int i) const { return rows.data() + static_cast<std::size_t>(i) * k; }
};

// Expresses each projected class in the simple-root frame (exact rational
// coordinates), factors the k x k root Gram, and rescales rows to unit
// length. Throws NumericError if the residual exceeds 1e-12.
EmbeddingFactor factorize_embedding(const Embedding& e);

// Rank-revealing factorization of an arbitrary PSD rational Gram; used for
// toy inputs and as an independent route in tests.
EmbeddingFactor factorize_gram(const std::vector<Rational>& gram, int n);

// One random-hyperplane cut: vertex i lands in S iff g . f(i) >= 0.
Cut sample_cut(const EmbeddingFactor& f, RandomStream& stream);

struct CutStats {
    std::uint64_t samples = 0;
    double mean = 0;
    Rational max_weight;
    Cut max_witness{1};
    double cv = 0;      // sample standard deviation / mean
    double stddev = 0;
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 0;
    bool degenerate = false; // every sampled cut had the same weight
};

// Seeded Monte-Carlo rounding. Bit-identical output for identical
// (seed, samples, chunk_size) regardless of thread count. If hard_upper is
// set, any sampled cut exceeding it throws CertificateError.
CutStats simulate(const Multigraph& g, const EmbeddingFactor& f, std::uint64_t samples,
                  std::uint64_t seed, const std::optional<Int>& hard_upper = std::nullopt,
                  int threads = 1, std::uint64_t chunk_size = 8192);

} // namespace mmc
