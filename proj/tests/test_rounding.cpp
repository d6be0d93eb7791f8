#include <doctest.h>

#include <cmath>

#include "certificates.hpp"
#include "rounding.hpp"
#include "subset_models.hpp"

using namespace mmc;

namespace {

struct Pipeline {
    MinusculeParams p;
    std::vector<PicardClass> divs;
    Multigraph g;
    Embedding e;
    EmbeddingFactor f;

    explicit Pipeline(int a, int b, int c)
        : p(build_params(a, b, c)),
          divs(minus_one_divisors(p)),
          g(graph_from_divisors(divs, p)),
          e(build_embedding(p, divs, g)),
          f(factorize_embedding(e)) {}
};

} // namespace

TEST_CASE("embedding factors") {
    Pipeline e6(2, 3, 3);
    CHECK(e6.f.n == 27);
    CHECK(e6.f.k == 6);
    CHECK(e6.f.residual < 1e-12);

    Pipeline d5(2, 2, 3);
    CHECK(d5.f.k == 5);
    for (int i = 0; i < d5.f.n; ++i) {
        double norm = 0;
        for (int t = 0; t < d5.f.k; ++t) norm += d5.f.row(i)[t] * d5.f.row(i)[t];
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("factorizing an identity Gram returns identity rows") {
    const int n = 4;
    std::vector<Rational> gram(n * n, Rational(0));
    for (int i = 0; i < n; ++i) gram[static_cast<std::size_t>(i) * n + i] = 1;
    EmbeddingFactor f = factorize_gram(gram, n);
    CHECK(f.k == n);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t)
            CHECK(f.row(i)[t] == doctest::Approx(i == t ? 1.0 : 0.0).epsilon(1e-14));
}

TEST_CASE("sample_cut separates antipodal points and honors the tie rule") {
    EmbeddingFactor f;
    f.n = 3;
    f.k = 1;
    f.rows = {1.0, -1.0, 0.0}; // third point always lands in S (dot = 0)
    RandomStream stream(11, 0);
    for (int trial = 0; trial < 64; ++trial) {
        Cut cut = sample_cut(f, stream);
        CHECK(cut.contains(0) != cut.contains(1));
        CHECK(cut.contains(2));
    }
}

TEST_CASE("orthogonal rows land on both sides eventually") {
    EmbeddingFactor f;
    f.n = 2;
    f.k = 2;
    f.rows = {1.0, 0.0, 0.0, 1.0};
    RandomStream stream(3, 0);
    int same = 0, split = 0;
    for (int trial = 0; trial < 256; ++trial) {
        Cut cut = sample_cut(f, stream);
        (cut.contains(0) == cut.contains(1) ? same : split) += 1;
    }
    CHECK(same > 64);
    CHECK(split > 64);
}

TEST_CASE("a single edge with antipodal embedding is deterministic") {
    Multigraph g = Multigraph::from_edges({"u", "v"}, {{0, 1, Rational(1)}});
    EmbeddingFactor f;
    f.n = 2;
    f.k = 1;
    f.rows = {1.0, -1.0};
    CutStats stats = simulate(g, f, 500, 9);
    CHECK(stats.mean == 1.0);
    CHECK(stats.cv == 0.0);
    CHECK(stats.degenerate);
    CHECK(stats.max_weight == Rational(1));
}

TEST_CASE("simulation is deterministic and thread-count independent") {
    Pipeline a41(2, 1, 3);
    CutStats s1 = simulate(a41.g, a41.f, 20000, 1234);
    CutStats s2 = simulate(a41.g, a41.f, 20000, 1234);
    CutStats s4 = simulate(a41.g, a41.f, 20000, 1234, std::nullopt, 4);
    CHECK(s1.mean == s2.mean);
    CHECK(s1.cv == s2.cv);
    CHECK(s1.max_weight == s2.max_weight);
    CHECK(s1.max_witness == s2.max_witness);
    CHECK(s1.mean == s4.mean);
    CHECK(s1.max_weight == s4.max_weight);
    CHECK(s1.max_witness == s4.max_witness);

    CutStats other_seed = simulate(a41.g, a41.f, 20000, 77);
    CHECK(other_seed.mean != s1.mean); // the seed matters
}

TEST_CASE("type A (4,1) statistics against the expectation") {
    Pipeline a41(2, 1, 3);
    auto bounds = bounds_closed_form(a41.p);
    CutStats stats = simulate(a41.g, a41.f, 50000, 0, bounds.upper_int);
    const double expectation = 15 * std::acos(-2.0 / 3.0) / M_PI; // = ell(2,1,3)
    CHECK(std::abs(stats.mean - expectation) / expectation < 0.02);
    CHECK(stats.max_weight <= Rational(12));
    CHECK(stats.max_weight >= Rational(11));
    CHECK(stats.cv == doctest::Approx(0.071).epsilon(0.2));
    // GW guarantee with a 3-sigma slack
    double sd = to_double(bounds.upper_raw);
    double alpha = gw_alpha_constant().alpha;
    CHECK(stats.mean >= alpha * sd - 3 * stats.stddev / std::sqrt(50000.0));
    // witness weight is exact & the cut re-verifies
    CHECK(a41.g.cut_weight(stats.max_witness) == stats.max_weight);
}

TEST_CASE("hard upper bound is enforced") {
    Multigraph g = Multigraph::from_edges({"u", "v"}, {{0, 1, Rational(1)}});
    EmbeddingFactor f;
    f.n = 2;
    f.k = 1;
    f.rows = {1.0, -1.0};
    CHECK_THROWS_AS(simulate(g, f, 10, 0, Int(0)), CertificateError);
}

TEST_CASE("simulation input guards") {
    Pipeline a41(2, 1, 3);
    CHECK_THROWS_AS(simulate(a41.g, a41.f, 0, 0), DimensionError);
    CHECK_THROWS_AS(simulate(a41.g, a41.f, 10, 0, std::nullopt, 1, 0), DimensionError);
    EmbeddingFactor wrong;
    wrong.n = 3;
    wrong.k = 1;
    wrong.rows = {1, 1, 1};
    CHECK_THROWS_AS(simulate(a41.g, wrong, 10, 0), DimensionError);
}

TEST_CASE("residual guard fires on a corrupted factor") {
    Pipeline d5(2, 2, 3);
    Embedding broken = d5.e;
    broken.gram[1] += Rational(1, 2);
    broken.gram[static_cast<std::size_t>(broken.n)] += Rational(1, 2);
    CHECK_THROWS_AS(factorize_embedding(broken), NumericError);
}
