#include <doctest.h>

#include "oracle.hpp"
#include "picard.hpp"
#include "rounding.hpp"
#include "subset_models.hpp"

using namespace mmc;

namespace {

Multigraph random_rational_graph(int n, std::uint64_t seed) {
    RandomStream rng(seed, 0);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::tuple<int, int, Rational>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t x = rng.next_u64();
            if (x % 4 == 0) continue;
            edges.emplace_back(i, j, Rational(static_cast<long long>(x % 9),
                                              static_cast<long long>(1 + (x >> 8) % 5)));
        }
    return Multigraph::from_edges(std::move(labels), edges);
}

// Independent oracle: evaluate every cut directly with exact arithmetic.
Rational naive_maxcut(const Multigraph& g) {
    const int n = g.n();
    Rational best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        Cut cut(static_cast<std::size_t>(n));
        for (int v = 1; v < n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) cut.set(static_cast<std::size_t>(v), true);
        Rational w = g.cut_weight(cut);
        if (w > best) best = w;
    }
    return best;
}

} // namespace

TEST_CASE("brute force on the named graphs") {
    Multigraph quintic = build_lattice_graph(build_params(2, 1, 3));
    auto res = brute_force_maxcut(quintic);
    CHECK(res.value == Rational(12));
    CHECK(res.exact);
    CHECK(quintic.cut_weight(res.witness) == Rational(12));
    CHECK_FALSE(res.witness.contains(0)); // vertex 0 stays outside S

    auto d5 = brute_force_maxcut(build_type_d(5));
    CHECK(d5.value == Rational(32));

    auto a42 = brute_force_maxcut(build_type_a(4, 2));
    CHECK(a42.value == Rational(80));
}

TEST_CASE("single edge") {
    Multigraph g = Multigraph::from_edges({"u", "v"}, {{0, 1, Rational(1)}});
    CHECK(brute_force_maxcut(g).value == Rational(1));
    CHECK(local_search_maxcut(g, 1, 0).value == Rational(1));
}

TEST_CASE("gray-code scan equals naive enumeration on random rational graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Multigraph g = random_rational_graph(12, seed);
        CHECK(brute_force_maxcut(g).value == naive_maxcut(g));
    }
}

TEST_CASE("brute force is thread-count independent") {
    Multigraph g = build_type_a(4, 2);
    auto serial = brute_force_maxcut(g, 30, 1);
    auto parallel = brute_force_maxcut(g, 30, 4);
    CHECK(serial.value == parallel.value);
    CHECK(serial.witness == parallel.witness);
}

TEST_CASE("brute force size limit") {
    Multigraph g = build_type_d(6); // 32 vertices
    CHECK_THROWS_AS(brute_force_maxcut(g, 30), SizeLimitError);
}

TEST_CASE("local search properties") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Multigraph g = random_rational_graph(11, seed + 500);
        auto exact = brute_force_maxcut(g);
        auto local = local_search_maxcut(g, 40, seed);
        CHECK(local.value <= exact.value);
        CHECK_FALSE(local.exact);
        CHECK(g.cut_weight(local.witness) == local.value);
        // local optimality: no single flip improves, checked exactly
        for (int v = 0; v < g.n(); ++v) {
            Cut flipped = local.witness;
            flipped.set(static_cast<std::size_t>(v), !flipped.contains(static_cast<std::size_t>(v)));
            CHECK(g.cut_weight(flipped) <= local.value);
        }
    }
}

TEST_CASE("local search matches brute force on the constructed graphs") {
    for (auto [a, b, c] : {std::tuple{2, 1, 3}, {2, 1, 4}, {3, 1, 3}, {2, 2, 3}}) {
        Multigraph g = build_lattice_graph(build_params(a, b, c));
        REQUIRE(g.n() <= 20);
        CHECK(local_search_maxcut(g, 100, 7).value == brute_force_maxcut(g).value);
    }
}

TEST_CASE("local search is deterministic") {
    Multigraph g = random_rational_graph(15, 99);
    auto r1 = local_search_maxcut(g, 25, 4);
    auto r2 = local_search_maxcut(g, 25, 4);
    CHECK(r1.value == r2.value);
    CHECK(r1.witness == r2.witness);
    CHECK_FALSE(r1.witness.contains(0));
}

TEST_CASE("oracle input guards") {
    Multigraph g = random_rational_graph(6, 1);
    CHECK_THROWS_AS(local_search_maxcut(g, 0, 0), DimensionError);
}
