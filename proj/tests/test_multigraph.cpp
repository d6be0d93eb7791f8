#include <doctest.h>

#include "multigraph.hpp"
#include "picard.hpp"
#include "rounding.hpp"
#include "subset_models.hpp"

using namespace mmc;

namespace {

Multigraph single_edge(const Rational& w) {
    return Multigraph::from_edges({"u", "v"}, {{0, 1, w}});
}

// Deterministic random multigraph with small rational weights.
Multigraph random_graph(int n, std::uint64_t seed) {
    RandomStream rng(seed, 0);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::tuple<int, int, Rational>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t x = rng.next_u64();
            if (x % 3 == 0) continue; // leave some pairs empty
            Rational w(static_cast<long long>(x % 7), static_cast<long long>(1 + x % 4));
            if (w != 0) edges.emplace_back(i, j, w);
        }
    return Multigraph::from_edges(std::move(labels), edges);
}

Cut random_cut(int n, std::uint64_t seed) {
    RandomStream rng(seed, 1);
    Cut c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c.set(static_cast<std::size_t>(i), rng.next_u64() & 1);
    return c;
}

} // namespace

TEST_CASE("cut weight on a single edge") {
    Multigraph g = single_edge(2);
    CHECK(g.cut_weight(Cut::from_members(2, {1})) == Rational(2));
    CHECK(g.cut_weight(Cut(2)) == Rational(0));        // empty side
    CHECK(g.cut_weight(Cut::from_members(2, {0, 1})) == Rational(0));
}

TEST_CASE("cut weight of a singleton equals the row sum") {
    Multigraph g = build_type_a(4, 1);
    // independent oracle: sum the first row of the weight matrix
    Rational row = 0;
    for (int j = 1; j < g.n(); ++j) row += g.weight(0, j);
    CHECK(row == Rational(3));
    CHECK(g.cut_weight(Cut::from_members(static_cast<std::size_t>(g.n()), {0})) == row);
}

TEST_CASE("cut length mismatch is rejected") {
    Multigraph g = single_edge(1);
    CHECK_THROWS_AS(g.cut_weight(Cut(3)), DimensionError);
}

TEST_CASE("weight histograms of the exceptional graphs") {
    Multigraph e6 = build_lattice_graph(build_params(2, 3, 3));
    auto h6 = e6.weight_histogram();
    CHECK(h6.count(1) == 135);
    CHECK(h6.count(2) == 0);

    Multigraph e7 = build_lattice_graph(build_params(2, 4, 3));
    auto h7 = e7.weight_histogram();
    CHECK(h7.count(1) == 756);
    CHECK(h7.count(2) == 28);
}

TEST_CASE("type A (4,1) histogram matches the closed form") {
    // S_k = (1/2) C(5,3) C(2,k+1) C(3,2-k)
    Multigraph g = build_type_a(4, 1);
    auto h = g.weight_histogram();
    CHECK(h.count(1) == 15);
    CHECK(h.zero_pairs == 30);
    CHECK(h.total_pairs() == 45);
}

TEST_CASE("weighted degree") {
    Multigraph e6 = build_lattice_graph(build_params(2, 3, 3));
    for (int i = 0; i < e6.n(); ++i) CHECK(e6.weighted_degree(i) == Rational(10));

    Multigraph d5 = build_type_d(5);
    for (int i = 0; i < d5.n(); ++i) CHECK(d5.weighted_degree(i) == Rational(5));

    Multigraph lone({"x"}, {Rational(0)});
    CHECK(lone.weighted_degree(0) == Rational(0));
    CHECK_THROWS_AS(lone.weighted_degree(1), DimensionError);
}

TEST_CASE("complement symmetry and total-weight bound") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Multigraph g = random_graph(9, seed);
        Rational total = g.total_weight();
        for (std::uint64_t cs = 0; cs < 4; ++cs) {
            Cut cut = random_cut(g.n(), seed * 17 + cs);
            Rational w = g.cut_weight(cut);
            CHECK(w == g.cut_weight(cut.complement()));
            CHECK(w <= total);
        }
    }
}

TEST_CASE("histogram pair count identity") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Multigraph g = random_graph(11, seed + 100);
        Int n = g.n();
        CHECK(g.weight_histogram().total_pairs() == n * (n - 1) / 2);
    }
}

TEST_CASE("construction validates the matrix") {
    CHECK_THROWS_AS(Multigraph({"a", "b"}, {Rational(1), Rational(0), Rational(0), Rational(0)}),
                    DimensionError); // nonzero diagonal
    CHECK_THROWS_AS(Multigraph({"a", "b"}, {Rational(0), Rational(1), Rational(2), Rational(0)}),
                    DimensionError); // asymmetric
    CHECK_THROWS_AS(Multigraph({"a", "b"}, {Rational(0), Rational(-1), Rational(-1), Rational(0)}),
                    DimensionError); // negative
    CHECK_THROWS_AS(Multigraph({"a", "a"}, std::vector<Rational>(4, Rational(0))),
                    DimensionError); // duplicate labels
}

TEST_CASE("graph JSON round trip is byte-deterministic") {
    Multigraph g = random_graph(7, 42);
    std::string j1 = g.to_json();
    std::string j2 = g.to_json();
    CHECK(j1 == j2);
    Multigraph back = Multigraph::from_json(j1);
    CHECK(back == g);
    CHECK(back.to_json() == j1);
}

TEST_CASE("graph JSON rejects malformed input") {
    CHECK_THROWS_AS(Multigraph::from_json("{"), ParseError);
    CHECK_THROWS_AS(Multigraph::from_json("{\"n\": 2}"), ParseError);
    CHECK_THROWS_AS(Multigraph::from_json(
                        "{\"n\": 2, \"labels\": [\"a\"], \"edges\": []}"),
                    ParseError);
}

TEST_CASE("cut hex round trip") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Cut c = random_cut(67, seed);
        CHECK(Cut::from_hex(67, c.to_hex()) == c);
    }
    CHECK(Cut(5).to_hex() == "0");
    CHECK(Cut::from_members(5, {0, 2}).to_hex() == "5");
    CHECK_THROWS_AS(Cut::from_hex(3, "ff"), DimensionError); // wider than n
    CHECK_THROWS_AS(Cut::from_hex(3, "zz"), ParseError);
    CHECK_THROWS_AS(Cut::from_mask(3, 0xff), DimensionError);
}

TEST_CASE("fraction strings") {
    CHECK(to_fraction(Rational(405, 4)) == "405/4");
    CHECK(to_fraction(Rational(560)) == "560");
    CHECK(parse_fraction("405/4") == Rational(405, 4));
    CHECK(parse_fraction("-5") == Rational(-5));
    CHECK_THROWS_AS(parse_fraction("x/y"), ParseError);
    CHECK_THROWS_AS(parse_fraction("1/0"), ParseError);
}
