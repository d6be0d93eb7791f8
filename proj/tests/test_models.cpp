#include <doctest.h>

#include <bit>

#include "subset_models.hpp"

using namespace mmc;

TEST_CASE("type A model basics") {
    Multigraph g41 = build_type_a(4, 1);
    CHECK(g41.n() == 10);
    auto h = g41.weight_histogram();
    CHECK(h.count(1) == 15);
    CHECK(h.zero_pairs == 30);
    // Kneser pattern: weight 1 iff the complement 2-sets are disjoint.
    auto verts = subsets_lex(5, 3);
    const std::uint64_t full = (1u << 5) - 1;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            bool disjoint = ((full & ~verts[static_cast<std::size_t>(i)]) &
                             (full & ~verts[static_cast<std::size_t>(j)])) == 0;
            CHECK(g41.weight(i, j) == Rational(disjoint ? 1 : 0));
        }

    Multigraph g42 = build_type_a(4, 2);
    CHECK(g42.n() == 20);
    for (int i = 0; i < g42.n(); ++i)
        for (int j = i + 1; j < g42.n(); ++j) {
            CHECK(g42.weight(i, j) >= 0);
            CHECK(g42.weight(i, j) <= 2);
        }

    Multigraph g51 = build_type_a(5, 1);
    CHECK(g51.n() == 15);
    CHECK(g51.weight_histogram().count(1) == 45);
}

TEST_CASE("type D model basics") {
    Multigraph d5 = build_type_d(5);
    CHECK(d5.n() == 16);
    CHECK(d5.weight_histogram().count(1) == 40);
    // lex order starts {}, {1,2}: M({}, {1,2}) = |{1,2}|/2 - 1 = 0
    CHECK(d5.label(0) == "{}");
    CHECK(d5.label(1) == "{1,2}");
    CHECK(d5.weight(0, 1) == Rational(0));

    Multigraph d6 = build_type_d(6);
    CHECK(d6.n() == 32);
    for (int i = 0; i < d6.n(); ++i) CHECK(d6.weighted_degree(i) == Rational(17));
}

TEST_CASE("model construction guards") {
    CHECK_THROWS_AS(build_type_d(4), InvalidParamsError);
    CHECK_THROWS_AS(build_type_a(2, 1), InvalidParamsError);
    CHECK_THROWS_AS(build_type_a(4, 0), InvalidParamsError);
    CHECK_THROWS_AS(build_type_a(10, 10, 1000), SizeLimitError);
    CHECK_THROWS_AS(build_model_graph(build_params(2, 3, 3)), UnsupportedError);
}

TEST_CASE("S_k closed forms") {
    CHECK(s_k_closed_form(build_params(2, 1, 3), 1) == 15);
    CHECK(s_k_closed_form(build_params(2, 1, 3), 0) == 30);
    CHECK(s_k_closed_form(build_params(2, 2, 3), 1) == 40);
    CHECK(s_k_closed_form(build_params(2, 4, 3), 2) == 28);
    CHECK(s_k_closed_form(build_params(2, 4, 3), 5) == 0);
}

TEST_CASE("S_k closed forms match the built histograms") {
    for (auto [a, b, c] : {std::tuple{2, 1, 3}, {3, 1, 3}, {3, 1, 4}, {2, 2, 3}, {2, 2, 4}}) {
        auto p = build_params(a, b, c);
        auto h = build_model_graph(p).weight_histogram();
        CHECK(Int(h.zero_pairs) == s_k_closed_form(p, 0));
        for (long long k = 1; k <= 8; ++k) CHECK(h.count(Rational(k)) == s_k_closed_form(p, k));
    }
    for (auto [a, b, c] : {std::tuple{2, 3, 3}, {2, 4, 3}}) {
        auto p = build_params(a, b, c);
        auto h = build_lattice_graph(p).weight_histogram();
        CHECK(Int(h.zero_pairs) == s_k_closed_form(p, 0));
        for (long long k = 1; k <= 8; ++k) CHECK(h.count(Rational(k)) == s_k_closed_form(p, k));
    }
}

TEST_CASE("type A histogram identities up to r+s = 12") {
    for (int r = 3; r <= 11; ++r)
        for (int s = 1; r + s <= 12; ++s) {
            Int n = binomial(r + s, r - 1);
            Int sum = 0, weighted = 0, pairs = 0;
            for (long long k = 0; k <= s; ++k) {
                Int sk = binomial(r + s, r - 1) * binomial(s + 1, k + 1) *
                         binomial(r - 1, r - 1 - (k + 1)) / 2;
                sum += sk;
                weighted += sk * (k + 1);
                pairs += sk * binomial(k + 1, 2);
            }
            CHECK(sum == n * (n - 1) / 2);
            CHECK(weighted == n * (s + 1) * binomial(r + s - 1, r - 2) / 2);
            CHECK(pairs == n * binomial(s + 1, 2) * binomial(r + s - 2, r - 3) / 2);
        }
}

TEST_CASE("even/odd subset moment identities up to r = 14") {
    for (int r = 3; r <= 14; ++r) {
        long long even[3] = {0, 0, 0}, odd[3] = {0, 0, 0};
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
            long long sz = std::popcount(mask);
            long long* tgt = (sz % 2 == 0) ? even : odd;
            tgt[0] += 1;
            tgt[1] += sz;
            tgt[2] += sz * sz;
        }
        for (int j = 0; j < 3; ++j) CHECK(even[j] == odd[j]);
        CHECK(Int(even[0]) == pow2(r - 1));
        CHECK(Int(even[1]) == Int(r) * pow2(r - 2));
        CHECK(Int(even[2]) == Int(r) * (r - 1) * pow2(r - 3) + Int(r) * pow2(r - 2));
    }
}

TEST_CASE("weighted Vandermonde identity up to s, m = 12") {
    for (long long s = 0; s <= 12; ++s)
        for (long long m = 1; m <= 12; ++m) {
            Int lhs = 0;
            for (long long j = 0; j <= s; ++j) lhs += Int(j) * binomial(s, j) * binomial(m, m - j);
            CHECK(lhs == Int(s) * binomial(m + s - 1, m - 1));
        }
}

TEST_CASE("weight coordinates") {
    auto d5 = build_params(2, 2, 3);
    auto vecs = weight_coordinates(d5);
    CHECK(vecs.size() == 16);
    CHECK(vecs[0].coords == std::vector<Rational>(5, Rational(-1))); // J = {} comes first
    CHECK(vecs[0].norm_sq == Rational(5));
    CHECK_THROWS_AS(weight_coordinates(build_params(2, 3, 3)), UnsupportedError);
}

TEST_CASE("weight-vector Gram reproduces the model weights") {
    // normalized dot = 1 - phi (1 + M(T,S)) with phi = (r+s)/((s+1)(r-1))
    // for type A and phi = 4/r for type D, exactly for all pairs
    for (auto [a, b, c] : {std::tuple{2, 1, 3}, {3, 1, 4}, {2, 2, 3}, {2, 2, 4}}) {
        auto p = build_params(a, b, c);
        auto vecs = weight_coordinates(p);
        Multigraph g = build_model_graph(p);
        Rational phi = Rational(p.delta) / (p.delta + p.kappa);
        REQUIRE(static_cast<int>(vecs.size()) == g.n());
        for (int i = 0; i < g.n(); ++i)
            for (int j = i; j < g.n(); ++j) {
                Rational dot = 0;
                for (std::size_t t = 0; t < vecs[static_cast<std::size_t>(i)].coords.size(); ++t)
                    dot += vecs[static_cast<std::size_t>(i)].coords[t] *
                           vecs[static_cast<std::size_t>(j)].coords[t];
                dot /= vecs[static_cast<std::size_t>(i)].norm_sq;
                if (i == j) CHECK(dot == Rational(1));
                else CHECK(dot == Rational(1) - phi * (1 + g.weight(i, j)));
            }
    }
}

TEST_CASE("model agreement") {
    auto rep_a = check_model_agreement(build_params(2, 1, 3));
    CHECK(rep_a.agree);
    CHECK(rep_a.bijection_checked);
    CHECK(rep_a.bijection.size() == 10);

    auto rep_d = check_model_agreement(build_params(2, 2, 3));
    CHECK(rep_d.agree);
    CHECK(rep_d.bijection_checked);

    // invariant-level only for a larger instance
    auto rep_big = check_model_agreement(build_params(2, 2, 5), 0);
    CHECK(rep_big.agree);
    CHECK_FALSE(rep_big.bijection_checked);

    CHECK_THROWS_AS(check_model_agreement(build_params(2, 3, 3)), UnsupportedError);
}

TEST_CASE("isomorphism search") {
    Multigraph g = build_type_a(4, 1);
    auto self = find_isomorphism(g, g);
    REQUIRE(self.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(self[static_cast<std::size_t>(i)] == i); // identity first

    Multigraph triangle = Multigraph::from_edges({"a", "b", "c"},
                                                 {{0, 1, Rational(1)}, {1, 2, Rational(1)},
                                                  {0, 2, Rational(1)}});
    Multigraph path = Multigraph::from_edges({"a", "b", "c"},
                                             {{0, 1, Rational(1)}, {1, 2, Rational(1)}});
    CHECK(find_isomorphism(triangle, path).empty());
}
