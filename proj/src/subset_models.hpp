#pragma once

#include <string>
#include <vector>

#include "multigraph.hpp"
#include "picard.hpp"
#include "rational.hpp"

namespace mmc {

// All t-subsets of {1..m} in lexicographic order of the sorted tuples,
// each subset encoded as a bitmask (bit i-1 <=> element i).
std::vector<std::uint64_t> subsets_lex(int m, int t);

// All even-cardinality subsets of {1..m} in the same order.
std::vector<std::uint64_t> even_subsets_lex(int m);

std::string subset_label(std::uint64_t mask, int m);

// Vertices: the (r-1)-subsets of [r+s]; weight(T,S) = |T^c cap S| - 1.
Multigraph build_type_a(int r, int s, std::size_t max_vertices = 1u << 20);

// Vertices: the even subsets of [r]; weight(T,S) = |T xor S|/2 - 1.
Multigraph build_type_d(int r, std::size_t max_vertices = 1u << 20);

// Dispatches on the family; E6/E7 have no subset model.
Multigraph build_model_graph(const MinusculeParams& p);

// Closed-form count of weight-k vertex pairs (k = 0 counts the
// zero-weight pairs). Zero outside the valid range.
Int s_k_closed_form(const MinusculeParams& p, long long k);

// Unnormalized weight coordinates of one vertex together with the common
// exact squared norm ("norm_sq") shared by all vertices of the model.
struct WeightVector {
    std::vector<Rational> coords;
    Rational norm_sq;
};

// TypeA: (s+1) on J and (1-r) off J in R^{r+s}, norm^2 = (r+s)(s+1)(r-1).
// TypeD: +1 on J and -1 off J in R^r, norm^2 = r.
std::vector<WeightVector> weight_coordinates(const MinusculeParams& p);

struct AgreementReport {
    bool agree = false;
    std::string detail;              // first disagreement, or "ok"
    bool bijection_checked = false;  // explicit search ran
    std::vector<int> bijection;      // lattice vertex -> model vertex
};

// Invariant-level comparison of the lattice graph against the subset model
// (vertex count, histogram, per-vertex weight profiles, SRMG certificate),
// plus an explicit weight-preserving bijection search when n <= explicit_bound.
AgreementReport check_model_agreement(const MinusculeParams& p, int explicit_bound = 64);

// Weight-preserving vertex bijection between two multigraphs by backtracking;
// empty result if none exists.
std::vector<int> find_isomorphism(const Multigraph& g1, const Multigraph& g2);

} // namespace mmc
