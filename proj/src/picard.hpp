#pragma once

#include <string>
#include <vector>

#include "multigraph.hpp"
#include "rational.hpp"

namespace mmc {

enum class Family { TypeA, TypeD, E6, E7 };

std::string family_name(Family f);

// Validated blow-up parameters with the derived quantities used everywhere:
// r = b + c, delta = bc + ac + ab - abc, kappa = ac - a - c.
struct MinusculeParams {
    int a, b, c;
    int r;
    long long delta;
    long long kappa;
    Family family;

    // Dimension of the root span, a + r - 2 (= rank of the root system).
    int rank() const { return a + r - 2; }

    // Subset-model shorthand for TypeA: (r, s) with s = a - 1.
    int s() const { return a - 1; }

    Int orbit_size() const;
};

// Rejects with InvalidParamsError: Kind::Range for violations of the
// standing assumptions (a,c >= 2, a <= c, c > 2 when a = 2), Kind::NotFinite
// when 1/a + 1/b + 1/c <= 1, Kind::NotMinuscule otherwise.
MinusculeParams build_params(int a, int b, int c);

// Integer point of Pic(X_{a,b,c}) in the (H_1..H_{a-1}, E_1..E_r) basis.
struct PicardClass {
    std::vector<long long> h;
    std::vector<long long> e;

    bool operator==(const PicardClass& o) const = default;
    bool operator<(const PicardClass& o) const;

    // "(h1,...,h_{a-1} ; e1,...,e_r)"
    std::string to_string() const;
};

PicardClass canonical_class(const MinusculeParams& p);

// Intersection form: E_i.E_j = -delta_ij, H_i.H_j = c - 1 - delta_ij,
// H_i.E_j = 0. Integer-valued on integer classes.
long long intersect(const PicardClass& u, const PicardClass& v, const MinusculeParams& p);

// Same bilinear form on rational coordinate vectors (used to cross-check
// the embedding against the literal projection q(V) = V + K/delta).
Rational intersect_rational(const std::vector<Rational>& h1, const std::vector<Rational>& e1,
                            const std::vector<Rational>& h2, const std::vector<Rational>& e2,
                            const MinusculeParams& p);

// The a + r - 2 simple roots alpha_1..alpha_{a+r-2}; each satisfies
// alpha.alpha = -2 and alpha.K = 0.
std::vector<PicardClass> simple_roots(const MinusculeParams& p);

// s_alpha(v) = v + (v.alpha) alpha, valid for roots with alpha.alpha = -2.
PicardClass reflect(const PicardClass& v, const PicardClass& alpha, const MinusculeParams& p);

// Weyl orbit of E_r under the simple reflections, deduplicated and sorted
// lexicographically by (h, e). Throws SizeLimitError past safety_bound.
std::vector<PicardClass> minus_one_divisors(const MinusculeParams& p,
                                            std::size_t safety_bound = 1000000);

// Multigraph on the given classes with weights U.V; labels are the
// coordinate strings. Distinct classes with U.V < 0 are a model violation.
Multigraph graph_from_divisors(const std::vector<PicardClass>& divs, const MinusculeParams& p);

// minus_one_divisors followed by graph_from_divisors.
Multigraph build_lattice_graph(const MinusculeParams& p);

} // namespace mmc
