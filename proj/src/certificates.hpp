#pragma once

#include <string>
#include <vector>

#include "multigraph.hpp"
#include "picard.hpp"
#include "rational.hpp"
#include "spectral.hpp"

namespace mmc {

// Exact Gram matrix of the normalized projections
// f(V) = (V + K/delta) / sqrt((delta+kappa)/delta), in graph vertex order.
struct Embedding {
    MinusculeParams params;
    std::vector<PicardClass> classes;
    int n = 0;
    Rational phi;              // delta / (delta + kappa)
    std::vector<Rational> gram; // row-major n*n, unit diagonal
};

// Verifies the orbit invariants (X.X = -1, X.K = -kappa, K.K = kappa*delta)
// for every class and fills the Gram with 1 - phi (1 + U.V).
Embedding build_embedding(const MinusculeParams& p, const std::vector<PicardClass>& divs,
                          const Multigraph& g);

// Exact coordinates of each projected class in the simple-root basis
// (row-major n x rank); used to factor the embedding.
std::vector<Rational> embedding_root_coordinates(const Embedding& e);

// Positive-definite k x k Gram of the simple roots under the negated form.
std::vector<Rational> root_gram(const MinusculeParams& p);

// SD(f) computed both directly from the Gram and through the weight
// histogram closed form; the two routes must agree exactly.
Rational sd_primal(const Embedding& e, const Multigraph& g);

struct DualCertificate {
    Rational gamma;    // the constant entry -lambda1 of the dual vector
    Rational sd_star;  // (1/2) sum_{i<j} M_ij + n*gamma/4
    Rational lambda1;
    std::string feasibility; // reference to the verified spectrum
};

// Requires the spectrum to verify exactly against g (refuses otherwise):
// feasibility of gamma = -lambda1 is certified by the spectrum itself.
DualCertificate dual_certificate(const Multigraph& g, const Spectrum& spec);

struct DualityReport {
    Rational sd_primal;
    Rational sd_dual;
    Rational lambda1;
    bool equal = false;
    int n = 0;
};

// Full pipeline for one parameter set; throws CertificateError when the
// exact equality SD(f) = SD*(gamma) fails.
DualityReport verify_strong_duality(const MinusculeParams& p);

struct BoundsReport {
    double lower_raw = 0;   // ell(a,b,c)
    Rational upper_raw;     // u(a,b,c) = SD(f), exact
    Int lower_int;          // ceil(ell)
    Int upper_int;          // floor(u)
    bool lower_is_exact = false; // every arccos term was a rational angle
    Rational lower_exact;   // exact value of ell when lower_is_exact
};

// ell = E[W(f)] via the closed-form S_k sums. Rational-angle terms
// (arccos of 0, +-1/2, +-1) are split off exactly; the rest is evaluated
// in extended precision with a guard distance of 2^-30 from the nearest
// integer before rounding (precision escalates, then hard NumericError).
BoundsReport bounds_closed_form(const MinusculeParams& p);

struct AlphaConstant {
    double theta_star; // minimizer of (2/pi) theta / (1 - cos theta)
    double alpha;      // the minimum, ~0.878567
};

AlphaConstant gw_alpha_constant();

// (2/pi) * arccos(lambda1/d) / (1 - lambda1/d); needs -1 <= lambda1/d < 0.
double performance_ratio(const Rational& lambda1, const Rational& d);

// Exact rank of a rational matrix by fraction-free elimination.
int exact_rank(const std::vector<Rational>& mat, int n);

// Leading principal minors of a k x k rational matrix, exact.
std::vector<Rational> leading_principal_minors(const std::vector<Rational>& mat, int k);

} // namespace mmc
