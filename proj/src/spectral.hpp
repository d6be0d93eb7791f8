#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multigraph.hpp"
#include "picard.hpp"
#include "rational.hpp"

namespace mmc {

// Fitted strong-regularity parameters of a multigraph:
//   (M^2)_ij = a M_ij + b  (i != j),   (M^2)_ii = c,   row sums = d.
struct SrmgCertificate {
    Rational a, b, c, d;
    int n = 0;

    bool operator==(const SrmgCertificate& o) const = default;
};

// Fits (a, b) from M^2, then re-verifies every entry and every row sum.
// Throws CertificateError with the violating entry if the graph is not
// strongly regular; requires n >= 3.
SrmgCertificate verify_srmg(const Multigraph& g);

// base + coef * sqrt(disc); rational iff coef == 0.
struct EigenValue {
    Rational base;
    Rational coef;
    Int disc;

    bool is_rational() const { return coef == 0; }
    const Rational& rational() const;
    double to_double() const;
    std::string to_string() const;
    bool operator==(const EigenValue& o) const = default;
};

struct Spectrum {
    // (value, multiplicity), ascending by value, multiplicities positive.
    std::vector<std::pair<EigenValue, Int>> values;

    Int order() const; // sum of multiplicities
    bool all_rational() const;
    Rational min_value() const; // requires all_rational
    Rational max_value() const;
    bool operator==(const Spectrum& o) const = default;
};

// The three-value spectrum {eta-, eta+, d} determined by a certificate,
// with eta-+/eta- the roots of eta^2 = a eta + (c - b) and multiplicities
// f-/f+ from the trace equations; degenerate two-value case handled.
// Throws CertificateError on non-integral multiplicities.
Spectrum spectrum_from_srmg(const SrmgCertificate& cert);

// Family closed forms: smallest value 1 + lambda, middle value 1, largest
// value the weighted degree d, with the family multiplicities.
Spectrum closed_form_spectrum(const MinusculeParams& p);

// Exact verification that prod_lambda (M - lambda I) = 0 over the distinct
// spectrum values and that trace(M^k) = sum f lambda^k for k = 0..3.
struct SpectrumProof {
    bool ok = false;
    std::string detail;
    int failed_power = -1;             // trace power that failed, if any
    std::pair<int, int> failed_entry{-1, -1}; // nonzero annihilator entry, if any
};
SpectrumProof verify_spectrum_exact(const Multigraph& g, const Spectrum& spec);

// Exact entrywise check of a quadratic matrix identity B^2 = x B + y J + z I
// for B = M - I. Returns whether it holds and the first violation.
struct QuadraticEquationCheck {
    bool holds = false;
    std::string detail;
};
QuadraticEquationCheck check_b_equation(const Multigraph& g, const Rational& x,
                                        const Rational& y, const Rational& z);

// Coefficients of the family quadratic equations for B = M - I:
// type A: B^2 = lambda_{s,r} B + eta_{s,r} J; type D: B^2 = (q - 2^{r-3}) J - 2^{r-3} B.
struct BEquationCoefficients {
    Rational lambda; // B coefficient
    Rational eta;    // J coefficient
};
BEquationCoefficients type_a_b_coefficients(int r, int s);
BEquationCoefficients type_d_b_coefficients(int r);

} // namespace mmc
