#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace mmc {

namespace {

using I64Mat = std::vector<std::int64_t>;

std::int64_t max_abs(const I64Mat& m) {
    std::int64_t best = 0;
    for (auto v : m) best = std::max(best, v < 0 ? -v : v);
    return best;
}

void guard_product(const I64Mat& a, const I64Mat& b, int n) {
    const double bound = static_cast<double>(n) * static_cast<double>(max_abs(a)) *
                         static_cast<double>(max_abs(b));
    if (bound > 4.0e18 / 2)
        throw SizeLimitError("exact matrix product would overflow int64");
}

I64Mat mat_mul(const I64Mat& a, const I64Mat& b, int n) {
    guard_product(a, b, n);
    I64Mat out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        const std::int64_t* arow = a.data() + static_cast<std::size_t>(i) * n;
        std::int64_t* orow = out.data() + static_cast<std::size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            std::int64_t aik = arow[k];
            if (aik == 0) continue;
            const std::int64_t* brow = b.data() + static_cast<std::size_t>(k) * n;
            for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

} // namespace

SrmgCertificate verify_srmg(const Multigraph& g) {
    const int n = g.n();
    if (n < 3) throw DimensionError("strong regularity needs at least 3 vertices");
    auto scaled = g.scaled_int_weights();
    const std::int64_t L = scaled.scale;
    const Rational L2 = Rational(L) * L;
    I64Mat sq = mat_mul(scaled.w, scaled.w, n);

    auto m_at = [&](int i, int j) {
        return Rational(scaled.w[static_cast<std::size_t>(i) * n + j], L);
    };
    auto sq_at = [&](int i, int j) {
        return Rational(sq[static_cast<std::size_t>(i) * n + j]) / L2;
    };

    // Fit (a, b) from two off-diagonal entries with distinct weights;
    // normalize a = 0 when only one weight value occurs.
    Rational w1 = m_at(0, 1), s1 = sq_at(0, 1);
    Rational a = 0, b = s1;
    bool second_found = false;
    for (int i = 0; i < n && !second_found; ++i)
        for (int j = i + 1; j < n && !second_found; ++j) {
            Rational w2 = m_at(i, j);
            if (w2 == w1) continue;
            a = (s1 - sq_at(i, j)) / (w1 - w2);
            b = s1 - a * w1;
            second_found = true;
        }

    Rational c = sq_at(0, 0);
    Rational d = g.weighted_degree(0);
    for (int i = 0; i < n; ++i) {
        if (sq_at(i, i) != c)
            throw CertificateError("not strongly regular: (M^2)_{" + std::to_string(i) + "," +
                                   std::to_string(i) + "} = " + to_fraction(sq_at(i, i)) +
                                   ", expected " + to_fraction(c));
        Rational di = g.weighted_degree(i);
        if (di != d)
            throw CertificateError("not strongly regular: row sum " + to_fraction(di) +
                                   " at vertex " + std::to_string(i) + ", expected " +
                                   to_fraction(d));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational expected = a * m_at(i, j) + b;
            Rational actual = sq_at(i, j);
            if (expected != actual)
                throw CertificateError("not strongly regular at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "): expected " + to_fraction(expected) +
                                       ", actual " + to_fraction(actual));
        }
    }
    return SrmgCertificate{a, b, c, d, n};
}

const Rational& EigenValue::rational() const {
    if (!is_rational()) throw UnsupportedError("eigenvalue is not rational");
    return base;
}

double EigenValue::to_double() const {
    double v = mmc::to_double(base);
    if (coef != 0) v += mmc::to_double(coef) * std::sqrt(disc.convert_to<double>());
    return v;
}

std::string EigenValue::to_string() const {
    if (is_rational()) return to_fraction(base);
    return to_fraction(base) + " + (" + to_fraction(coef) + ")*sqrt(" + disc.str() + ")";
}

Int Spectrum::order() const {
    Int total = 0;
    for (const auto& [v, f] : values) total += f;
    return total;
}

bool Spectrum::all_rational() const {
    return std::all_of(values.begin(), values.end(),
                       [](const auto& p) { return p.first.is_rational(); });
}

Rational Spectrum::min_value() const {
    if (values.empty()) throw DimensionError("empty spectrum");
    return values.front().first.rational();
}

Rational Spectrum::max_value() const {
    if (values.empty()) throw DimensionError("empty spectrum");
    return values.back().first.rational();
}

namespace {

void push_value(std::vector<std::pair<EigenValue, Int>>& vals, const EigenValue& v, const Int& f) {
    if (f == 0) return;
    for (auto& [ev, mult] : vals)
        if (ev == v) {
            mult += f;
            return;
        }
    vals.emplace_back(v, f);
}

void sort_values(std::vector<std::pair<EigenValue, Int>>& vals) {
    std::sort(vals.begin(), vals.end(), [](const auto& x, const auto& y) {
        if (x.first.is_rational() && y.first.is_rational())
            return x.first.base < y.first.base;
        return x.first.to_double() < y.first.to_double();
    });
}

Int require_integer(const Rational& f, const char* what) {
    if (den(f) != 1 || f < 0)
        throw CertificateError(std::string(what) + " multiplicity " + to_fraction(f) +
                               " is not a nonnegative integer; the certificate cannot come "
                               "from a real graph");
    return num(f);
}

} // namespace

Spectrum spectrum_from_srmg(const SrmgCertificate& cert) {
    const int n = cert.n;
    Spectrum spec;
    Rational disc = cert.a * cert.a + 4 * (cert.c - cert.b);
    if (disc < 0)
        throw CertificateError("eta^2 = a eta + (c - b) has no real roots (discriminant " +
                               to_fraction(disc) + ")");
    if (disc == 0) {
        Rational eta = cert.a / 2;
        if (Rational(n - 1) * eta + cert.d != 0)
            throw CertificateError("two-value spectrum fails the trace identity");
        push_value(spec.values, EigenValue{eta, 0, 0}, n - 1);
        push_value(spec.values, EigenValue{cert.d, 0, 0}, 1);
        sort_values(spec.values);
        return spec;
    }
    if (auto root = rational_sqrt(disc)) {
        Rational eta_minus = (cert.a - *root) / 2;
        Rational eta_plus = (cert.a + *root) / 2;
        Rational gap = eta_plus - eta_minus;
        Int f_minus = require_integer((cert.d + Rational(n - 1) * eta_plus) / gap, "eta-");
        Int f_plus = require_integer(-(cert.d + Rational(n - 1) * eta_minus) / gap, "eta+");
        if (f_minus + f_plus != n - 1)
            throw CertificateError("multiplicities do not sum to n - 1");
        push_value(spec.values, EigenValue{eta_minus, 0, 0}, f_minus);
        push_value(spec.values, EigenValue{eta_plus, 0, 0}, f_plus);
        push_value(spec.values, EigenValue{cert.d, 0, 0}, 1);
        sort_values(spec.values);
        return spec;
    }
    // Irrational pair: conjugate eigenvalues force equal multiplicities.
    if (cert.d + Rational(n - 1) * cert.a / 2 != 0 || (n - 1) % 2 != 0)
        throw CertificateError("irrational eigenvalue pair with unequal multiplicities");
    Int q = den(disc);
    Int surd = num(disc) * q; // sqrt(p/q) = sqrt(pq)/q
    Rational half_inv_q = Rational(1, 2 * q);
    push_value(spec.values, EigenValue{cert.a / 2, -half_inv_q, surd}, (n - 1) / 2);
    push_value(spec.values, EigenValue{cert.a / 2, half_inv_q, surd}, (n - 1) / 2);
    push_value(spec.values, EigenValue{cert.d, 0, 0}, 1);
    sort_values(spec.values);
    return spec;
}

Spectrum closed_form_spectrum(const MinusculeParams& p) {
    auto make = [](const Rational& low, const Int& f_low, const Int& f_mid, const Rational& top) {
        Spectrum s;
        Int f_top = 1;
        s.values = {{EigenValue{low, 0, 0}, f_low},
                    {EigenValue{1, 0, 0}, f_mid},
                    {EigenValue{top, 0, 0}, f_top}};
        return s;
    };
    switch (p.family) {
        case Family::TypeA: {
            const int r = p.r, s = p.s();
            Int n = binomial(r + s, r - 1);
            Rational low = Rational(1) - Rational(binomial(r + s - 2, r - 2));
            Rational d = Rational(s + 1) * binomial(r + s - 1, r - 2) - n + 1;
            return make(low, r + s - 1, n - (r + s), d);
        }
        case Family::TypeD: {
            const int r = p.r;
            Int n = pow2(r - 1);
            Rational low = Rational(1) - pow2(r - 3);
            Rational d = Rational(1) + Rational(r - 4) * pow2(r - 3);
            return make(low, r, n - (r + 1), d);
        }
        case Family::E6: return make(-5, 6, 20, 10);
        case Family::E7: return make(-11, 7, 48, 29);
    }
    throw UnsupportedError("unknown family");
}

SpectrumProof verify_spectrum_exact(const Multigraph& g, const Spectrum& spec) {
    if (!spec.all_rational())
        throw UnsupportedError("exact spectrum verification needs rational eigenvalues");
    const int n = g.n();
    SpectrumProof proof;
    if (spec.order() != n) {
        proof.detail = "multiplicities sum to " + spec.order().str() + ", not n = " +
                       std::to_string(n);
        return proof;
    }

    auto scaled = g.scaled_int_weights();
    Int lcm = scaled.scale;
    for (const auto& [v, f] : spec.values) lcm = boost::multiprecision::lcm(lcm, den(v.base));
    if (lcm > std::numeric_limits<std::int64_t>::max() / 8)
        throw SizeLimitError("common denominator too large for the integer fast path");
    const std::int64_t L = lcm.convert_to<std::int64_t>();
    const std::int64_t extra = L / scaled.scale;

    I64Mat m(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = scaled.w[i] * extra;
    std::vector<std::int64_t> lam;
    lam.reserve(spec.values.size());
    for (const auto& [v, f] : spec.values)
        lam.push_back((num(v.base) * (L / den(v.base))).convert_to<std::int64_t>());

    // Annihilator: prod_t (L M - lambda'_t I) over the distinct values.
    I64Mat acc = m;
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] -= lam[0];
    for (std::size_t t = 1; t < lam.size(); ++t) {
        I64Mat factor = m;
        for (int i = 0; i < n; ++i) factor[static_cast<std::size_t>(i) * n + i] -= lam[t];
        acc = mat_mul(acc, factor, n);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (acc[static_cast<std::size_t>(i) * n + j] != 0) {
                proof.failed_entry = {i, j};
                proof.detail = "annihilator product is nonzero at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")";
                return proof;
            }

    // Moment checks trace(M^k) = sum f lambda^k for k = 0..3 pin the
    // multiplicities uniquely for three distinct values.
    I64Mat sq = mat_mul(m, m, n);
    Int tr2 = 0, tr3 = 0, tr1 = 0;
    for (int i = 0; i < n; ++i) {
        tr1 += m[static_cast<std::size_t>(i) * n + i];
        tr2 += sq[static_cast<std::size_t>(i) * n + i];
        for (int j = 0; j < n; ++j)
            tr3 += Int(sq[static_cast<std::size_t>(i) * n + j]) *
                   m[static_cast<std::size_t>(j) * n + i];
    }
    const Rational Lq(L);
    const Rational traces[4] = {Rational(n), Rational(tr1) / Lq, Rational(tr2) / (Lq * Lq),
                                Rational(tr3) / (Lq * Lq * Lq)};
    for (int k = 0; k <= 3; ++k) {
        Rational sum = 0;
        for (const auto& [v, f] : spec.values) {
            Rational pw = 1;
            for (int t = 0; t < k; ++t) pw *= v.base;
            sum += Rational(f) * pw;
        }
        if (sum != traces[k]) {
            proof.failed_power = k;
            proof.detail = "trace(M^" + std::to_string(k) + ") = " + to_fraction(traces[k]) +
                           " but the spectrum gives " + to_fraction(sum);
            return proof;
        }
    }
    proof.ok = true;
    proof.detail = "verified";
    return proof;
}

QuadraticEquationCheck check_b_equation(const Multigraph& g, const Rational& x, const Rational& y,
                                        const Rational& z) {
    const int n = g.n();
    auto scaled = g.scaled_int_weights();
    const std::int64_t L = scaled.scale;
    I64Mat bmat = scaled.w;
    for (int i = 0; i < n; ++i) bmat[static_cast<std::size_t>(i) * n + i] -= L; // B = M - I
    I64Mat sq = mat_mul(bmat, bmat, n);
    const Rational L2 = Rational(L) * L;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational lhs = Rational(sq[static_cast<std::size_t>(i) * n + j]) / L2;
            Rational rhs = x * Rational(bmat[static_cast<std::size_t>(i) * n + j], L) + y +
                           (i == j ? z : Rational(0));
            if (lhs != rhs) {
                QuadraticEquationCheck chk;
                chk.holds = false;
                chk.detail = "B^2 entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is " + to_fraction(lhs) + ", expected " + to_fraction(rhs);
                return chk;
            }
        }
    return QuadraticEquationCheck{true, "holds"};
}

BEquationCoefficients type_a_b_coefficients(int r, int s) {
    Rational lambda = -Rational(binomial(r + s - 2, r - 2));
    Rational eta = Rational(s) * s * binomial(r + s - 2, r - 3) -
                   Rational(s) * binomial(r + s - 2, r - 2) + Rational(binomial(r + s - 2, r - 1));
    return {lambda, eta};
}

BEquationCoefficients type_d_b_coefficients(int r) {
    if (r < 5) throw DimensionError("type D quadratic equation needs r >= 5");
    Rational q = Rational(static_cast<long long>(r) * r - 7 * r + 16) * pow2(r - 5);
    Rational half = Rational(pow2(r - 3));
    return {-half, q - half};
}

} // namespace mmc
