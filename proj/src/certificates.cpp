#include "certificates.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "subset_models.hpp"

namespace mmc {

Embedding build_embedding(const MinusculeParams& p, const std::vector<PicardClass>& divs,
                          const Multigraph& g) {
    const int n = static_cast<int>(divs.size());
    if (g.n() != n) throw DimensionError("graph order does not match the divisor list");
    const PicardClass K = canonical_class(p);
    if (intersect(K, K, p) != p.kappa * p.delta)
        throw CertificateError("K.K != kappa*delta; the lattice model is inconsistent");
    for (const auto& X : divs) {
        if (intersect(X, X, p) != -1)
            throw CertificateError("orbit class " + X.to_string() + " has self-intersection != -1");
        if (intersect(X, K, p) != -p.kappa)
            throw CertificateError("orbit class " + X.to_string() + " has X.K != -kappa");
    }
    Embedding e;
    e.params = p;
    e.classes = divs;
    e.n = n;
    e.phi = Rational(p.delta) / (p.delta + p.kappa);
    e.gram.assign(static_cast<std::size_t>(n) * n, Rational(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long uv = intersect(divs[static_cast<std::size_t>(i)],
                                     divs[static_cast<std::size_t>(j)], p);
            if (Rational(uv) != g.weight(i, j))
                throw CertificateError("graph weight disagrees with the intersection product at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            Rational entry = Rational(1) - e.phi * (1 + uv);
            e.gram[static_cast<std::size_t>(i) * n + j] = entry;
            e.gram[static_cast<std::size_t>(j) * n + i] = entry;
        }
    return e;
}

std::vector<Rational> root_gram(const MinusculeParams& p) {
    auto roots = simple_roots(p);
    const int k = static_cast<int>(roots.size());
    std::vector<Rational> g(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            g[static_cast<std::size_t>(i) * k + j] =
                -intersect(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)], p);
    return g;
}

namespace {

// Gauss-Jordan inverse of a k x k rational matrix.
std::vector<Rational> invert(std::vector<Rational> m, int k) {
    std::vector<Rational> inv(static_cast<std::size_t>(k) * k, Rational(0));
    for (int i = 0; i < k; ++i) inv[static_cast<std::size_t>(i) * k + i] = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (m[static_cast<std::size_t>(row) * k + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw CertificateError("singular root Gram matrix");
        for (int j = 0; j < k; ++j) {
            std::swap(m[static_cast<std::size_t>(col) * k + j],
                      m[static_cast<std::size_t>(pivot) * k + j]);
            std::swap(inv[static_cast<std::size_t>(col) * k + j],
                      inv[static_cast<std::size_t>(pivot) * k + j]);
        }
        Rational p = m[static_cast<std::size_t>(col) * k + col];
        for (int j = 0; j < k; ++j) {
            m[static_cast<std::size_t>(col) * k + j] /= p;
            inv[static_cast<std::size_t>(col) * k + j] /= p;
        }
        for (int row = 0; row < k; ++row) {
            if (row == col) continue;
            Rational f = m[static_cast<std::size_t>(row) * k + col];
            if (f == 0) continue;
            for (int j = 0; j < k; ++j) {
                m[static_cast<std::size_t>(row) * k + j] -=
                    f * m[static_cast<std::size_t>(col) * k + j];
                inv[static_cast<std::size_t>(row) * k + j] -=
                    f * inv[static_cast<std::size_t>(col) * k + j];
            }
        }
    }
    return inv;
}

} // namespace

std::vector<Rational> embedding_root_coordinates(const Embedding& e) {
    const MinusculeParams& p = e.params;
    auto roots = simple_roots(p);
    const int k = static_cast<int>(roots.size());
    // Solve G0 c = b with G0 = (alpha_i . alpha_j) and b_t = q(V).alpha_t = V.alpha_t
    // (K is orthogonal to every root).
    std::vector<Rational> g0(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            g0[static_cast<std::size_t>(i) * k + j] = intersect(
                roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)], p);
    auto ginv = invert(std::move(g0), k);
    std::vector<Rational> coords(static_cast<std::size_t>(e.n) * k, Rational(0));
    for (int v = 0; v < e.n; ++v) {
        for (int t = 0; t < k; ++t) {
            Rational b = 0;
            for (int u = 0; u < k; ++u)
                b += ginv[static_cast<std::size_t>(t) * k + u] *
                     intersect(e.classes[static_cast<std::size_t>(v)],
                               roots[static_cast<std::size_t>(u)], p);
            coords[static_cast<std::size_t>(v) * k + t] = b;
        }
    }
    return coords;
}

Rational sd_primal(const Embedding& e, const Multigraph& g) {
    if (e.n != g.n()) throw DimensionError("embedding does not match the graph");
    Rational direct = 0;
    for (int i = 0; i < e.n; ++i)
        for (int j = i + 1; j < e.n; ++j)
            direct += g.weight(i, j) * (Rational(1) - e.gram[static_cast<std::size_t>(i) * e.n + j]) / 2;
    Rational closed = 0;
    for (const auto& [w, cnt] : g.weight_histogram().positive)
        closed += Rational(cnt) * w * (w + 1) / 2;
    closed *= e.phi;
    if (direct != closed)
        throw CertificateError("SD(f) routes disagree: direct " + to_fraction(direct) +
                               " vs closed form " + to_fraction(closed));
    return direct;
}

DualCertificate dual_certificate(const Multigraph& g, const Spectrum& spec) {
    SpectrumProof proof = verify_spectrum_exact(g, spec);
    if (!proof.ok)
        throw CertificateError("refusing to emit a dual certificate from an unverified "
                               "spectrum: " + proof.detail);
    DualCertificate cert;
    cert.lambda1 = spec.min_value();
    cert.gamma = -cert.lambda1;
    if (g.total_weight() > 0 && cert.gamma < 0)
        throw CertificateError("smallest eigenvalue is positive on a graph with edges");
    cert.sd_star = g.total_weight() / 2 + Rational(g.n()) * cert.gamma / 4;
    cert.feasibility = "exact spectrum verified; M + diag(gamma) has eigenvalues lambda - lambda1 >= 0";
    return cert;
}

DualityReport verify_strong_duality(const MinusculeParams& p) {
    auto divs = minus_one_divisors(p);
    Multigraph g = graph_from_divisors(divs, p);
    Embedding e = build_embedding(p, divs, g);
    Spectrum spec = closed_form_spectrum(p);
    DualCertificate dual = dual_certificate(g, spec);
    DualityReport rep;
    rep.sd_primal = sd_primal(e, g);
    rep.sd_dual = dual.sd_star;
    rep.lambda1 = dual.lambda1;
    rep.n = g.n();
    rep.equal = rep.sd_primal == rep.sd_dual;
    if (!rep.equal)
        throw CertificateError("strong duality fails: SD(f) = " + to_fraction(rep.sd_primal) +
                               " but SD* = " + to_fraction(rep.sd_dual));
    return rep;
}

namespace {

// arccos(x)/pi for the rational angles of Niven's theorem.
std::optional<Rational> rational_angle(const Rational& x) {
    if (x == 1) return Rational(0);
    if (x == Rational(1, 2)) return Rational(1, 3);
    if (x == 0) return Rational(1, 2);
    if (x == Rational(-1, 2)) return Rational(2, 3);
    if (x == -1) return Rational(1);
    return std::nullopt;
}

struct EllTerm {
    Int coefficient;  // k * S_k
    Rational cosine;  // 1 - phi (1 + k)
};

long long max_weight_value(const MinusculeParams& p) {
    switch (p.family) {
        case Family::TypeA: return p.s();
        case Family::TypeD: return p.r / 2 - 1;
        case Family::E6: return 1;
        case Family::E7: return 2;
    }
    return 0;
}

template <typename BF>
BF evaluate_terms(const std::vector<EllTerm>& terms) {
    const BF pi = 2 * acos(BF(0));
    BF sum = 0;
    for (const auto& t : terms) {
        BF x = BF(num(t.cosine)) / BF(den(t.cosine));
        sum += BF(t.coefficient) * acos(x);
    }
    return sum / pi;
}

} // namespace

BoundsReport bounds_closed_form(const MinusculeParams& p) {
    const Rational phi = Rational(p.delta) / (p.delta + p.kappa);
    BoundsReport rep;

    Rational u = 0;
    Rational ell_exact = 0;
    std::vector<EllTerm> float_terms;
    for (long long k = 1; k <= max_weight_value(p); ++k) {
        Int sk = s_k_closed_form(p, k);
        if (sk == 0) continue;
        u += Rational(sk) * k * (k + 1) / 2;
        Rational x = Rational(1) - phi * (1 + k);
        if (x < -1 || x > 1)
            throw CertificateError("embedding cosine " + to_fraction(x) + " outside [-1, 1]");
        if (auto angle = rational_angle(x)) ell_exact += Rational(sk) * k * *angle;
        else float_terms.push_back({Int(sk) * k, x});
    }
    u *= phi;
    rep.upper_raw = u;
    rep.upper_int = rat_floor(u);

    if (float_terms.empty()) {
        rep.lower_is_exact = true;
        rep.lower_exact = ell_exact;
        rep.lower_raw = to_double(ell_exact);
        rep.lower_int = rat_ceil(ell_exact);
        return rep;
    }

    using BF50 = boost::multiprecision::cpp_bin_float_50;
    using BF100 = boost::multiprecision::cpp_bin_float_100;
    using BF200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

    const BF200 guard = pow(BF200(2), -30);
    const BF200 exact_part = BF200(num(ell_exact)) / BF200(den(ell_exact));
    BF200 lo = exact_part + BF200(evaluate_terms<BF50>(float_terms));
    BF200 hi = exact_part + BF200(evaluate_terms<BF100>(float_terms));
    if (abs(hi - lo) > pow(BF200(2), -80) * (1 + abs(hi)))
        throw NumericError("extended-precision evaluations of ell disagree");
    BF200 nearest = floor(hi + BF200(0.5));
    if (abs(hi - nearest) <= guard) {
        // escalate once before giving up
        hi = exact_part + BF200(evaluate_terms<BF200>(float_terms));
        nearest = floor(hi + BF200(0.5));
        if (abs(hi - nearest) <= guard)
            throw NumericError("ell is within the guard distance of an integer; "
                               "cannot certify the rounding");
    }
    rep.lower_raw = hi.convert_to<double>();
    rep.lower_int = ceil(hi).convert_to<Int>();
    return rep;
}

AlphaConstant gw_alpha_constant() {
    // Stationary point of (2/pi) theta / (1 - cos theta):
    // g(theta) = 1 - cos(theta) - theta sin(theta) = 0.
    auto g = [](double t) { return 1.0 - std::cos(t) - t * std::sin(t); };
    double lo = 1.5, hi = 3.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0) hi = mid;
        else lo = mid;
    }
    AlphaConstant out;
    out.theta_star = 0.5 * (lo + hi);
    out.alpha = (2.0 / M_PI) * out.theta_star / (1.0 - std::cos(out.theta_star));
    return out;
}

double performance_ratio(const Rational& lambda1, const Rational& d) {
    if (d <= 0) throw DimensionError("performance ratio needs d > 0");
    Rational t = lambda1 / d;
    if (t < -1 || t >= 0)
        throw DimensionError("performance ratio needs -1 <= lambda1/d < 0, got " + to_fraction(t));
    double td = to_double(t);
    return (2.0 / M_PI) * std::acos(td) / (1.0 - td);
}

int exact_rank(const std::vector<Rational>& mat, int n) {
    if (mat.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DimensionError("matrix size mismatch");
    // Scale to integers, then fraction-free (Bareiss) elimination with full pivoting.
    Int lcm = 1;
    for (const auto& q : mat) lcm = boost::multiprecision::lcm(lcm, den(q));
    std::vector<Int> m;
    m.reserve(mat.size());
    for (const auto& q : mat) m.push_back(num(q) * (lcm / den(q)));

    Int prev = 1;
    int rank = 0;
    for (int step = 0; step < n; ++step) {
        int pi = -1, pj = -1;
        for (int i = step; i < n && pi < 0; ++i)
            for (int j = step; j < n; ++j)
                if (m[static_cast<std::size_t>(i) * n + j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != step)
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(step) * n + j],
                          m[static_cast<std::size_t>(pi) * n + j]);
        if (pj != step)
            for (int i = 0; i < n; ++i)
                std::swap(m[static_cast<std::size_t>(i) * n + step],
                          m[static_cast<std::size_t>(i) * n + pj]);
        const Int pivot = m[static_cast<std::size_t>(step) * n + step];
        for (int i = step + 1; i < n; ++i)
            for (int j = step + 1; j < n; ++j) {
                Int v = pivot * m[static_cast<std::size_t>(i) * n + j] -
                        m[static_cast<std::size_t>(i) * n + step] *
                            m[static_cast<std::size_t>(step) * n + j];
                m[static_cast<std::size_t>(i) * n + j] = v / prev;
            }
        for (int i = step + 1; i < n; ++i) m[static_cast<std::size_t>(i) * n + step] = 0;
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::vector<Rational> leading_principal_minors(const std::vector<Rational>& mat, int k) {
    std::vector<Rational> minors;
    minors.reserve(static_cast<std::size_t>(k));
    for (int t = 1; t <= k; ++t) {
        // Fraction-free determinant of the leading t x t block, with row pivoting.
        std::vector<Rational> m(static_cast<std::size_t>(t) * t);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                m[static_cast<std::size_t>(i) * t + j] = mat[static_cast<std::size_t>(i) * k + j];
        Rational det = 1;
        bool zero = false;
        for (int col = 0; col < t && !zero; ++col) {
            int pivot = -1;
            for (int row = col; row < t; ++row)
                if (m[static_cast<std::size_t>(row) * t + col] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) {
                zero = true;
                break;
            }
            if (pivot != col) {
                for (int j = 0; j < t; ++j)
                    std::swap(m[static_cast<std::size_t>(col) * t + j],
                              m[static_cast<std::size_t>(pivot) * t + j]);
                det = -det;
            }
            Rational p = m[static_cast<std::size_t>(col) * t + col];
            det *= p;
            for (int row = col + 1; row < t; ++row) {
                Rational f = m[static_cast<std::size_t>(row) * t + col] / p;
                if (f == 0) continue;
                for (int j = col; j < t; ++j)
                    m[static_cast<std::size_t>(row) * t + j] -=
                        f * m[static_cast<std::size_t>(col) * t + j];
            }
        }
        minors.push_back(zero ? Rational(0) : det);
    }
    return minors;
}

} // namespace mmc
