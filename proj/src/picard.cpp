#include "picard.hpp"

#include <deque>
#include <set>

#include "errors.hpp"

namespace mmc {

std::string family_name(Family f) {
    switch (f) {
        case Family::TypeA: return "typeA";
        case Family::TypeD: return "typeD";
        case Family::E6: return "e6";
        case Family::E7: return "e7";
    }
    return "?";
}

Int MinusculeParams::orbit_size() const {
    switch (family) {
        case Family::TypeA: return binomial(r + s(), r - 1);
        case Family::TypeD: return pow2(r - 1);
        case Family::E6: return 27;
        case Family::E7: return 56;
    }
    return 0;
}

MinusculeParams build_params(int a, int b, int c) {
    using Kind = InvalidParamsError::Kind;
    if (a < 2 || c < 2 || b < 1)
        throw InvalidParamsError(Kind::Range, "parameters must satisfy a >= 2, b >= 1, c >= 2");
    if (a > c) throw InvalidParamsError(Kind::Range, "parameters must satisfy a <= c");
    if (a == 2 && c <= 2) throw InvalidParamsError(Kind::Range, "c > 2 is required when a = 2");
    // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc
    long long delta = static_cast<long long>(b) * c + static_cast<long long>(a) * c +
                      static_cast<long long>(a) * b - static_cast<long long>(a) * b * c;
    if (delta <= 0)
        throw InvalidParamsError(Kind::NotFinite,
                                 "not a finite root system: 1/a + 1/b + 1/c <= 1");
    Family family;
    if (b == 1) family = Family::TypeA;
    else if (a == 2 && b == 2) family = Family::TypeD;
    else if (a == 2 && b == 3 && c == 3) family = Family::E6;
    else if (a == 2 && b == 4 && c == 3) family = Family::E7;
    else
        throw InvalidParamsError(Kind::NotMinuscule,
                                 "finite but not minuscule: (a,b,c) matches none of "
                                 "(s+1,1,n+1), (2,2,n), (2,3,3), (2,4,3)");
    MinusculeParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.r = b + c;
    p.delta = delta;
    p.kappa = static_cast<long long>(a) * c - a - c;
    p.family = family;
    return p;
}

bool PicardClass::operator<(const PicardClass& o) const {
    if (h != o.h) return h < o.h;
    return e < o.e;
}

std::string PicardClass::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(h[i]);
    }
    out += " ; ";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    out += ")";
    return out;
}

static void check_dims(const PicardClass& v, const MinusculeParams& p) {
    if (v.h.size() != static_cast<std::size_t>(p.a - 1) ||
        v.e.size() != static_cast<std::size_t>(p.r))
        throw DimensionError("Picard class coordinates do not match the parameters");
}

PicardClass canonical_class(const MinusculeParams& p) {
    PicardClass k;
    k.h.assign(static_cast<std::size_t>(p.a - 1), -p.c);
    k.e.assign(static_cast<std::size_t>(p.r), p.kappa);
    return k;
}

long long intersect(const PicardClass& u, const PicardClass& v, const MinusculeParams& p) {
    check_dims(u, p);
    check_dims(v, p);
    // H_i.H_j = c - 1 - delta_ij: (c-1)(sum h)(sum h') - sum h h'
    long long hu = 0, hv = 0, hh = 0;
    for (std::size_t i = 0; i < u.h.size(); ++i) {
        hu += u.h[i];
        hv += v.h[i];
        hh += u.h[i] * v.h[i];
    }
    long long ee = 0;
    for (std::size_t i = 0; i < u.e.size(); ++i) ee += u.e[i] * v.e[i];
    return (static_cast<long long>(p.c) - 1) * hu * hv - hh - ee;
}

Rational intersect_rational(const std::vector<Rational>& h1, const std::vector<Rational>& e1,
                            const std::vector<Rational>& h2, const std::vector<Rational>& e2,
                            const MinusculeParams& p) {
    if (h1.size() != static_cast<std::size_t>(p.a - 1) || h1.size() != h2.size() ||
        e1.size() != static_cast<std::size_t>(p.r) || e1.size() != e2.size())
        throw DimensionError("coordinate lengths do not match the parameters");
    Rational hu = 0, hv = 0, hh = 0, ee = 0;
    for (std::size_t i = 0; i < h1.size(); ++i) {
        hu += h1[i];
        hv += h2[i];
        hh += h1[i] * h2[i];
    }
    for (std::size_t i = 0; i < e1.size(); ++i) ee += e1[i] * e2[i];
    return Rational(p.c - 1) * hu * hv - hh - ee;
}

std::vector<PicardClass> simple_roots(const MinusculeParams& p) {
    std::vector<PicardClass> roots;
    const auto zero_h = std::vector<long long>(static_cast<std::size_t>(p.a - 1), 0);
    const auto zero_e = std::vector<long long>(static_cast<std::size_t>(p.r), 0);
    // alpha_i = E_i - E_{i+1}, i = 1..r-1
    for (int i = 0; i + 1 < p.r; ++i) {
        PicardClass alpha{zero_h, zero_e};
        alpha.e[static_cast<std::size_t>(i)] = 1;
        alpha.e[static_cast<std::size_t>(i) + 1] = -1;
        roots.push_back(std::move(alpha));
    }
    // alpha_r = H_1 - E_1 - ... - E_c
    {
        PicardClass alpha{zero_h, zero_e};
        alpha.h[0] = 1;
        for (int i = 0; i < p.c; ++i) alpha.e[static_cast<std::size_t>(i)] = -1;
        roots.push_back(std::move(alpha));
    }
    // alpha_{r+j} = H_{j+1} - H_j, j = 1..a-2
    for (int j = 0; j + 2 <= p.a - 1; ++j) {
        PicardClass alpha{zero_h, zero_e};
        alpha.h[static_cast<std::size_t>(j)] = -1;
        alpha.h[static_cast<std::size_t>(j) + 1] = 1;
        roots.push_back(std::move(alpha));
    }
    return roots;
}

PicardClass reflect(const PicardClass& v, const PicardClass& alpha, const MinusculeParams& p) {
    if (intersect(alpha, alpha, p) != -2)
        throw DimensionError("reflection requires a root with alpha.alpha = -2");
    long long t = intersect(v, alpha, p);
    PicardClass out = v;
    for (std::size_t i = 0; i < out.h.size(); ++i) out.h[i] += t * alpha.h[i];
    for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] += t * alpha.e[i];
    return out;
}

std::vector<PicardClass> minus_one_divisors(const MinusculeParams& p, std::size_t safety_bound) {
    const auto roots = simple_roots(p);
    PicardClass start;
    start.h.assign(static_cast<std::size_t>(p.a - 1), 0);
    start.e.assign(static_cast<std::size_t>(p.r), 0);
    start.e.back() = 1;

    std::set<PicardClass> seen{start};
    std::deque<PicardClass> queue{start};
    while (!queue.empty()) {
        PicardClass cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& alpha : roots) {
            PicardClass next = reflect(cur, alpha, p);
            if (seen.insert(next).second) {
                if (seen.size() > safety_bound)
                    throw SizeLimitError("Weyl orbit exceeded the safety bound; "
                                         "input is not a minuscule configuration");
                queue.push_back(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Multigraph graph_from_divisors(const std::vector<PicardClass>& divs, const MinusculeParams& p) {
    const int n = static_cast<int>(divs.size());
    std::vector<std::string> labels;
    labels.reserve(divs.size());
    for (const auto& d : divs) labels.push_back(d.to_string());
    std::vector<Rational> w(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long prod = intersect(divs[static_cast<std::size_t>(i)],
                                       divs[static_cast<std::size_t>(j)], p);
            if (prod < 0)
                throw CertificateError("distinct orbit classes with negative product " +
                                       std::to_string(prod) + ": " + labels[i] + " . " + labels[j]);
            w[static_cast<std::size_t>(i) * n + j] = prod;
            w[static_cast<std::size_t>(j) * n + i] = prod;
        }
    return Multigraph(std::move(labels), std::move(w));
}

Multigraph build_lattice_graph(const MinusculeParams& p) {
    return graph_from_divisors(minus_one_divisors(p), p);
}

} // namespace mmc
