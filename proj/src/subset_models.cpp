#include "subset_models.hpp"

#include <algorithm>
#include <bit>

#include "errors.hpp"
#include "spectral.hpp"

namespace mmc {

static std::vector<int> mask_elements(std::uint64_t mask, int m) {
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        if (mask & (std::uint64_t{1} << i)) out.push_back(i + 1);
    return out;
}

std::vector<std::uint64_t> subsets_lex(int m, int t) {
    if (m < 0 || t < 0 || t > m || m >= 63) throw DimensionError("bad subset range");
    std::vector<std::uint64_t> out;
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        out.push_back(mask);
        int i = t - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - t + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<std::uint64_t> even_subsets_lex(int m) {
    if (m < 0 || m >= 63) throw DimensionError("bad subset range");
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
        if (std::popcount(mask) % 2 == 0) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [m](std::uint64_t a, std::uint64_t b) {
        return mask_elements(a, m) < mask_elements(b, m);
    });
    return masks;
}

std::string subset_label(std::uint64_t mask, int m) {
    std::string out = "{";
    bool first = true;
    for (int e : mask_elements(mask, m)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

Multigraph build_type_a(int r, int s, std::size_t max_vertices) {
    if (r < 3 || s < 1) throw InvalidParamsError(InvalidParamsError::Kind::Range,
                                                 "type A subset model needs r >= 3, s >= 1");
    Int count = binomial(r + s, r - 1);
    if (count > max_vertices)
        throw SizeLimitError("type A model on " + count.str() + " vertices exceeds the bound");
    const int m = r + s;
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    auto verts = subsets_lex(m, r - 1);
    const int n = static_cast<int>(verts.size());
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (auto v : verts) labels.push_back(subset_label(v, m));
    std::vector<Rational> w(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t t = verts[static_cast<std::size_t>(i)];
            std::uint64_t sset = verts[static_cast<std::size_t>(j)];
            int wt = std::popcount((full & ~t) & sset) - 1;
            w[static_cast<std::size_t>(i) * n + j] = wt;
            w[static_cast<std::size_t>(j) * n + i] = wt;
        }
    return Multigraph(std::move(labels), std::move(w));
}

Multigraph build_type_d(int r, std::size_t max_vertices) {
    if (r < 5) throw InvalidParamsError(InvalidParamsError::Kind::Range,
                                        "type D subset model needs r >= 5");
    if (pow2(r - 1) > max_vertices)
        throw SizeLimitError("type D model on 2^" + std::to_string(r - 1) +
                             " vertices exceeds the bound");
    auto verts = even_subsets_lex(r);
    const int n = static_cast<int>(verts.size());
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (auto v : verts) labels.push_back(subset_label(v, r));
    std::vector<Rational> w(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int wt = std::popcount(verts[static_cast<std::size_t>(i)] ^
                                   verts[static_cast<std::size_t>(j)]) /
                         2 -
                     1;
            w[static_cast<std::size_t>(i) * n + j] = wt;
            w[static_cast<std::size_t>(j) * n + i] = wt;
        }
    return Multigraph(std::move(labels), std::move(w));
}

Multigraph build_model_graph(const MinusculeParams& p) {
    switch (p.family) {
        case Family::TypeA: return build_type_a(p.r, p.s());
        case Family::TypeD: return build_type_d(p.r);
        default: throw UnsupportedError("no subset model for family " + family_name(p.family));
    }
}

Int s_k_closed_form(const MinusculeParams& p, long long k) {
    if (k < 0) throw DimensionError("weight value k must be nonnegative");
    switch (p.family) {
        case Family::TypeA: {
            const int r = p.r, s = p.s();
            return binomial(r + s, r - 1) * binomial(s + 1, k + 1) *
                   binomial(r - 1, r - 1 - (k + 1)) / 2;
        }
        case Family::TypeD:
            return pow2(p.r - 2) * binomial(p.r, 2 * (k + 1));
        case Family::E6: {
            if (k == 1) return 135;
            if (k == 0) return binomial(27, 2) - 135;
            return 0;
        }
        case Family::E7: {
            if (k == 1) return 756;
            if (k == 2) return 28;
            if (k == 0) return binomial(56, 2) - 756 - 28;
            return 0;
        }
    }
    return 0;
}

std::vector<WeightVector> weight_coordinates(const MinusculeParams& p) {
    std::vector<WeightVector> out;
    if (p.family == Family::TypeA) {
        const int r = p.r, s = p.s(), m = r + s;
        Rational norm_sq = Rational(m) * (s + 1) * (r - 1);
        for (auto mask : subsets_lex(m, r - 1)) {
            WeightVector v;
            v.norm_sq = norm_sq;
            v.coords.reserve(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                v.coords.emplace_back((mask >> i) & 1 ? s + 1 : 1 - r);
            out.push_back(std::move(v));
        }
    } else if (p.family == Family::TypeD) {
        const int r = p.r;
        for (auto mask : even_subsets_lex(r)) {
            WeightVector v;
            v.norm_sq = r;
            v.coords.reserve(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) v.coords.emplace_back((mask >> i) & 1 ? 1 : -1);
            out.push_back(std::move(v));
        }
    } else {
        throw UnsupportedError("weight coordinates exist only for the type A/D models");
    }
    return out;
}

namespace {

std::vector<std::vector<Rational>> vertex_profiles(const Multigraph& g) {
    std::vector<std::vector<Rational>> profiles;
    profiles.reserve(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(g.n() - 1));
        for (int j = 0; j < g.n(); ++j)
            if (j != i) row.push_back(g.weight(i, j));
        std::sort(row.begin(), row.end());
        profiles.push_back(std::move(row));
    }
    return profiles;
}

bool extend_mapping(const Multigraph& g1, const Multigraph& g2, std::vector<int>& map,
                    std::vector<bool>& used, int depth) {
    const int n = g1.n();
    if (depth == n) return true;
    for (int u = 0; u < n; ++u) {
        if (used[static_cast<std::size_t>(u)]) continue;
        bool ok = true;
        for (int w = 0; w < depth; ++w) {
            if (g1.weight(depth, w) != g2.weight(u, map[static_cast<std::size_t>(w)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(depth)] = u;
        used[static_cast<std::size_t>(u)] = true;
        if (extend_mapping(g1, g2, map, used, depth + 1)) return true;
        used[static_cast<std::size_t>(u)] = false;
    }
    return false;
}

} // namespace

std::vector<int> find_isomorphism(const Multigraph& g1, const Multigraph& g2) {
    if (g1.n() != g2.n()) return {};
    std::vector<int> map(static_cast<std::size_t>(g1.n()), -1);
    std::vector<bool> used(static_cast<std::size_t>(g1.n()), false);
    if (!extend_mapping(g1, g2, map, used, 0)) return {};
    return map;
}

AgreementReport check_model_agreement(const MinusculeParams& p, int explicit_bound) {
    if (p.family != Family::TypeA && p.family != Family::TypeD)
        throw UnsupportedError("model agreement is defined for type A/D only");
    AgreementReport rep;
    Multigraph lattice = build_lattice_graph(p);
    Multigraph model = build_model_graph(p);
    if (lattice.n() != model.n()) {
        rep.detail = "vertex counts differ: " + std::to_string(lattice.n()) + " vs " +
                     std::to_string(model.n());
        return rep;
    }
    if (!(lattice.weight_histogram() == model.weight_histogram())) {
        rep.detail = "weight histograms differ";
        return rep;
    }
    auto prof1 = vertex_profiles(lattice);
    auto prof2 = vertex_profiles(model);
    std::sort(prof1.begin(), prof1.end());
    std::sort(prof2.begin(), prof2.end());
    if (prof1 != prof2) {
        rep.detail = "per-vertex weight profile multisets differ";
        return rep;
    }
    SrmgCertificate c1 = verify_srmg(lattice);
    SrmgCertificate c2 = verify_srmg(model);
    if (!(c1.a == c2.a && c1.b == c2.b && c1.c == c2.c && c1.d == c2.d && c1.n == c2.n)) {
        rep.detail = "SRMG certificates differ";
        return rep;
    }
    if (lattice.n() <= explicit_bound) {
        rep.bijection_checked = true;
        rep.bijection = find_isomorphism(lattice, model);
        if (rep.bijection.empty()) {
            rep.detail = "no weight-preserving bijection found";
            return rep;
        }
        for (int i = 0; i < lattice.n(); ++i)
            for (int j = i + 1; j < lattice.n(); ++j)
                if (lattice.weight(i, j) != model.weight(rep.bijection[static_cast<std::size_t>(i)],
                                                         rep.bijection[static_cast<std::size_t>(j)])) {
                    rep.detail = "bijection fails on pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
                    rep.bijection.clear();
                    return rep;
                }
    }
    rep.agree = true;
    rep.detail = "ok";
    return rep;
}

} // namespace mmc
