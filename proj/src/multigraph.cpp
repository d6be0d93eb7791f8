#include "multigraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "errors.hpp"

namespace mmc {

Cut Cut::from_members(std::size_t n, std::initializer_list<int> members) {
    Cut c(n);
    for (int i : members) c.set(static_cast<std::size_t>(i), true);
    return c;
}

Cut Cut::from_mask(std::size_t n, std::uint64_t mask) {
    if (n < 64 && (mask >> n) != 0) throw DimensionError("cut mask wider than vertex count");
    Cut c(n);
    for (std::size_t i = 0; i < n && i < 64; ++i)
        if (mask & (std::uint64_t{1} << i)) c.set(i, true);
    return c;
}

Cut Cut::from_hex(std::size_t n, const std::string& hex) {
    if (hex.empty()) throw ParseError("empty cut hex string");
    Cut c(n);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        char ch = *it;
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else throw ParseError("bad hex digit in cut string");
        for (int k = 0; k < 4; ++k) {
            if (!(v & (1 << k))) continue;
            std::size_t idx = bit + static_cast<std::size_t>(k);
            if (idx >= n) throw DimensionError("cut hex string wider than vertex count");
            c.set(idx, true);
        }
    }
    return c;
}

std::size_t Cut::count() const {
    return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

Cut Cut::complement() const {
    Cut c(size());
    for (std::size_t i = 0; i < size(); ++i) c.set(i, !member_[i]);
    return c;
}

std::string Cut::to_hex() const {
    std::string out;
    std::size_t nibbles = (size() + 3) / 4;
    bool leading = true;
    for (std::size_t nb = nibbles; nb-- > 0;) {
        int v = 0;
        for (int k = 3; k >= 0; --k) {
            std::size_t idx = nb * 4 + static_cast<std::size_t>(k);
            v <<= 1;
            if (idx < size() && member_[idx]) v |= 1;
        }
        if (v == 0 && leading && nb != 0) continue;
        leading = false;
        out.push_back("0123456789abcdef"[v]);
    }
    return out.empty() ? "0" : out;
}

Int WeightHistogram::total_pairs() const {
    Int total = zero_pairs;
    for (const auto& [w, cnt] : positive) total += cnt;
    return total;
}

Int WeightHistogram::count(const Rational& w) const {
    if (w == 0) return zero_pairs;
    auto it = positive.find(w);
    return it == positive.end() ? Int(0) : it->second;
}

Multigraph::Multigraph(std::vector<std::string> labels, std::vector<Rational> weights)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), weights_(std::move(weights)) {
    if (n_ == 0) throw DimensionError("multigraph needs at least one vertex");
    if (weights_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
        throw DimensionError("weight matrix size does not match vertex count");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw DimensionError("duplicate vertex label '" + l + "'");
    for (int i = 0; i < n_; ++i) {
        if (weights_[static_cast<std::size_t>(i) * n_ + i] != 0)
            throw DimensionError("nonzero diagonal weight at vertex " + std::to_string(i));
        for (int j = i + 1; j < n_; ++j) {
            const Rational& wij = weights_[static_cast<std::size_t>(i) * n_ + j];
            const Rational& wji = weights_[static_cast<std::size_t>(j) * n_ + i];
            if (wij != wji) throw DimensionError("weight matrix is not symmetric");
            if (wij < 0) throw DimensionError("negative weight between vertices " +
                                              std::to_string(i) + " and " + std::to_string(j));
        }
    }
}

Multigraph Multigraph::from_edges(std::vector<std::string> labels,
                                  const std::vector<std::tuple<int, int, Rational>>& edges) {
    const std::size_t n = labels.size();
    std::vector<Rational> w(n * n, Rational(0));
    for (const auto& [i, j, wt] : edges) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
            throw DimensionError("edge endpoint out of range");
        if (i == j) throw DimensionError("loop edge not allowed");
        w[static_cast<std::size_t>(i) * n + j] = wt;
        w[static_cast<std::size_t>(j) * n + i] = wt;
    }
    return Multigraph(std::move(labels), std::move(w));
}

const std::string& Multigraph::label(int i) const {
    if (i < 0 || i >= n_) throw DimensionError("vertex index out of range");
    return labels_[static_cast<std::size_t>(i)];
}

const Rational& Multigraph::weight(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw DimensionError("vertex index out of range");
    return weights_[static_cast<std::size_t>(i) * n_ + j];
}

Rational Multigraph::cut_weight(const Cut& cut) const {
    if (cut.size() != static_cast<std::size_t>(n_))
        throw DimensionError("cut length does not match vertex count");
    Rational total = 0;
    for (int i = 0; i < n_; ++i) {
        if (!cut.contains(static_cast<std::size_t>(i))) continue;
        for (int j = 0; j < n_; ++j) {
            if (cut.contains(static_cast<std::size_t>(j))) continue;
            total += weights_[static_cast<std::size_t>(i) * n_ + j];
        }
    }
    return total;
}

WeightHistogram Multigraph::weight_histogram() const {
    WeightHistogram h;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const Rational& w = weights_[static_cast<std::size_t>(i) * n_ + j];
            if (w == 0) ++h.zero_pairs;
            else ++h.positive[w];
        }
    return h;
}

Rational Multigraph::weighted_degree(int i) const {
    if (i < 0 || i >= n_) throw DimensionError("vertex index out of range");
    Rational d = 0;
    for (int j = 0; j < n_; ++j) d += weights_[static_cast<std::size_t>(i) * n_ + j];
    return d;
}

Rational Multigraph::total_weight() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) t += weights_[static_cast<std::size_t>(i) * n_ + j];
    return t;
}

std::vector<std::tuple<int, int, Rational>> Multigraph::positive_edges() const {
    std::vector<std::tuple<int, int, Rational>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const Rational& w = weights_[static_cast<std::size_t>(i) * n_ + j];
            if (w != 0) out.emplace_back(i, j, w);
        }
    return out;
}

Multigraph::ScaledWeights Multigraph::scaled_int_weights() const {
    Int lcm = 1;
    for (const auto& w : weights_) lcm = boost::multiprecision::lcm(lcm, den(w));
    std::vector<std::int64_t> scaled;
    scaled.reserve(weights_.size());
    const Int max64 = std::numeric_limits<std::int64_t>::max();
    if (lcm > max64) throw SizeLimitError("common weight denominator exceeds int64");
    for (const auto& w : weights_) {
        Int v = num(w) * (lcm / den(w));
        if (v > max64) throw SizeLimitError("scaled weight exceeds int64");
        scaled.push_back(v.convert_to<std::int64_t>());
    }
    return {std::move(scaled), lcm.convert_to<std::int64_t>()};
}

std::string Multigraph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["labels"] = labels_;
    auto edges = nlohmann::json::array();
    for (const auto& [i, jx, w] : positive_edges())
        edges.push_back(nlohmann::json::array({i, jx, to_fraction(w)}));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Multigraph Multigraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("labels") || !j.contains("edges"))
        throw ParseError("graph JSON must contain n, labels and edges");
    int n = j.at("n").get<int>();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n) throw ParseError("label count does not match n");
    std::vector<std::tuple<int, int, Rational>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edge records must be [i, j, weight]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>(), parse_fraction(e[2].get<std::string>()));
    }
    return from_edges(std::move(labels), edges);
}

bool Multigraph::operator==(const Multigraph& o) const {
    return n_ == o.n_ && labels_ == o.labels_ && weights_ == o.weights_;
}

} // namespace mmc
