#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace mmc {

// One side of a vertex partition, stored as a membership bitmask.
class Cut {
public:
    explicit Cut(std::size_t n) : member_(n, false) {}

    static Cut from_members(std::size_t n, std::initializer_list<int> members);
    static Cut from_mask(std::size_t n, std::uint64_t mask);
    static Cut from_hex(std::size_t n, const std::string& hex);

    std::size_t size() const { return member_.size(); }
    bool contains(std::size_t i) const { return member_.at(i); }
    void set(std::size_t i, bool v) { member_.at(i) = v; }
    std::size_t count() const;

    Cut complement() const;

    // Hex string of the mask value sum(2^i : vertex i in S), lowercase,
    // no leading zeros ("0" for the empty side).
    std::string to_hex() const;

    bool operator==(const Cut& o) const { return member_ == o.member_; }

private:
    std::vector<bool> member_;
};

struct WeightHistogram {
    std::map<Rational, Int> positive; // weight value -> unordered pair count
    Int zero_pairs{0};

    Int total_pairs() const;
    Int count(const Rational& w) const;
    bool operator==(const WeightHistogram& o) const = default;
};

// Vertex-labeled symmetric multigraph with exact nonnegative rational
// weights and a zero diagonal. Immutable after construction.
class Multigraph {
public:
    // weights is a dense row-major n*n matrix; validated on entry.
    Multigraph(std::vector<std::string> labels, std::vector<Rational> weights);

    static Multigraph from_edges(std::vector<std::string> labels,
                                 const std::vector<std::tuple<int, int, Rational>>& edges);

    int n() const { return n_; }
    const std::string& label(int i) const;
    const std::vector<std::string>& labels() const { return labels_; }
    const Rational& weight(int i, int j) const;

    Rational cut_weight(const Cut& cut) const;
    WeightHistogram weight_histogram() const;
    Rational weighted_degree(int i) const;

    // sum_{i<j} w_ij
    Rational total_weight() const;
    std::vector<std::tuple<int, int, Rational>> positive_edges() const;

    // Weights multiplied by the least common denominator, as int64.
    // Throws SizeLimitError if any scaled value cannot be represented.
    struct ScaledWeights {
        std::vector<std::int64_t> w; // row-major n*n
        std::int64_t scale;
    };
    ScaledWeights scaled_int_weights() const;

    std::string to_json() const;
    static Multigraph from_json(const std::string& text);

    bool operator==(const Multigraph& o) const;

private:
    int n_;
    std::vector<std::string> labels_;
    std::vector<Rational> weights_;
};

} // namespace mmc
