#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "multigraph.hpp"
#include "picard.hpp"

namespace mmc {

// "typeA:r,s" | "typeD:r" | "e6" | "e7" -> (a, b, c).
std::tuple<int, int, int> parse_family(const std::string& text);

std::string describe_params_json(const MinusculeParams& p);

// { sd_primal, sd_dual, lambda1, ell, u, ell_ceil, u_floor, alpha_G, ... }
std::string certify_report_json(const MinusculeParams& p);

// [{value, multiplicity}, ...] plus the fitted certificate (a,b,c,d).
std::string spectrum_report_json(const Multigraph& g);
std::string spectrum_report_json(const MinusculeParams& p);

std::string bounds_report_json(const MinusculeParams& p);

std::string simulate_report_json(const MinusculeParams& p, std::uint64_t samples,
                                 std::uint64_t seed, int threads);

// Exhaustive oracle when n fits, otherwise seeded local search.
std::string oracle_report_json(const Multigraph& g, std::uint64_t restarts, std::uint64_t seed,
                               int threads, bool force_local, int brute_force_limit = 30);

// One table row: mean / max found / SD / cv plus the integer bounds.
std::string full_report_json(const MinusculeParams& p, std::uint64_t samples, std::uint64_t seed,
                             std::uint64_t restarts, int threads);

std::string model_agreement_json(const MinusculeParams& p);

// Evaluations of the paper-literal formula variants next to the corrected
// implementation. A refuted check documents an erratum.
struct LiteralCheck {
    std::string name;
    bool refuted = false;
    std::string literal;
    std::string corrected;
    std::string detail;
};

std::vector<LiteralCheck> paper_literal_checks(const MinusculeParams& p);
std::string paper_literal_json(const MinusculeParams& p);
bool any_literal_refuted(const std::vector<LiteralCheck>& checks);

// CSV rendering for the row-shaped reports (simulate, full-report).
std::string csv_header_simulate();
std::string csv_row_simulate(const std::string& report_json);
std::string csv_header_full();
std::string csv_row_full(const std::string& report_json);

} // namespace mmc
