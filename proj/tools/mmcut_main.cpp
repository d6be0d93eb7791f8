// Command-line front end; talks to the library exclusively through the
// C API in mmcut.h.

#include <CLI11.hpp>
#include <json.hpp>
#include <mmcut.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCertificate = 3;

struct ParamsDeleter {
    void operator()(mmcut_params* p) const { mmcut_params_destroy(p); }
};
struct GraphDeleter {
    void operator()(mmcut_graph* g) const { mmcut_graph_destroy(g); }
};
using ParamsPtr = std::unique_ptr<mmcut_params, ParamsDeleter>;
using GraphPtr = std::unique_ptr<mmcut_graph, GraphDeleter>;

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(mmcut_status rc) {
    switch (rc) {
        case MMCUT_OK: return 0;
        case MMCUT_ECERT: return kExitCertificate;
        default: return kExitValidation;
    }
}

void check(mmcut_status rc, const char* what) {
    if (rc == MMCUT_OK) return;
    throw CliError{exit_code_for(rc),
                   std::string(what) + ": " + mmcut_status_name(rc) + ": " + mmcut_last_error()};
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    mmcut_string_free(s);
    return out;
}

struct Options {
    std::string abc;
    std::string family;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    std::uint64_t restarts = 100;
    int threads = 1;
    std::string out;
    std::string format = "json";
    bool check_paper_literal = false;
    bool model = false;
    bool force_local = false;
};

ParamsPtr make_params(const Options& opt) {
    mmcut_params* raw = nullptr;
    if (!opt.abc.empty()) {
        int a = 0, b = 0, c = 0;
        char comma1 = 0, comma2 = 0;
        std::istringstream is(opt.abc);
        is >> a >> comma1 >> b >> comma2 >> c;
        if (!is || comma1 != ',' || comma2 != ',')
            throw CliError{kExitValidation, "--abc expects A,B,C"};
        check(mmcut_params_create(a, b, c, &raw), "params");
    } else if (!opt.family.empty()) {
        check(mmcut_params_parse(opt.family.c_str(), &raw), "params");
    } else {
        throw CliError{kExitValidation, "one of --abc or --family is required"};
    }
    return ParamsPtr(raw);
}

// "typeD:5..7" -> typeD:5, typeD:6, typeD:7; other strings pass through.
std::vector<std::string> expand_family_sweep(const std::string& family) {
    auto dots = family.find("..");
    if (dots == std::string::npos) return {family};
    auto colon = family.find(':');
    if (colon == std::string::npos || colon > dots) return {family};
    std::string head = family.substr(0, colon + 1);
    try {
        int lo = std::stoi(family.substr(colon + 1, dots - colon - 1));
        int hi = std::stoi(family.substr(dots + 2));
        std::vector<std::string> out;
        for (int v = lo; v <= hi; ++v) out.push_back(head + std::to_string(v));
        return out;
    } catch (const std::exception&) {
        return {family};
    }
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw CliError{kExitValidation, "cannot open output file " + opt.out};
    f << text;
    if (!f) throw CliError{kExitValidation, "failed writing " + opt.out};
}

std::string csv_value(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    std::ostringstream os;
    if (v.is_number_float()) {
        os.precision(10);
        os << v.get<double>();
    } else {
        os << v;
    }
    return os.str();
}

std::string rows_to_csv(const std::vector<std::string>& reports,
                        const std::vector<std::string>& cols) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& rep : reports) {
        nlohmann::json j = nlohmann::json::parse(rep);
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out += ",";
            if (j.contains(cols[i])) out += csv_value(j.at(cols[i]));
        }
        out += "\n";
    }
    return out;
}

// Appends the erratum diff when requested; returns the preferred exit code
// (3 when any literal check is refuted, which is the documented outcome).
int append_paper_literal(const Options& opt, const ParamsPtr& params, nlohmann::json& j) {
    if (!opt.check_paper_literal) return 0;
    char* raw = nullptr;
    mmcut_status rc = mmcut_paper_literal(params.get(), &raw);
    std::string text = take_string(raw);
    if (rc != MMCUT_OK && rc != MMCUT_ECERT) {
        throw CliError{exit_code_for(rc), std::string("paper-literal: ") + mmcut_last_error()};
    }
    j["paper_literal"] = nlohmann::json::parse(text);
    return rc == MMCUT_ECERT ? kExitCertificate : 0;
}

int run(const std::string& command, const Options& opt) {
    if (opt.format != "json" && opt.format != "csv")
        throw CliError{kExitValidation, "--format must be json or csv"};

    if (command == "construct") {
        ParamsPtr params = make_params(opt);
        mmcut_graph* graw = nullptr;
        check(opt.model ? mmcut_graph_build_model(params.get(), &graw)
                        : mmcut_graph_build(params.get(), &graw),
              "construct");
        GraphPtr graph(graw);
        char* json = nullptr;
        check(mmcut_graph_to_json(graph.get(), &json), "export");
        write_output(opt, take_string(json));
        return 0;
    }

    if (command == "certify" || command == "spectrum" || command == "bounds") {
        ParamsPtr params = make_params(opt);
        char* raw = nullptr;
        if (command == "certify") check(mmcut_certify(params.get(), &raw), "certify");
        else if (command == "spectrum") check(mmcut_spectrum(params.get(), &raw), "spectrum");
        else check(mmcut_bounds(params.get(), &raw), "bounds");
        nlohmann::json j = nlohmann::json::parse(take_string(raw));
        int literal_exit = append_paper_literal(opt, params, j);
        write_output(opt, j.dump(2) + "\n");
        return literal_exit;
    }

    if (command == "simulate") {
        ParamsPtr params = make_params(opt);
        char* raw = nullptr;
        check(mmcut_simulate(params.get(), opt.samples, opt.seed, opt.threads, &raw), "simulate");
        std::string report = take_string(raw);
        if (opt.format == "csv") {
            static const std::vector<std::string> cols = {"family", "a",    "b",  "c",   "n",
                                                          "samples", "seed", "mean", "cv", "max",
                                                          "u_floor", "ell_ceil"};
            write_output(opt, rows_to_csv({report}, cols));
        } else {
            write_output(opt, report);
        }
        return 0;
    }

    if (command == "oracle") {
        ParamsPtr params = make_params(opt);
        mmcut_graph* graw = nullptr;
        check(opt.model ? mmcut_graph_build_model(params.get(), &graw)
                        : mmcut_graph_build(params.get(), &graw),
              "construct");
        GraphPtr graph(graw);
        char* raw = nullptr;
        check(mmcut_oracle(graph.get(), opt.restarts, opt.seed, opt.threads,
                           opt.force_local ? 1 : 0, &raw),
              "oracle");
        write_output(opt, take_string(raw));
        return 0;
    }

    if (command == "full-report") {
        std::vector<std::string> families;
        if (!opt.family.empty()) families = expand_family_sweep(opt.family);
        else families.push_back(""); // single run from --abc
        std::vector<std::string> reports;
        int literal_exit = 0;
        for (const auto& fam : families) {
            Options one = opt;
            if (!fam.empty()) {
                one.family = fam;
                one.abc.clear();
            }
            ParamsPtr params = make_params(one);
            char* raw = nullptr;
            check(mmcut_full_report(params.get(), opt.samples, opt.seed, opt.restarts,
                                    opt.threads, &raw),
                  "full-report");
            if (opt.check_paper_literal) {
                nlohmann::json j = nlohmann::json::parse(take_string(raw));
                literal_exit = std::max(literal_exit, append_paper_literal(opt, params, j));
                reports.push_back(j.dump(2) + "\n");
            } else {
                reports.push_back(take_string(raw));
            }
        }
        if (opt.format == "csv") {
            static const std::vector<std::string> cols = {"family", "a",         "b",  "c",
                                                          "n",      "samples",   "seed", "mean",
                                                          "max_found", "sd",     "cv",
                                                          "ell_ceil", "u_floor"};
            write_output(opt, rows_to_csv(reports, cols));
        } else {
            std::string all = "[\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                std::string r = reports[i];
                while (!r.empty() && r.back() == '\n') r.pop_back();
                all += r;
                if (i + 1 < reports.size()) all += ",";
                all += "\n";
            }
            all += "]\n";
            write_output(opt, all);
        }
        return literal_exit;
    }

    throw CliError{kExitValidation, "unknown command " + command};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-cut bounds, certificates and rounding simulations for "
                 "exceptional-divisor multigraphs"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"construct", "certify", "spectrum", "bounds", "simulate", "oracle",
                             "full-report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--abc", opt.abc, "parameters A,B,C");
        sub->add_option("--family", opt.family,
                        "family shorthand: typeA:r,s | typeD:r | e6 | e7 "
                        "(full-report also accepts typeD:5..7 sweeps)");
        sub->add_option("--samples", opt.samples, "rounding samples");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--restarts", opt.restarts, "local-search restarts");
        sub->add_option("--threads", opt.threads, "worker threads");
        sub->add_option("--out", opt.out, "output path (default stdout)");
        sub->add_option("--format", opt.format, "json|csv");
        sub->add_flag("--check-paper-literal", opt.check_paper_literal,
                      "evaluate the paper-literal formula variants and emit a diff record");
        sub->add_flag("--model", opt.model, "use the combinatorial subset model");
        sub->add_flag("--local-search", opt.force_local, "oracle: skip the exhaustive scan");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (CLI::App* sub : subs)
            if (sub->parsed()) return run(sub->get_name(), opt);
        std::cerr << "no command given\n";
        return kExitValidation;
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
