#include "mmcut.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "multigraph.hpp"
#include "picard.hpp"
#include "report.hpp"
#include "subset_models.hpp"

struct mmcut_params {
    mmc::MinusculeParams p;
};

struct mmcut_graph {
    mmc::Multigraph g;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mmcut_status fill(char** json, const std::string& text) {
    if (!json) return MMCUT_OK;
    *json = dup_string(text);
    return *json ? MMCUT_OK : MMCUT_ENOMEM;
}

template <typename Fn>
mmcut_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const mmc::InvalidParamsError& e) {
        set_error(e.what());
        return MMCUT_EINVAL;
    } catch (const mmc::ParseError& e) {
        set_error(e.what());
        return MMCUT_EINVAL;
    } catch (const mmc::DimensionError& e) {
        set_error(e.what());
        return MMCUT_EINVAL;
    } catch (const mmc::UnsupportedError& e) {
        set_error(e.what());
        return MMCUT_EINVAL;
    } catch (const mmc::SizeLimitError& e) {
        set_error(e.what());
        return MMCUT_ESIZE;
    } catch (const mmc::CertificateError& e) {
        set_error(e.what());
        return MMCUT_ECERT;
    } catch (const mmc::NumericError& e) {
        set_error(e.what());
        return MMCUT_ECERT;
    } catch (const mmc::IoError& e) {
        set_error(e.what());
        return MMCUT_EIO;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return MMCUT_ENOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return MMCUT_EINTERNAL;
    }
}

} // namespace

extern "C" {

const char* mmcut_status_name(mmcut_status status) {
    switch (status) {
        case MMCUT_OK: return "ok";
        case MMCUT_EINVAL: return "invalid argument";
        case MMCUT_ESIZE: return "size limit exceeded";
        case MMCUT_ECERT: return "certificate failure";
        case MMCUT_EIO: return "io error";
        case MMCUT_ENOMEM: return "out of memory";
        case MMCUT_EINTERNAL: return "internal error";
    }
    return "unknown";
}

const char* mmcut_last_error(void) { return g_last_error.c_str(); }

void mmcut_string_free(char* s) { std::free(s); }

mmcut_status mmcut_params_create(int a, int b, int c, mmcut_params** out) {
    if (!out) {
        set_error("null output pointer");
        return MMCUT_EINVAL;
    }
    *out = nullptr;
    return guarded([&]() {
        *out = new mmcut_params{mmc::build_params(a, b, c)};
        return MMCUT_OK;
    });
}

mmcut_status mmcut_params_parse(const char* family, mmcut_params** out) {
    if (!family || !out) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    *out = nullptr;
    return guarded([&]() {
        auto [a, b, c] = mmc::parse_family(family);
        *out = new mmcut_params{mmc::build_params(a, b, c)};
        return MMCUT_OK;
    });
}

void mmcut_params_destroy(mmcut_params* p) { delete p; }

mmcut_status mmcut_params_describe(const mmcut_params* p, char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() { return fill(json, mmc::describe_params_json(p->p)); });
}

mmcut_status mmcut_graph_build(const mmcut_params* p, mmcut_graph** out) {
    if (!p || !out) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    *out = nullptr;
    return guarded([&]() {
        *out = new mmcut_graph{mmc::build_lattice_graph(p->p)};
        return MMCUT_OK;
    });
}

mmcut_status mmcut_graph_build_model(const mmcut_params* p, mmcut_graph** out) {
    if (!p || !out) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    *out = nullptr;
    return guarded([&]() {
        *out = new mmcut_graph{mmc::build_model_graph(p->p)};
        return MMCUT_OK;
    });
}

mmcut_status mmcut_graph_from_json(const char* json, mmcut_graph** out) {
    if (!json || !out) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    *out = nullptr;
    return guarded([&]() {
        *out = new mmcut_graph{mmc::Multigraph::from_json(json)};
        return MMCUT_OK;
    });
}

mmcut_status mmcut_graph_to_json(const mmcut_graph* g, char** json) {
    if (!g || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() { return fill(json, g->g.to_json()); });
}

int mmcut_graph_order(const mmcut_graph* g) { return g ? g->g.n() : 0; }

void mmcut_graph_destroy(mmcut_graph* g) { delete g; }

mmcut_status mmcut_certify(const mmcut_params* p, char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() { return fill(json, mmc::certify_report_json(p->p)); });
}

mmcut_status mmcut_spectrum_graph(const mmcut_graph* g, char** json) {
    if (!g || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() { return fill(json, mmc::spectrum_report_json(g->g)); });
}

mmcut_status mmcut_spectrum(const mmcut_params* p, char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() { return fill(json, mmc::spectrum_report_json(p->p)); });
}

mmcut_status mmcut_bounds(const mmcut_params* p, char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() { return fill(json, mmc::bounds_report_json(p->p)); });
}

mmcut_status mmcut_simulate(const mmcut_params* p, uint64_t samples, uint64_t seed, int threads,
                            char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded(
        [&]() { return fill(json, mmc::simulate_report_json(p->p, samples, seed, threads)); });
}

mmcut_status mmcut_oracle(const mmcut_graph* g, uint64_t restarts, uint64_t seed, int threads,
                          int force_local, char** json) {
    if (!g || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() {
        return fill(json, mmc::oracle_report_json(g->g, restarts, seed, threads, force_local != 0));
    });
}

mmcut_status mmcut_full_report(const mmcut_params* p, uint64_t samples, uint64_t seed,
                               uint64_t restarts, int threads, char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() {
        return fill(json, mmc::full_report_json(p->p, samples, seed, restarts, threads));
    });
}

mmcut_status mmcut_model_agreement(const mmcut_params* p, char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() { return fill(json, mmc::model_agreement_json(p->p)); });
}

mmcut_status mmcut_paper_literal(const mmcut_params* p, char** json) {
    if (!p || !json) {
        set_error("null argument");
        return MMCUT_EINVAL;
    }
    return guarded([&]() {
        auto checks = mmc::paper_literal_checks(p->p);
        mmcut_status rc = fill(json, mmc::paper_literal_json(p->p));
        if (rc != MMCUT_OK) return rc;
        if (mmc::any_literal_refuted(checks)) {
            set_error("paper-literal evaluation refuted; see the diff record");
            return MMCUT_ECERT;
        }
        return MMCUT_OK;
    });
}

} // extern "C"
