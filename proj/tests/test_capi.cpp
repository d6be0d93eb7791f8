// Exercises the shared-library surface exactly as an external client would:
// only mmcut.h plus the JSON strings it returns.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <mmcut.h>

#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    mmcut_string_free(s);
    return out;
}

struct Params {
    mmcut_params* p = nullptr;
    Params(int a, int b, int c) { REQUIRE(mmcut_params_create(a, b, c, &p) == MMCUT_OK); }
    ~Params() { mmcut_params_destroy(p); }
};

} // namespace

TEST_CASE("parameter creation and validation") {
    mmcut_params* p = nullptr;
    CHECK(mmcut_params_create(2, 3, 3, &p) == MMCUT_OK);
    mmcut_params_destroy(p);

    p = nullptr;
    CHECK(mmcut_params_create(2, 4, 4, &p) == MMCUT_EINVAL);
    CHECK(p == nullptr);
    CHECK(std::string(mmcut_last_error()).find("not a finite root system") != std::string::npos);

    CHECK(mmcut_params_create(3, 2, 3, &p) == MMCUT_EINVAL);
    CHECK(std::string(mmcut_last_error()).find("not minuscule") != std::string::npos);

    CHECK(mmcut_params_create(2, 3, 3, nullptr) == MMCUT_EINVAL);
}

TEST_CASE("family shorthand") {
    mmcut_params* p = nullptr;
    REQUIRE(mmcut_params_parse("typeA:4,1", &p) == MMCUT_OK);
    char* desc = nullptr;
    REQUIRE(mmcut_params_describe(p, &desc) == MMCUT_OK);
    auto j = nlohmann::json::parse(take(desc));
    CHECK(j.at("a") == 2);
    CHECK(j.at("b") == 1);
    CHECK(j.at("c") == 3);
    CHECK(j.at("n") == 10);
    mmcut_params_destroy(p);

    CHECK(mmcut_params_parse("nonsense", &p) == MMCUT_EINVAL);
}

TEST_CASE("graph construction and JSON round trip") {
    Params e7(2, 4, 3);
    mmcut_graph* g = nullptr;
    REQUIRE(mmcut_graph_build(e7.p, &g) == MMCUT_OK);
    CHECK(mmcut_graph_order(g) == 56);
    char* json = nullptr;
    REQUIRE(mmcut_graph_to_json(g, &json) == MMCUT_OK);
    std::string text = take(json);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("n") == 56);
    CHECK(j.at("edges").size() == 784); // 756 + 28 positive records

    mmcut_graph* back = nullptr;
    REQUIRE(mmcut_graph_from_json(text.c_str(), &back) == MMCUT_OK);
    char* json2 = nullptr;
    REQUIRE(mmcut_graph_to_json(back, &json2) == MMCUT_OK);
    CHECK(take(json2) == text);
    mmcut_graph_destroy(back);
    mmcut_graph_destroy(g);

    CHECK(mmcut_graph_from_json("{not json", &back) == MMCUT_EINVAL);
}

TEST_CASE("model graphs through the C surface") {
    Params d5(2, 2, 3);
    mmcut_graph* g = nullptr;
    REQUIRE(mmcut_graph_build_model(d5.p, &g) == MMCUT_OK);
    CHECK(mmcut_graph_order(g) == 16);
    mmcut_graph_destroy(g);

    Params e6(2, 3, 3);
    CHECK(mmcut_graph_build_model(e6.p, &g) == MMCUT_EINVAL); // no subset model
}

TEST_CASE("certification report") {
    Params e6(2, 3, 3);
    char* raw = nullptr;
    REQUIRE(mmcut_certify(e6.p, &raw) == MMCUT_OK);
    auto j = nlohmann::json::parse(take(raw));
    CHECK(j.at("sd_primal") == "405/4");
    CHECK(j.at("sd_dual") == "405/4");
    CHECK(j.at("u_floor") == 101);
}

TEST_CASE("spectrum and bounds") {
    Params d5(2, 2, 3);
    char* raw = nullptr;
    REQUIRE(mmcut_spectrum(d5.p, &raw) == MMCUT_OK);
    auto j = nlohmann::json::parse(take(raw));
    CHECK(j.at("verified") == true);

    REQUIRE(mmcut_bounds(d5.p, &raw) == MMCUT_OK);
    auto jb = nlohmann::json::parse(take(raw));
    CHECK(jb.at("u") == "32");
    CHECK(jb.at("ell_ceil") == 29);
}

TEST_CASE("oracle through the C surface") {
    Params a41(2, 1, 3);
    mmcut_graph* g = nullptr;
    REQUIRE(mmcut_graph_build(a41.p, &g) == MMCUT_OK);
    char* raw = nullptr;
    REQUIRE(mmcut_oracle(g, 10, 0, 1, 0, &raw) == MMCUT_OK);
    auto j = nlohmann::json::parse(take(raw));
    CHECK(j.at("maxcut") == "12");
    CHECK(j.at("method") == "exhaustive");
    CHECK(j.at("exact") == true);

    REQUIRE(mmcut_oracle(g, 10, 0, 1, 1, &raw) == MMCUT_OK); // force local search
    auto jl = nlohmann::json::parse(take(raw));
    CHECK(jl.at("method") == "local_search");
    CHECK(jl.at("exact") == false);
    mmcut_graph_destroy(g);
}

TEST_CASE("simulation and full report") {
    Params a41(2, 1, 3);
    char* raw = nullptr;
    REQUIRE(mmcut_simulate(a41.p, 5000, 42, 2, &raw) == MMCUT_OK);
    auto j = nlohmann::json::parse(take(raw));
    CHECK(j.at("samples") == 5000);
    double mean = j.at("mean").get<double>();
    CHECK(mean > 9.0);
    CHECK(mean < 13.0);

    REQUIRE(mmcut_full_report(a41.p, 2000, 1, 10, 1, &raw) == MMCUT_OK);
    auto jf = nlohmann::json::parse(take(raw));
    CHECK(jf.at("sd") == "25/2");
    CHECK(jf.contains("max_found"));
}

TEST_CASE("paper literal diff exits with a certificate code") {
    Params a41(2, 1, 3);
    char* raw = nullptr;
    CHECK(mmcut_paper_literal(a41.p, &raw) == MMCUT_ECERT);
    auto j = nlohmann::json::parse(take(raw));
    CHECK(j.at("any_refuted") == true);
}

TEST_CASE("model agreement") {
    Params d5(2, 2, 3);
    char* raw = nullptr;
    REQUIRE(mmcut_model_agreement(d5.p, &raw) == MMCUT_OK);
    auto j = nlohmann::json::parse(take(raw));
    CHECK(j.at("agree") == true);
}

TEST_CASE("status names") {
    CHECK(std::string(mmcut_status_name(MMCUT_OK)) == "ok");
    CHECK(std::string(mmcut_status_name(MMCUT_ECERT)) == "certificate failure");
}
