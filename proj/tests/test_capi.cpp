#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "hypercycle.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    hc_string_free(s);
    return out;
}

} // namespace

TEST_CASE("compute, canonicalize and render through the C interface") {
    hc_charpoly* poly = nullptr;
    REQUIRE(hc_charpoly_compute(3, 3, &poly) == HC_OK);

    char* degree = nullptr;
    REQUIRE(hc_charpoly_degree(poly, &degree) == HC_OK);
    CHECK(take(degree) == "192");

    REQUIRE(hc_charpoly_canonicalize(poly) == HC_OK);
    char* text = nullptr;
    REQUIRE(hc_charpoly_render(poly, "text", &text) == HC_OK);
    CHECK(take(text) == "λ^57 · (λ^3 - 4)^9 · (λ^3 - 1)^36");

    char* json = nullptr;
    REQUIRE(hc_charpoly_render(poly, "json", &json) == HC_OK);
    const std::string json_text = take(json);
    hc_charpoly* parsed = nullptr;
    REQUIRE(hc_charpoly_parse_json(json_text.c_str(), &parsed) == HC_OK);
    char* text2 = nullptr;
    REQUIRE(hc_charpoly_render(parsed, "text", &text2) == HC_OK);
    CHECK(take(text2) == "λ^57 · (λ^3 - 4)^9 · (λ^3 - 1)^36");
    hc_charpoly_free(parsed);

    char* expanded = nullptr;
    REQUIRE(hc_charpoly_expand(poly, 1000000, &expanded) == HC_OK);
    const std::string coeffs = take(expanded);
    CHECK(coeffs.find("192 1\n") != std::string::npos);
    CHECK(coeffs.find("189 -72\n") != std::string::npos);

    int pass = 0;
    char* report = nullptr;
    REQUIRE(hc_charpoly_spectrum_check(poly, 1e-9, &pass, &report) == HC_OK);
    take(report);
    // the canonical form absorbs mu-powers, so membership holds but counts
    // differ; the assembled form is what the spectrum check targets
    hc_charpoly_free(poly);

    hc_charpoly* raw = nullptr;
    REQUIRE(hc_charpoly_compute(3, 3, &raw) == HC_OK);
    REQUIRE(hc_charpoly_spectrum_check(raw, 1e-9, &pass, &report) == HC_OK);
    CHECK(pass == 1);
    take(report);
    hc_charpoly_free(raw);
}

TEST_CASE("error reporting through status codes") {
    hc_charpoly* poly = nullptr;
    CHECK(hc_charpoly_compute(2, 3, &poly) == HC_ERR_PARAM);
    CHECK(std::strlen(hc_last_error()) > 0);
    CHECK(hc_charpoly_compute(3, 2, &poly) == HC_ERR_PARAM);

    char* out = nullptr;
    CHECK(hc_trace(3, 3, 4, &out) == HC_ERR_UNSUPPORTED_ORDER);
    CHECK(hc_trace(3, 3, 0, &out) == HC_ERR_PARAM);
    CHECK(hc_brute_trace(3, 3, 9, 10, 1, &out) == HC_ERR_BUDGET);

    REQUIRE(hc_charpoly_compute(4, 3, &poly) == HC_OK);
    CHECK(hc_charpoly_expand(poly, 100, &out) == HC_ERR_BUDGET);
    hc_charpoly_free(poly);

    CHECK(hc_charpoly_parse_json("{", &poly) == HC_ERR_PARAM);
    CHECK(hc_verify("nonsense", 0, 0, 0, 1, nullptr, nullptr) == HC_ERR_PARAM);
}

TEST_CASE("traces through the C interface") {
    char* out = nullptr;
    REQUIRE(hc_trace(3, 3, 3, &out) == HC_OK);
    CHECK(take(out) == "1836");
    REQUIRE(hc_trace_order(3, 3, 2, &out) == HC_OK);
    CHECK(take(out) == "0");
    REQUIRE(hc_brute_trace(3, 3, 3, 0, 1, &out) == HC_OK);
    CHECK(take(out) == "216");
}

TEST_CASE("verify suites through the C interface") {
    int all_pass = 0;
    char* report = nullptr;
    REQUIRE(hc_verify("corollaries", 4, 5, 0, 1, &all_pass, &report) == HC_OK);
    CHECK(all_pass == 1);
    const std::string table = take(report);
    CHECK(table.find("PASS") != std::string::npos);
    CHECK(table.find("FAIL") == std::string::npos);
}

TEST_CASE("spectrum report through the C interface") {
    int pass = 0;
    char* report = nullptr;
    REQUIRE(hc_spectrum_report(3, 3, 1e-9, &pass, &report) == HC_OK);
    CHECK(pass == 1);
    const std::string text = take(report);
    CHECK(text.find("mu=4.000000000 multiplicity=9") != std::string::npos);
    CHECK(text.find("spectrum check: PASS") != std::string::npos);
}
