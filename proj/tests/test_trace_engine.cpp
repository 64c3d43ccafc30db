#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercycle/errors.hpp"
#include "hypercycle/path_spectra.hpp"
#include "hypercycle/trace_engine.hpp"

using namespace hypercycle;

TEST_CASE("compositions enumeration") {
    CHECK(compositions(3, 2) == std::vector<Composition>{{1, 2}, {2, 1}});
    CHECK(compositions(4, 2) == std::vector<Composition>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(compositions(5, 1) == std::vector<Composition>{{5}});
    CHECK(compositions(10, 4).size() == 84); // C(9,3)
    for (const Composition& c : compositions(9, 4)) {
        unsigned sum = 0;
        for (unsigned part : c) {
            CHECK(part >= 1);
            sum += part;
        }
        CHECK(sum == 9);
    }
    CHECK_THROWS_AS(compositions(3, 4), ParameterError);
    CHECK_THROWS_AS(compositions(3, 0), ParameterError);
}

TEST_CASE("h values, frozen examples") {
    for (unsigned d = 1; d <= 10; ++d) CHECK(h_value(d, 1) == 1);
    CHECK(h_value(2, 2) == 2);
    CHECK(h_value(3, 2) == 6);
    CHECK(h_value(3, 3) == 3);
    CHECK(h_value(4, 2) == 14);
}

TEST_CASE("h values are positive integers up to d = 12") {
    for (unsigned d = 1; d <= 12; ++d)
        for (unsigned s = 1; s <= d; ++s) CHECK(h_value(d, s) > 0); // integrality asserted inside
}

TEST_CASE("power-of-two bridge: sum 2(s+1) h(i;s) = 4^i") {
    for (unsigned i = 1; i <= 10; ++i) {
        Int sum(0);
        for (unsigned s = 1; s <= i; ++s) sum += Int(2) * (s + 1) * h_value(i, s);
        CHECK(sum == int_pow(4, i));
    }
}

TEST_CASE("trace values, frozen examples") {
    CHECK(trace_dr(3, 3, 1) == 216);
    CHECK(trace_dr(3, 3, 2) == 540);
    CHECK(trace_dr(3, 3, 3) == 1836);
    CHECK_THROWS_AS(trace_dr(3, 3, 4), UnsupportedOrderError);
    CHECK_THROWS_AS(trace_dr(2, 3, 1), ParameterError);
}

TEST_CASE("trace_any handles the r-symmetry zeros") {
    CHECK(trace_any(3, 3, 2) == 0);
    CHECK(trace_any(3, 3, 3) == 216);
    CHECK(trace_any(4, 3, 6) == 0);
    CHECK(trace_any(3, 3, 9) == 1836);
    CHECK_THROWS_AS(trace_any(3, 3, 10), UnsupportedOrderError);
}

TEST_CASE("t vector values") {
    CHECK(t_vector(3, 3) == std::vector<Int>{Int(216), Int(162), Int(81)});
    CHECK(t_vector(3, 5)[4] == 1215);
    CHECK(t_vector(4, 3)[0] == 46656);
}

TEST_CASE("H matrix") {
    const ExactMatrix h = h_matrix(3);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(1, 0) == 1);
    CHECK(h.at(1, 1) == 2);
    CHECK(h.at(2, 0) == 1);
    CHECK(h.at(2, 1) == 6);
    CHECK(h.at(2, 2) == 8); // 2(l+1)
    CHECK(h.at(0, 1) == 0);
    CHECK(h.at(0, 2) == 0);
    CHECK(h.at(1, 2) == 0);
    // diagonal below the corner is h(i;i)
    const ExactMatrix h5 = h_matrix(5);
    for (unsigned i = 1; i < 5; ++i) CHECK(h5.at(i - 1, i - 1) == Rat(h_value(i, i)));
}

TEST_CASE("H t = T across the grid") {
    for (unsigned r : {3u, 4u, 5u})
        for (unsigned l = 3; l <= 8; ++l) {
            const ExactMatrix h = h_matrix(l);
            const std::vector<Int> t = t_vector(r, l);
            const TraceVector tv = trace_vector(r, l);
            for (unsigned d = 1; d <= l; ++d) {
                Rat sum(0);
                for (unsigned s = 1; s <= l; ++s) sum += h.at(d - 1, s - 1) * Rat(t[s - 1]);
                CHECK(sum == Rat(tv.entries[d - 1]));
                CHECK(tv.entries[d - 1] > 0);
            }
        }
    // the (3,3) case spelled out: (H t)_3 = 216 + 6*162 + 8*81
    CHECK(Int(216) + 6 * 162 + 8 * 81 == trace_dr(3, 3, 3));
}

TEST_CASE("moment bridge against the path columns") {
    for (unsigned j = 2; j <= 8; ++j)
        for (unsigned i = 1; i <= 8; ++i) {
            Int sum(0);
            for (unsigned s = 1; s <= std::min(i, j - 1); ++s)
                sum += Int(2) * (j - s) * h_value(i, s);
            CHECK(sum == moment_column(j, i));
        }
}
