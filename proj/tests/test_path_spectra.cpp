#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hypercycle/errors.hpp"
#include "hypercycle/path_spectra.hpp"
#include "hypercycle/trace_engine.hpp"

using namespace hypercycle;

namespace {

std::vector<double> path_eigenvalues(unsigned j) {
    std::vector<double> out;
    for (unsigned k = 1; k <= j; ++k) out.push_back(2.0 * std::cos(k * M_PI / (j + 1)));
    return out;
}

// Horner in extended precision: double evaluation of the degree-12
// polynomials loses ~1e-8 to cancellation, above the 1e-9 bound under test.
long double eval_ld(const IntPoly& p, long double x) {
    long double acc = 0.0L;
    for (std::size_t i = static_cast<std::size_t>(p.degree()) + 1; i-- > 0;)
        acc = acc * x + static_cast<long double>(p.coeff(i).get_d());
    return acc;
}

} // namespace

TEST_CASE("path characteristic polynomials from the recurrence") {
    CHECK(path_charpoly(0) == IntPoly::one());
    CHECK(path_charpoly(1) == IntPoly::variable());
    CHECK(path_charpoly(2) == IntPoly{std::vector<Int>{Int(-1), Int(0), Int(1)}});
    CHECK(path_charpoly(4) == IntPoly{std::vector<Int>{Int(1), Int(0), Int(-3), Int(0), Int(1)}});
    // roots must be the cosine values
    for (unsigned j = 1; j <= 12; ++j) {
        const IntPoly phi = path_charpoly(j);
        CHECK(phi.is_monic());
        CHECK(phi.degree() == static_cast<long>(j));
        for (double lam : path_eigenvalues(j))
            CHECK(std::abs(static_cast<double>(eval_ld(phi, lam))) < 1e-9);
    }
}

TEST_CASE("squared-spectrum polynomials, frozen examples") {
    CHECK(squared_spectrum_poly(1).poly == IntPoly{std::vector<Int>{Int(0), Int(1)}});
    CHECK(squared_spectrum_poly(2).poly ==
          IntPoly{std::vector<Int>{Int(1), Int(-2), Int(1)}});
    CHECK(squared_spectrum_poly(3).poly ==
          IntPoly{std::vector<Int>{Int(0), Int(4), Int(-4), Int(1)}});
}

TEST_CASE("squared-spectrum polynomials vanish on the squared eigenvalues") {
    for (unsigned j = 1; j <= 12; ++j) {
        const SquaredSpectrumPoly psi = squared_spectrum_poly(j);
        CHECK(psi.poly.is_monic());
        CHECK(psi.poly.degree() == static_cast<long>(j));
        for (double lam : path_eigenvalues(j)) {
            const long double mu = static_cast<long double>(lam) * lam;
            CHECK(std::abs(static_cast<double>(eval_ld(psi.poly, mu))) < 1e-9);
        }
        // constant term vanishes exactly when the path has eigenvalue 0
        CHECK((psi.poly.coeff(0) == 0) == (j % 2 == 1));
    }
}

TEST_CASE("moment column values") {
    CHECK(moment_column(1, 2) == 16); // 4^i convention in the first column
    CHECK(moment_column(2, 1) == 2);
    CHECK(moment_column(4, 3) == 36);
    CHECK_THROWS_AS(moment_column(0, 1), ParameterError);
}

TEST_CASE("moment column equals the numeric power sums") {
    for (unsigned j = 2; j <= 10; ++j)
        for (unsigned i = 1; i <= 8; ++i) {
            double numeric = 0.0;
            for (double lam : path_eigenvalues(j)) numeric += std::pow(lam * lam, i);
            const double exact = moment_column(j, i).get_d();
            CHECK(std::abs(numeric - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
}

TEST_CASE("moment column matches the triangular h-sum") {
    for (unsigned j = 2; j <= 8; ++j)
        for (unsigned i = 1; i <= 8; ++i) {
            Int sum(0);
            for (unsigned s = 1; s <= std::min(i, j - 1); ++s)
                sum += Int(2) * (j - s) * h_value(i, s);
            CHECK(moment_column(j, i) == sum);
        }
}

TEST_CASE("signed cycle squared values") {
    const auto all = signed_cycle_squared_values(3, false);
    std::vector<double> values;
    for (const auto& v : all) values.push_back(v.mu);
    std::sort(values.begin(), values.end());
    const std::vector<double> expected{0, 0, 1, 1, 2, 2, 4};
    REQUIRE(values.size() == expected.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        CHECK(values[i] == doctest::Approx(expected[i]).epsilon(1e-12));

    const auto induced = signed_cycle_squared_values(3, true);
    std::vector<double> values3;
    for (const auto& v : induced) values3.push_back(v.mu);
    std::sort(values3.begin(), values3.end());
    const std::vector<double> expected3{0, 1, 1, 4};
    REQUIRE(values3.size() == expected3.size());
    for (std::size_t i = 0; i < values3.size(); ++i)
        CHECK(values3[i] == doctest::Approx(expected3[i]).epsilon(1e-12));

    const auto l4 = signed_cycle_squared_values(4, false);
    const double golden = 4 * std::pow(std::cos(M_PI / 5), 2); // (3+sqrt(5))/2
    CHECK(std::any_of(l4.begin(), l4.end(),
                      [&](const SpectrumValue& v) { return std::abs(v.mu - golden) < 1e-12; }));
    CHECK(std::abs(golden - 2.618033988749895) < 1e-12);

    CHECK_THROWS_AS(signed_cycle_squared_values(2, false), ParameterError);
}

TEST_CASE("squared cycle spectrum equals squared path spectrum plus {4}, odd t") {
    for (unsigned t = 5; t <= 11; t += 2) {
        std::vector<double> cycle;
        for (unsigned k = 1; k <= t; ++k) {
            const double c = 2.0 * std::cos(2.0 * k * M_PI / t);
            cycle.push_back(c * c);
        }
        std::vector<double> path{4.0};
        for (double lam : path_eigenvalues(t - 1)) path.push_back(lam * lam);
        std::sort(cycle.begin(), cycle.end());
        std::sort(path.begin(), path.end());
        REQUIRE(cycle.size() == path.size());
        for (std::size_t i = 0; i < cycle.size(); ++i)
            CHECK(std::abs(cycle[i] - path[i]) < 1e-9);
    }
}
