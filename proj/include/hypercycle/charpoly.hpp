#pragma once

#include <string>
#include <vector>

#include "hypercycle/numbers.hpp"
#include "hypercycle/polynomial.hpp"

namespace hypercycle {

/// One block of the factored characteristic polynomial: a monic integer
/// polynomial in mu = lambda^r and its (arbitrary-precision) exponent.
struct Factor {
    IntPoly poly;
    Int exponent;
    bool operator==(const Factor&) const = default;
};

/// phi(lambda) = lambda^lambda_exponent * prod_k f_k(lambda^r)^{e_k}.
/// Zero-exponent factors are never stored.
struct FactoredCharPoly {
    unsigned r = 0, l = 0;
    Int lambda_exponent;
    std::vector<Factor> factors;
    bool canonical = false;

    Int total_degree() const;
    bool operator==(const FactoredCharPoly&) const = default;
};

/// Factored characteristic polynomial of the r-uniform hypercycle of length
/// l: lambda^{m0} (mu - 4)^{m1} prod_{j=2}^{l} psi_j(mu)^{m_j} with the
/// multiplicities from solve_multiplicities. At r = 3 the j = l factor is
/// absent automatically because m_l = 0.
FactoredCharPoly assemble(unsigned r, unsigned l);

/// Canonical form: mu-powers inside factors move into the lambda exponent,
/// integer roots split off as linear blocks, perfect squares flatten, equal
/// blocks merge by summing exponents. Factor order: (mu - 4) first, then
/// ascending degree (same-degree blocks ordered by descending coefficient
/// sequence, so mu-1 precedes mu-2). Idempotent and degree-preserving.
FactoredCharPoly canonicalize(const FactoredCharPoly& f);

/// Fully expanded monic polynomial in lambda. Refused (FeasibilityError,
/// reporting the exact degree) when the total degree exceeds max_degree.
IntPoly expand(const FactoredCharPoly& f, const Int& max_degree = Int(1000000));

/// Exact d*r-th power sum of the roots of the factored polynomial:
/// r * sum_k e_k * (d-th power sum of the roots of f_k). Equals the d*r-th
/// trace when f is a valid hypercycle characteristic polynomial.
Int factored_power_sum(const FactoredCharPoly& f, unsigned d);

struct SpectrumCheckReport {
    bool pass = false;
    std::string detail; // unmatched values when failing
};

/// Checks that the root multiset of the factors (each retained factor
/// contributing its full root multiset once, plus one zero from a positive
/// lambda power, which is the block standing in for the one-vertex path row)
/// equals {4} union the squared-path-eigenvalue table for j in [l] (r >= 4)
/// or [l-1] (r = 3), within tol. Roots are located numerically using the
/// known closed-form values as candidates and removed by synthetic
/// deflation. Meaningful for assembled (non-canonical) polynomials, whose
/// factors are exactly the per-j blocks.
SpectrumCheckReport numeric_spectrum_check(const FactoredCharPoly& f, double tol = 1e-9);

enum class RenderFormat { Text, Latex, Json };

std::string render(const FactoredCharPoly& f, RenderFormat format);
std::string render_text(const FactoredCharPoly& f);
std::string render_latex(const FactoredCharPoly& f);
std::string render_json(const FactoredCharPoly& f);

/// Inverse of render_json; validates the schema and the degree field.
FactoredCharPoly parse_json(const std::string& text);

/// Sparse rendering of an expanded polynomial: one "exponent coefficient"
/// pair per line, ascending exponents, decimal integers.
std::string render_expanded(const IntPoly& expanded);

} // namespace hypercycle
