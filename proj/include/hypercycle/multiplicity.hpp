#pragma once

#include <string>
#include <vector>

#include "hypercycle/matrix.hpp"
#include "hypercycle/numbers.hpp"

namespace hypercycle {

/// Exponents of the factored characteristic polynomial: m0 for the lambda
/// power, m[j-1] for the factor carrying the squared spectrum of P_j
/// (j = 1 being the cycle factor mu - 4).
struct MultiplicityVector {
    unsigned r = 0, l = 0;
    Int m0;
    std::vector<Int> m;
};

/// S_{ij} = moment_column(j, i) for i, j in [l].
ExactMatrix s_matrix(unsigned l);

/// The integer matrix with column 1 = (4, 6, ..., 2(l-1), 2l, l)^T and, in
/// row i <= l-1, the values 2, 4, ..., 2(l-i) in columns i+1..l. This is the
/// normative definition; the tridiagonal-with-corner matrix B is derived from
/// it by exact inversion (so the pair is consistent by construction even at
/// l = 3, where the banded display is ambiguous).
ExactMatrix b_inverse_matrix(unsigned l);

/// mat_inverse(b_inverse_matrix(l)); for l >= 4 also checked against the
/// banded form (row 1 = e_l/l, interior rows 1/2,-1,1/2, corner (l+1)/l).
ExactMatrix b_matrix(unsigned l);

/// Solve the multiplicities: m = (1/r) B t, then m0 by degree accounting
/// m0 = l (r-1)^{l(r-1)} - sum_i i r m_i. Integrality and nonnegativity of
/// every component are asserted; m_l = 0 is asserted when r = 3.
MultiplicityVector solve_multiplicities(unsigned r, unsigned l);

/// Closed-form multiplicity vectors for l = 5 and l = 6 as polynomial
/// expressions in r (used as an independent check on the solver).
MultiplicityVector multiplicities_l5_closed_form(unsigned r);
MultiplicityVector multiplicities_l6_closed_form(unsigned r);

struct IdentityReport {
    bool s_equals_h_times_b_inverse = false;
    bool det_s_matches_closed_form = false;
    bool b_times_b_inverse_is_identity = false;
    std::string detail; // offending entries, empty when all pass
    bool all() const {
        return s_equals_h_times_b_inverse && det_s_matches_closed_form &&
               b_times_b_inverse_is_identity;
    }
};

/// Exact verification of the matrix identities
///   (a) S = H B^{-1},  (b) Det(S) = (-1)^{l-1} 2^l (l+1)!,  (c) B B^{-1} = I.
IdentityReport verify_identities(unsigned l);

/// Numeric evaluation of the closed form for S^{-1} against the exact
/// inverse, entrywise within tol. The closed form sums, over the l!-element
/// index set alpha in [1]x...x[l] with squared eigenvalues
/// x_t = lambda_{t,alpha_t}^2 (x_1 = 4):
///
///   S^{-1}_{ij} = (-1)^{i+j-l+1} / (2^l (l+1)!) * (1/i) * sum_alpha
///                 sigma_{l-1}(xbar_i) sigma_{l-j}(xbar_i)
///                 prod_{k<h, k,h != i} (x_h - x_k),
///
/// where xbar_i omits x_i. The summand does not depend on alpha_i, which the
/// 1/i compensates. Restricted to 3 <= l <= 6 (the sum has l! terms).
bool s_inverse_closed_form_check(unsigned l, double tol);

} // namespace hypercycle
