#pragma once

#include <vector>

#include "hypercycle/matrix.hpp"
#include "hypercycle/polynomial.hpp"

namespace hypercycle {

/// Characteristic polynomial of the j-vertex path P_j, from the three-term
/// recurrence phi(P_j) = x*phi(P_{j-1}) - phi(P_{j-2}), phi(P_0) = 1,
/// phi(P_1) = x. Monic of degree j; roots are 2cos(k*pi/(j+1)).
IntPoly path_charpoly(unsigned j);

/// 0/1 adjacency matrix of P_j.
ExactMatrix path_adjacency(unsigned j);

/// Monic polynomial in mu whose roots are the squared eigenvalues of P_j.
struct SquaredSpectrumPoly {
    unsigned j = 0;
    IntPoly poly; // degree j, monic, variable mu
};

/// Computed exactly by the even/odd coefficient split: write
/// phi(P_j; x) = g(x^2) + x*h(x^2); the result is (-1)^j (g(mu)^2 - mu*h(mu)^2).
/// No floating point is involved.
SquaredSpectrumPoly squared_spectrum_poly(unsigned j);

/// Entry S_{ij} of the spectral-moment matrix: the sum of the 2i-th powers of
/// the path eigenvalues, counted as closed walks of length 2i in P_j via an
/// exact matrix power.
///
/// Column j = 1 is special: it carries the cycle eigenvalue convention
/// (the j = 1 symbol denotes 2, not the P_1 spectrum {0}), so the entry is
/// 4^i rather than trace(A(P_1)^{2i}) = 0.
Int moment_column(unsigned j, unsigned i);

/// One value of the squared-eigenvalue multiset of the length-l signed cycle
/// family: either the cycle value 4 or a path value 4cos^2(k*pi/(j+1)).
struct SpectrumValue {
    bool from_cycle = false;
    unsigned j = 0; // path order; 0 for the cycle value
    unsigned k = 0;
    double mu = 0.0;
};

/// The multiset {4} union {4cos^2(k*pi/(j+1)) : k in [j], j in [J]} where
/// J = l - 1 when uniformity_three is set (the induced-subgraph rule for
/// r = 3) and J = l otherwise. Values are double-precision and only used on
/// verification paths.
std::vector<SpectrumValue> signed_cycle_squared_values(unsigned l, bool uniformity_three);

} // namespace hypercycle
