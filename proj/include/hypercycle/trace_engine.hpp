#pragma once

#include <vector>

#include "hypercycle/matrix.hpp"
#include "hypercycle/numbers.hpp"

namespace hypercycle {

/// A composition of d into positive parts.
using Composition = std::vector<unsigned>;

/// All C(d-1, s-1) compositions of d into exactly s positive parts, in
/// lexicographic order.
std::vector<Composition> compositions(unsigned d, unsigned s);

/// The circular-arrangement count h(d;s):
///   h(d;1) = 1,
///   h(d;s) = d * sum over compositions (a_1..a_s) of d of
///            prod_{j=2}^{s-1} a_j * prod_{j=1}^{s-1} C(a_j+a_{j+1}, a_j)
///            / prod_{j=1}^{s-1} (a_j + a_{j+1}).
/// Individual terms are rationals; the total is asserted integral. Memoized;
/// the cache is mutex-protected, results are identical regardless of caller
/// interleaving.
Int h_value(unsigned d, unsigned s);

/// Trace of order d*r of the adjacency tensor of the r-uniform hypercycle of
/// length l, for 1 <= d <= l:
///   d < l: sum_{s=1}^{d} h(d;s) l r^{s(r-2)+1} (r-1)^{(l-s)(r-1)-1}
///   d = l: the same sum up to s = l-1, plus the cycle term 2(l+1) l r^{l(r-2)}.
/// Orders with d > l are refused (no closed form is derived there).
Int trace_dr(unsigned r, unsigned l, unsigned d);

/// Trace of arbitrary order up to l*r: zero whenever r does not divide the
/// order (the spectrum is r-symmetric), trace_dr(r, l, order/r) otherwise.
Int trace_any(unsigned r, unsigned l, unsigned long order);

/// t_s = l r^{s(r-2)+1} (r-1)^{(l-s)(r-1)-1} for s < l; t_l = l r^{l(r-2)}.
std::vector<Int> t_vector(unsigned r, unsigned l);

/// Lower-triangular l x l matrix H with h_ij = h(i;j) for j <= i, except
/// h_ll = 2(l+1). Satisfies H t = T.
ExactMatrix h_matrix(unsigned l);

/// The full trace vector T = (Tr_r, Tr_2r, ..., Tr_lr).
struct TraceVector {
    unsigned r = 0, l = 0;
    std::vector<Int> entries; // entries[d-1] = trace of order d*r
};
TraceVector trace_vector(unsigned r, unsigned l);

} // namespace hypercycle
