#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hypercycle/matrix.hpp"
#include "hypercycle/numbers.hpp"

namespace hypercycle {

/// Directed multigraph: arc multiplicities keyed by (tail, head) vertex ids.
struct MultiDigraph {
    std::map<std::pair<int, int>, long> arcs; // multiplicity >= 1
};

/// One entry i*alpha of an index tuple: a head vertex and the ordered
/// (r-1)-tuple it multiplies.
struct IndexEntry {
    int head = 0;
    std::vector<int> tail;
};
using IndexTuple = std::vector<IndexEntry>;

/// Hyperedges of the r-uniform hypercycle of length l on vertex set
/// [l(r-1)]: cores are 1..l, edge i joins core i to core (i mod l)+1 through
/// r-2 added vertices numbered l+1 onward, edge by edge.
std::vector<std::vector<int>> hypercycle_edges(unsigned r, unsigned l);

/// The multi-digraph of an index tuple: an arc from each head to every
/// member of its tuple, multiplicities accumulated.
MultiDigraph digraph_of(const IndexTuple& f);

/// Number of Eulerian circuits (multi-arcs distinct, rotations identified):
/// 0 when some vertex has in-degree != out-degree or the non-isolated part is
/// disconnected; otherwise tau(D) * prod_v (d+(v)-1)! with tau(D) a primary
/// minor of the out-degree Laplacian.
Int count_eulerian_circuits(const MultiDigraph& d);

struct BruteOptions {
    Int budget = Int(100000000); // max admissible enumeration size
    unsigned jobs = 1;           // worker threads; result is schedule-independent
};

/// Ground-truth trace of the given order, straight from the digraph trace
/// definition: enumerate every index tuple with nondecreasing heads over
/// nonzero tensor patterns, keep the r-valent ones, and accumulate
/// (r-1)^{n-1} |E(F)| pi_F |Euler circuits| / c(F) as exact rationals.
/// The total is asserted integral (it is a spectral moment) but returned as
/// the rational it is computed as.
Rat brute_trace(unsigned r, unsigned l, unsigned order, const BruteOptions& opts = {});

/// Estimated enumeration size for brute_trace (the number of pattern
/// multisets), the quantity the budget guard compares against.
Int brute_trace_cost_estimate(unsigned r, unsigned l, unsigned order);

// --- Laplacian-minor determinants -----------------------------------------
//
// The three multi-digraph families whose spanning-tree minors admit closed
// forms: hyperpath configurations (multiplicity a_i r on edge i), the two
// Eulerian-feasible full-cycle configurations. Each build_* function returns
// the primary minor matrix (first core vertex deleted); each check evaluates
// its exact determinant against the closed form.

ExactMatrix build_path_minor(unsigned r, const std::vector<unsigned>& a);
ExactMatrix build_cycle_minor(unsigned r, const std::vector<unsigned>& a);
ExactMatrix build_uniform_cycle_minor(unsigned r, unsigned l, unsigned a);

/// det = r^{s(r-2)} prod a_i^{r-1}
bool minor_check_path(unsigned r, const std::vector<unsigned>& a);
/// det = 2 r^{l(r-2)-1} prod a_i^{r-1} * sum 1/a_i
bool minor_check_cycle(unsigned r, const std::vector<unsigned>& a);
/// det = 2^l r^{l(r-2)-1} a^{(r-1)l-1}
bool minor_check_uniform_cycle(unsigned r, unsigned l, unsigned a);

enum class MinorKind { Path, Cycle, UniformCycle };

/// Dispatcher: params are a_1..a_s for Path, a_1..a_l for Cycle, and {l, a}
/// for UniformCycle.
bool minor_determinant_check(MinorKind kind, unsigned r, const std::vector<unsigned>& params);

} // namespace hypercycle
