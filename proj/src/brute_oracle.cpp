#include "hypercycle/brute_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "hypercycle/errors.hpp"

namespace hypercycle {

std::vector<std::vector<int>> hypercycle_edges(unsigned r, unsigned l) {
    if (r < 3 || l < 3) throw ParameterError("hypercycle_edges requires r >= 3 and l >= 3");
    std::vector<std::vector<int>> edges;
    edges.reserve(l);
    int next_added = static_cast<int>(l) + 1;
    for (unsigned i = 1; i <= l; ++i) {
        std::vector<int> e;
        e.push_back(static_cast<int>(i));
        for (unsigned t = 0; t < r - 2; ++t) e.push_back(next_added++);
        e.push_back(static_cast<int>(i % l + 1));
        edges.push_back(std::move(e));
    }
    return edges;
}

MultiDigraph digraph_of(const IndexTuple& f) {
    MultiDigraph d;
    for (const IndexEntry& entry : f)
        for (int v : entry.tail) ++d.arcs[{entry.head, v}];
    return d;
}

namespace {

// Shared BEST-theorem core on dense arrays: vertex ids 0..n-1, arc[i][j] =
// multiplicity, out[i]/in[i] degree totals. Isolated vertices are allowed
// and ignored.
Int eulerian_count_dense(std::size_t n, const std::vector<long>& arc, const std::vector<long>& out,
                         const std::vector<long>& in) {
    std::vector<std::size_t> active;
    for (std::size_t v = 0; v < n; ++v)
        if (out[v] != 0 || in[v] != 0) active.push_back(v);
    if (active.empty()) return Int(0);
    for (std::size_t v : active)
        if (out[v] != in[v]) return Int(0);

    // connectivity of the non-isolated part (balanced => weak = strong)
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{active[0]};
    seen[active[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : active) {
            if (seen[v]) continue;
            if (arc[u * n + v] != 0 || arc[v * n + u] != 0) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != active.size()) return Int(0);

    // arborescence count: primary minor of Deg_out - A on the active part,
    // first active vertex deleted
    const std::size_t m = active.size() - 1;
    ExactMatrix lap(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t u = active[i + 1];
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t v = active[j + 1];
            long entry = (u == v ? out[u] : 0) - arc[u * n + v];
            lap.at(i, j) = entry;
        }
    }
    const Rat tau = det_fraction_free(lap);
    if (!is_integral(tau) || tau < 0)
        throw InternalConsistencyError("arborescence count is not a nonnegative integer");
    Int count = tau.get_num();
    for (std::size_t v : active) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(out[v] - 1));
        count *= f;
    }
    return count;
}

} // namespace

Int count_eulerian_circuits(const MultiDigraph& d) {
    std::set<int> ids;
    for (const auto& [arc, mult] : d.arcs) {
        if (mult < 1) throw ParameterError("arc multiplicities must be positive");
        ids.insert(arc.first);
        ids.insert(arc.second);
    }
    std::vector<int> verts(ids.begin(), ids.end());
    const std::size_t n = verts.size();
    if (n == 0) return Int(0);
    auto index_of = [&](int v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<long> arc(n * n, 0), out(n, 0), in(n, 0);
    for (const auto& [a, mult] : d.arcs) {
        const std::size_t u = index_of(a.first), v = index_of(a.second);
        arc[u * n + v] += mult;
        out[u] += mult;
        in[v] += mult;
    }
    return eulerian_count_dense(n, arc, out, in);
}

Int brute_trace_cost_estimate(unsigned r, unsigned l, unsigned order) {
    // patterns = l * r * (r-1)!: per edge, r head choices and (r-1)! tuple
    // orders; enumeration visits one multiset of `order` patterns per leaf
    Int patterns = Int(l) * r * factorial(r - 1);
    Int n_choices;
    mpz_bin_ui(n_choices.get_mpz_t(), Int(patterns + order - 1).get_mpz_t(), order);
    return n_choices;
}

namespace {

struct Pattern {
    int head;
    std::vector<int> tail;
    unsigned edge;
};

// Enumeration state for one worker. Patterns are grouped contiguously by
// edge; edge_total tracks the multiplicity assigned to the current edge so
// far, allowing a subtree cut at each edge boundary: added vertices belong to
// exactly one edge, so an edge total that is not a multiple of r already
// violates r-valence for them.
struct Enumerator {
    unsigned r, l, order;
    std::size_t n; // vertex count l(r-1)
    const std::vector<Pattern>* patterns;
    std::vector<unsigned> counts;
    std::vector<unsigned> edge_of; // pattern index -> edge
    Rat acc;

    // scratch buffers reused across leaves
    std::vector<long> arc, out, in;
    std::vector<long> head_count;

    void run(std::size_t start_pattern, unsigned remaining, unsigned current_edge,
             unsigned edge_total) {
        const auto& pats = *patterns;
        if (start_pattern == pats.size()) {
            if (remaining == 0 && edge_total % r == 0) process_leaf();
            return;
        }
        if (pats[start_pattern].edge != current_edge) {
            if (edge_total % r != 0) return; // r-valence already broken
            run(start_pattern, remaining, pats[start_pattern].edge, 0);
            return;
        }
        for (unsigned c = 0; c <= remaining; ++c) {
            counts[start_pattern] = c;
            run(start_pattern + 1, remaining - c, current_edge, edge_total + c);
        }
        counts[start_pattern] = 0;
    }

    void process_leaf() {
        const auto& pats = *patterns;
        std::fill(arc.begin(), arc.end(), 0);
        std::fill(out.begin(), out.end(), 0);
        std::fill(in.begin(), in.end(), 0);
        std::fill(head_count.begin(), head_count.end(), 0);
        for (std::size_t p = 0; p < pats.size(); ++p) {
            const long c = counts[p];
            if (c == 0) continue;
            const std::size_t u = static_cast<std::size_t>(pats[p].head) - 1;
            head_count[u] += c;
            for (int w : pats[p].tail) {
                const std::size_t v = static_cast<std::size_t>(w) - 1;
                arc[u * n + v] += c;
                out[u] += c;
                in[v] += c;
            }
        }
        // full r-valence: vertex appearances = head count + tuple appearances
        for (std::size_t v = 0; v < n; ++v)
            if ((head_count[v] + in[v]) % r != 0) return;

        const Int circuits = eulerian_count_dense(n, arc, out, in);
        if (circuits == 0) return;

        // orderings realizing this multiset with nondecreasing heads:
        // prod_v k_v! / prod_p count_p!
        Int orderings(1);
        for (std::size_t v = 0; v < n; ++v) {
            if (head_count[v] < 2) continue;
            Int f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(head_count[v]));
            orderings *= f;
        }
        Int c_f(1); // prod_v d+(v)!
        for (std::size_t p = 0; p < pats.size(); ++p) {
            if (counts[p] < 2) continue;
            Int f;
            mpz_fac_ui(f.get_mpz_t(), counts[p]);
            orderings /= f; // exact: divides the product of head factorials
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (out[v] == 0) continue;
            Int f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(out[v]));
            c_f *= f;
        }
        acc += make_rat(orderings * circuits * order * (r - 1), c_f);
    }
};

} // namespace

Rat brute_trace(unsigned r, unsigned l, unsigned order, const BruteOptions& opts) {
    if (r < 3 || l < 3) throw ParameterError("brute_trace requires r >= 3 and l >= 3");
    if (order < 1) throw ParameterError("brute_trace requires order >= 1");
    const Int estimate = brute_trace_cost_estimate(r, l, order);
    if (estimate > opts.budget)
        throw FeasibilityError("enumeration of " + estimate.get_str() +
                                   " index-tuple multisets exceeds the budget of " +
                                   opts.budget.get_str(),
                               estimate.get_str());

    std::vector<Pattern> patterns;
    const auto edges = hypercycle_edges(r, l);
    for (unsigned e = 0; e < l; ++e)
        for (int head : edges[e]) {
            std::vector<int> rest;
            for (int v : edges[e])
                if (v != head) rest.push_back(v);
            std::sort(rest.begin(), rest.end());
            do {
                patterns.push_back({head, rest, e});
            } while (std::next_permutation(rest.begin(), rest.end()));
        }

    const std::size_t n = static_cast<std::size_t>(l) * (r - 1);
    auto make_enumerator = [&]() {
        Enumerator en;
        en.r = r;
        en.l = l;
        en.order = order;
        en.n = n;
        en.patterns = &patterns;
        en.counts.assign(patterns.size(), 0);
        en.arc.assign(n * n, 0);
        en.out.assign(n, 0);
        en.in.assign(n, 0);
        en.head_count.assign(n, 0);
        en.acc = 0;
        return en;
    };

    Rat total(0);
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        Enumerator en = make_enumerator();
        en.run(0, order, 0, 0);
        total = en.acc;
    } else {
        // Partition by the multiplicities of the first two patterns. Partial
        // sums are exact rationals combined in task order, so the result is
        // identical to the serial one for any schedule.
        struct Task {
            unsigned c0, c1;
        };
        std::vector<Task> tasks;
        for (unsigned c0 = 0; c0 <= order; ++c0)
            for (unsigned c1 = 0; c1 + c0 <= order; ++c1) tasks.push_back({c0, c1});
        std::vector<Rat> partial(tasks.size(), Rat(0));
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            Enumerator en = make_enumerator();
            for (;;) {
                const std::size_t t = next.fetch_add(1);
                if (t >= tasks.size()) break;
                en.acc = 0;
                en.counts[0] = tasks[t].c0;
                en.counts[1] = tasks[t].c1;
                const unsigned used = tasks[t].c0 + tasks[t].c1;
                // patterns 0 and 1 always exist (each edge has >= 6 patterns)
                // and share edge 0
                en.run(2, order - used, 0, used);
                partial[t] = en.acc;
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const Rat& p : partial) total += p;
    }

    // pi_F is the same for every surviving tuple: (1/(r-1)!)^order
    total *= make_rat(Int(1), int_pow(factorial(r - 1), order));
    total *= int_pow(r - 1, n - 1);
    if (!is_integral(total))
        throw InternalConsistencyError("brute-force trace is not integral: " + total.get_str());
    return total;
}

// --- Laplacian-minor families ----------------------------------------------

namespace {

// Laplacian minor over explicit vertex/edge structure: arcs u->w with
// multiplicity per (ordered) pair; the vertex `deleted` is removed.
ExactMatrix laplacian_minor(std::size_t n_vertices, const std::vector<std::vector<long>>& mult,
                            std::size_t deleted) {
    std::vector<long> outdeg(n_vertices, 0);
    for (std::size_t u = 0; u < n_vertices; ++u)
        outdeg[u] = std::accumulate(mult[u].begin(), mult[u].end(), 0L);
    ExactMatrix minor(n_vertices - 1, n_vertices - 1);
    std::size_t mi = 0;
    for (std::size_t u = 0; u < n_vertices; ++u) {
        if (u == deleted) continue;
        std::size_t mj = 0;
        for (std::size_t w = 0; w < n_vertices; ++w) {
            if (w == deleted) continue;
            minor.at(mi, mj) = (u == w ? outdeg[u] : 0) - mult[u][w];
            ++mj;
        }
        ++mi;
    }
    return minor;
}

void check_weights(const std::vector<unsigned>& a) {
    if (a.empty()) throw ParameterError("at least one edge weight is required");
    for (unsigned w : a)
        if (w < 1) throw ParameterError("edge weights must be positive");
}

} // namespace

ExactMatrix build_path_minor(unsigned r, const std::vector<unsigned>& a) {
    if (r < 3) throw ParameterError("r must be >= 3");
    check_weights(a);
    const std::size_t s = a.size();
    // hyperpath on s edges: cores 0..s, edge i adds r-2 internal vertices;
    // every vertex of edge i heads it a_i times, so the arc multiplicity
    // between two vertices is the sum of the weights of their common edges
    const std::size_t n = (s + 1) + s * (r - 2);
    std::vector<std::vector<std::size_t>> edges(s);
    std::size_t next_internal = s + 1;
    for (std::size_t i = 0; i < s; ++i) {
        edges[i].push_back(i);
        for (unsigned t = 0; t < r - 2; ++t) edges[i].push_back(next_internal++);
        edges[i].push_back(i + 1);
    }
    std::vector<std::vector<long>> mult(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t u : edges[i])
            for (std::size_t w : edges[i])
                if (u != w) mult[u][w] += a[i];
    return laplacian_minor(n, mult, 0); // delete the first path endpoint
}

ExactMatrix build_cycle_minor(unsigned r, const std::vector<unsigned>& a) {
    if (r < 3) throw ParameterError("r must be >= 3");
    if (a.size() < 3) throw ParameterError("cycle minors require l >= 3");
    check_weights(a);
    const std::size_t l = a.size();
    const std::size_t n = l * (r - 1);
    std::vector<std::vector<std::size_t>> edges(l);
    std::size_t next_internal = l;
    for (std::size_t i = 0; i < l; ++i) {
        edges[i].push_back(i);
        for (unsigned t = 0; t < r - 2; ++t) edges[i].push_back(next_internal++);
        edges[i].push_back((i + 1) % l);
    }
    std::vector<std::vector<long>> mult(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t u : edges[i])
            for (std::size_t w : edges[i])
                if (u != w) mult[u][w] += a[i];
    return laplacian_minor(n, mult, 0);
}

ExactMatrix build_uniform_cycle_minor(unsigned r, unsigned l, unsigned a) {
    if (r < 3 || l < 3) throw ParameterError("uniform cycle minors require r >= 3 and l >= 3");
    if (a < 1) throw ParameterError("edge weight must be positive");
    // second Eulerian-feasible cycle configuration: core i heads only edge i,
    // 2a times; each internal vertex heads its own edge a times
    const std::size_t n = static_cast<std::size_t>(l) * (r - 1);
    std::vector<std::vector<long>> mult(n, std::vector<long>(n, 0));
    std::size_t next_internal = l;
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<std::size_t> edge{i};
        for (unsigned t = 0; t < r - 2; ++t) edge.push_back(next_internal++);
        edge.push_back((i + 1) % l);
        for (std::size_t w : edge)
            if (w != i) mult[i][w] += 2L * a;
        for (std::size_t t = 1; t + 1 < edge.size(); ++t)
            for (std::size_t w : edge)
                if (w != edge[t]) mult[edge[t]][w] += a;
    }
    return laplacian_minor(n, mult, 0);
}

bool minor_check_path(unsigned r, const std::vector<unsigned>& a) {
    const Rat det = det_fraction_free(build_path_minor(r, a));
    Int expected = int_pow(r, a.size() * (r - 2));
    for (unsigned w : a) expected *= int_pow(w, r - 1);
    return det == Rat(expected);
}

bool minor_check_cycle(unsigned r, const std::vector<unsigned>& a) {
    const Rat det = det_fraction_free(build_cycle_minor(r, a));
    Int base = Int(2) * int_pow(r, a.size() * (r - 2) - 1);
    for (unsigned w : a) base *= int_pow(w, r - 1);
    Rat harmonic(0);
    for (unsigned w : a) harmonic += make_rat(1, w);
    return det == base * harmonic;
}

bool minor_check_uniform_cycle(unsigned r, unsigned l, unsigned a) {
    const Rat det = det_fraction_free(build_uniform_cycle_minor(r, l, a));
    const Int expected =
        int_pow(2, l) * int_pow(r, l * (r - 2) - 1) * int_pow(a, (r - 1) * l - 1);
    return det == Rat(expected);
}

bool minor_determinant_check(MinorKind kind, unsigned r, const std::vector<unsigned>& params) {
    switch (kind) {
    case MinorKind::Path:
        return minor_check_path(r, params);
    case MinorKind::Cycle:
        return minor_check_cycle(r, params);
    case MinorKind::UniformCycle:
        if (params.size() != 2) throw ParameterError("uniform cycle check expects params {l, a}");
        return minor_check_uniform_cycle(r, params[0], params[1]);
    }
    throw ParameterError("unknown minor kind");
}

} // namespace hypercycle
