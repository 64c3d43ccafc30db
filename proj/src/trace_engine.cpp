#include "hypercycle/trace_engine.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "hypercycle/errors.hpp"

namespace hypercycle {

std::vector<Composition> compositions(unsigned d, unsigned s) {
    if (s < 1 || s > d) throw ParameterError("compositions requires 1 <= s <= d");
    std::vector<Composition> out;
    Composition cur(s, 0);
    // lexicographic: choose the first part smallest-first, recurse on the rest
    auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        if (pos + 1 == s) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        const unsigned parts_left = s - pos - 1;
        for (unsigned first = 1; first + parts_left <= remaining; ++first) {
            cur[pos] = first;
            self(self, pos + 1, remaining - first);
        }
    };
    rec(rec, 0, d);
    return out;
}

Int h_value(unsigned d, unsigned s) {
    if (s < 1 || s > d) throw ParameterError("h_value requires 1 <= s <= d");
    if (s == 1) return Int(1);

    static std::map<std::pair<unsigned, unsigned>, Int> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find({d, s}); it != cache.end()) return it->second;
    }

    Rat total(0);
    for (const Composition& a : compositions(d, s)) {
        Int num(1);
        for (unsigned j = 1; j + 1 < s; ++j) num *= a[j];
        Int den(1);
        for (unsigned j = 0; j + 1 < s; ++j) {
            num *= binomial(a[j] + a[j + 1], a[j]);
            den *= a[j] + a[j + 1];
        }
        total += make_rat(num, den);
    }
    total *= d;
    if (!is_integral(total))
        throw InternalConsistencyError("h(" + std::to_string(d) + ";" + std::to_string(s) +
                                       ") is not integral: " + total.get_str());
    Int value = total.get_num();
    std::lock_guard lock(cache_mutex);
    return cache.emplace(std::make_pair(d, s), std::move(value)).first->second;
}

namespace {

// Common path-configuration term of the trace formulas.
Int path_term(unsigned r, unsigned l, unsigned d, unsigned s) {
    return h_value(d, s) * l * int_pow(r, s * (r - 2) + 1) *
           int_pow(r - 1, (l - s) * (r - 1) - 1);
}

void check_params(unsigned r, unsigned l) {
    if (r < 3 || l < 3) throw ParameterError("hypercycle parameters require r >= 3 and l >= 3");
}

} // namespace

Int trace_dr(unsigned r, unsigned l, unsigned d) {
    check_params(r, l);
    if (d < 1) throw ParameterError("trace_dr requires d >= 1");
    if (d > l)
        throw UnsupportedOrderError("no trace formula for d = " + std::to_string(d) +
                                    " > l = " + std::to_string(l));
    Int total(0);
    const unsigned smax = (d == l) ? l - 1 : d;
    for (unsigned s = 1; s <= smax; ++s) total += path_term(r, l, d, s);
    if (d == l) total += Int(2) * (l + 1) * l * int_pow(r, l * (r - 2));
    return total;
}

Int trace_any(unsigned r, unsigned l, unsigned long order) {
    check_params(r, l);
    if (order < 1) throw ParameterError("trace_any requires order >= 1");
    if (order > static_cast<unsigned long>(l) * r)
        throw UnsupportedOrderError("order " + std::to_string(order) + " exceeds l*r = " +
                                    std::to_string(static_cast<unsigned long>(l) * r));
    if (order % r != 0) return Int(0);
    return trace_dr(r, l, static_cast<unsigned>(order / r));
}

std::vector<Int> t_vector(unsigned r, unsigned l) {
    check_params(r, l);
    std::vector<Int> t;
    t.reserve(l);
    for (unsigned s = 1; s < l; ++s)
        t.push_back(Int(l) * int_pow(r, s * (r - 2) + 1) * int_pow(r - 1, (l - s) * (r - 1) - 1));
    t.push_back(Int(l) * int_pow(r, l * (r - 2)));
    return t;
}

ExactMatrix h_matrix(unsigned l) {
    if (l < 3) throw ParameterError("h_matrix requires l >= 3");
    ExactMatrix h(l, l);
    for (unsigned i = 1; i <= l; ++i)
        for (unsigned j = 1; j <= i; ++j)
            h.at(i - 1, j - 1) = (i == l && j == l) ? Int(2 * (l + 1)) : h_value(i, j);
    return h;
}

TraceVector trace_vector(unsigned r, unsigned l) {
    check_params(r, l);
    TraceVector tv{r, l, {}};
    tv.entries.reserve(l);
    for (unsigned d = 1; d <= l; ++d) tv.entries.push_back(trace_dr(r, l, d));
    return tv;
}

} // namespace hypercycle
