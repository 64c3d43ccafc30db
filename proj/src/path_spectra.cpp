#include "hypercycle/path_spectra.hpp"

#include <cmath>

#include "hypercycle/errors.hpp"

namespace hypercycle {

IntPoly path_charpoly(unsigned j) {
    IntPoly prev = IntPoly::one();      // P_0
    if (j == 0) return prev;
    IntPoly cur = IntPoly::variable();  // P_1
    for (unsigned t = 2; t <= j; ++t) {
        IntPoly next = cur.shifted_up(1) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ExactMatrix path_adjacency(unsigned j) {
    ExactMatrix a(j, j);
    for (unsigned v = 0; v + 1 < j; ++v) {
        a.at(v, v + 1) = 1;
        a.at(v + 1, v) = 1;
    }
    return a;
}

SquaredSpectrumPoly squared_spectrum_poly(unsigned j) {
    if (j < 1) throw ParameterError("squared_spectrum_poly requires j >= 1");
    const IntPoly phi = path_charpoly(j);
    std::vector<Int> g, h;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(phi.degree()); ++i)
        (i % 2 == 0 ? g : h).push_back(phi.coeff(i));
    const IntPoly gp{std::vector<Int>(g)};
    const IntPoly hp{std::vector<Int>(h)};
    IntPoly psi = gp * gp - (hp * hp).shifted_up(1);
    if (j % 2 == 1) psi = -psi;
    if (!psi.is_monic() || psi.degree() != static_cast<long>(j))
        throw InternalConsistencyError("squared spectrum polynomial is not monic of degree j");
    return {j, std::move(psi)};
}

Int moment_column(unsigned j, unsigned i) {
    if (j < 1 || i < 1) throw ParameterError("moment_column requires j >= 1 and i >= 1");
    if (j == 1) return int_pow(4, i);
    const ExactMatrix power = mat_pow(path_adjacency(j), 2UL * i);
    Rat tr(0);
    for (unsigned v = 0; v < j; ++v) tr += power.at(v, v);
    return tr.get_num();
}

std::vector<SpectrumValue> signed_cycle_squared_values(unsigned l, bool uniformity_three) {
    if (l < 3) throw ParameterError("signed_cycle_squared_values requires l >= 3");
    std::vector<SpectrumValue> out;
    out.push_back({true, 0, 0, 4.0});
    const unsigned jmax = uniformity_three ? l - 1 : l;
    for (unsigned j = 1; j <= jmax; ++j)
        for (unsigned k = 1; k <= j; ++k) {
            const double c = 2.0 * std::cos(k * M_PI / (j + 1));
            out.push_back({false, j, k, c * c});
        }
    return out;
}

} // namespace hypercycle
