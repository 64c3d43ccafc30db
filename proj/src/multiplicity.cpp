#include "hypercycle/multiplicity.hpp"

#include <cmath>
#include <sstream>

#include "hypercycle/errors.hpp"
#include "hypercycle/path_spectra.hpp"
#include "hypercycle/trace_engine.hpp"

namespace hypercycle {

namespace {
void check_l(unsigned l) {
    if (l < 3) throw ParameterError("l must be >= 3");
}
} // namespace

ExactMatrix s_matrix(unsigned l) {
    check_l(l);
    ExactMatrix s(l, l);
    for (unsigned i = 1; i <= l; ++i)
        for (unsigned j = 1; j <= l; ++j) s.at(i - 1, j - 1) = moment_column(j, i);
    return s;
}

ExactMatrix b_inverse_matrix(unsigned l) {
    check_l(l);
    ExactMatrix m(l, l);
    for (unsigned i = 1; i < l; ++i) {
        m.at(i - 1, 0) = 2 * (i + 1);
        for (unsigned c = i + 1; c <= l; ++c) m.at(i - 1, c - 1) = 2 * (c - i);
    }
    m.at(l - 1, 0) = l;
    return m;
}

ExactMatrix b_matrix(unsigned l) {
    check_l(l);
    ExactMatrix b = mat_inverse(b_inverse_matrix(l));
    if (l >= 4) {
        ExactMatrix display(l, l);
        display.at(0, l - 1) = make_rat(1, l);
        for (unsigned i = 2; i <= l; ++i) {
            display.at(i - 1, i - 2) = make_rat(1, 2);
            display.at(i - 1, i - 1) = -1;
            if (i <= l - 1) display.at(i - 1, i) = make_rat(1, 2);
        }
        display.at(l - 2, l - 1) = make_rat(l + 1, l);
        if (!(b == display))
            throw InternalConsistencyError("B does not match its banded form at l = " +
                                           std::to_string(l));
    }
    return b;
}

MultiplicityVector solve_multiplicities(unsigned r, unsigned l) {
    if (r < 3) throw ParameterError("r must be >= 3");
    check_l(l);
    const ExactMatrix b = b_matrix(l);
    const std::vector<Int> t = t_vector(r, l);

    MultiplicityVector mv{r, l, Int(0), {}};
    mv.m.reserve(l);
    Int weighted_sum(0);
    for (unsigned i = 0; i < l; ++i) {
        Rat mi(0);
        for (unsigned j = 0; j < l; ++j) mi += b.at(i, j) * Rat(t[j]);
        mi /= r;
        if (!is_integral(mi))
            throw InternalConsistencyError("multiplicity m_" + std::to_string(i + 1) +
                                           " is not integral: " + mi.get_str());
        if (mi < 0)
            throw InternalConsistencyError("multiplicity m_" + std::to_string(i + 1) +
                                           " is negative: " + mi.get_str());
        mv.m.push_back(mi.get_num());
        weighted_sum += Int(i + 1) * r * mv.m.back();
    }
    mv.m0 = Int(l) * int_pow(r - 1, static_cast<unsigned long>(l) * (r - 1)) - weighted_sum;
    if (mv.m0 < 0) throw InternalConsistencyError("m0 is negative: " + mv.m0.get_str());
    if (r == 3 && mv.m.back() != 0)
        throw InternalConsistencyError("m_l must vanish at r = 3, got " + mv.m.back().get_str());
    return mv;
}

namespace {

Int pw(unsigned base, long e) {
    if (e < 0) throw InternalConsistencyError("negative exponent in closed form");
    return int_pow(base, static_cast<unsigned long>(e));
}

Int half(const Rat& q) {
    if (!is_integral(q))
        throw InternalConsistencyError("closed-form multiplicity is not integral: " + q.get_str());
    return q.get_num();
}

} // namespace

MultiplicityVector multiplicities_l5_closed_form(unsigned r) {
    if (r < 3) throw ParameterError("r must be >= 3");
    const long R = r;
    const Rat h52 = make_rat(5, 2);
    MultiplicityVector mv{r, 5, Int(0), {}};
    mv.m.resize(5);
    mv.m[0] = pw(r, 5 * R - 11);
    mv.m[1] = half(h52 * pw(r - 1, 4 * R - 5) * pw(r, R - 2) - Rat(5) * pw(r - 1, 3 * R - 4) * pw(r, 2 * R - 4) +
                   h52 * pw(r - 1, 2 * R - 3) * pw(r, 3 * R - 6));
    mv.m[2] = half(h52 * pw(r - 1, 3 * R - 4) * pw(r, 2 * R - 4) - Rat(5) * pw(r - 1, 2 * R - 3) * pw(r, 3 * R - 6) +
                   h52 * pw(r - 1, R - 2) * pw(r, 4 * R - 8));
    mv.m[3] = half(h52 * pw(r - 1, 2 * R - 3) * pw(r, 3 * R - 6) - Rat(5) * pw(r - 1, R - 2) * pw(r, 4 * R - 8) +
                   Rat(6) * pw(r, 5 * R - 11));
    mv.m[4] = half(h52 * pw(r - 1, R - 2) * pw(r, 4 * R - 8) - Rat(5) * pw(r, 5 * R - 11));
    mv.m0 = half(Rat(5) * pw(r - 1, 5 * R - 5) - Rat(5) * pw(r - 1, 4 * R - 5) * pw(r, R - 1) +
                 h52 * pw(r - 1, 3 * R - 4) * pw(r, 2 * R - 3));
    return mv;
}

MultiplicityVector multiplicities_l6_closed_form(unsigned r) {
    if (r < 3) throw ParameterError("r must be >= 3");
    const long R = r;
    MultiplicityVector mv{r, 6, Int(0), {}};
    mv.m.resize(6);
    mv.m[0] = pw(r, 6 * R - 13);
    mv.m[1] = Int(3) * pw(r - 1, 5 * R - 6) * pw(r, R - 2) - Int(6) * pw(r - 1, 4 * R - 5) * pw(r, 2 * R - 4) +
              Int(3) * pw(r - 1, 3 * R - 4) * pw(r, 3 * R - 6);
    mv.m[2] = Int(3) * pw(r - 1, 4 * R - 5) * pw(r, 2 * R - 4) - Int(6) * pw(r - 1, 3 * R - 4) * pw(r, 3 * R - 6) +
              Int(3) * pw(r - 1, 2 * R - 3) * pw(r, 4 * R - 8);
    mv.m[3] = Int(3) * pw(r - 1, 3 * R - 4) * pw(r, 3 * R - 6) - Int(6) * pw(r - 1, 2 * R - 3) * pw(r, 4 * R - 8) +
              Int(3) * pw(r - 1, R - 2) * pw(r, 5 * R - 10);
    mv.m[4] = Int(3) * pw(r - 1, 2 * R - 3) * pw(r, 4 * R - 8) - Int(6) * pw(r - 1, R - 2) * pw(r, 5 * R - 10) +
              Int(7) * pw(r, 6 * R - 13);
    mv.m[5] = Int(3) * pw(r - 1, R - 2) * pw(r, 5 * R - 10) - Int(6) * pw(r, 6 * R - 13);
    mv.m0 = Int(6) * pw(r - 1, 6 * R - 6) - Int(6) * pw(r - 1, 5 * R - 6) * pw(r, R - 1) +
            Int(3) * pw(r - 1, 4 * R - 5) * pw(r, 2 * R - 3);
    return mv;
}

IdentityReport verify_identities(unsigned l) {
    check_l(l);
    IdentityReport report;
    std::ostringstream detail;

    const ExactMatrix s = s_matrix(l);
    const ExactMatrix hb = h_matrix(l) * b_inverse_matrix(l);
    report.s_equals_h_times_b_inverse = true;
    for (unsigned i = 0; i < l && report.s_equals_h_times_b_inverse; ++i)
        for (unsigned j = 0; j < l; ++j)
            if (s.at(i, j) != hb.at(i, j)) {
                report.s_equals_h_times_b_inverse = false;
                detail << "S != H*B^-1 at (" << i + 1 << "," << j + 1 << "): " << s.at(i, j).get_str()
                       << " vs " << hb.at(i, j).get_str() << "; ";
                break;
            }

    const Rat det = det_fraction_free(s);
    Int expected = int_pow(2, l) * factorial(l + 1);
    if (l % 2 == 0) expected = -expected;
    report.det_s_matches_closed_form = (det == Rat(expected));
    if (!report.det_s_matches_closed_form)
        detail << "Det(S) = " << det.get_str() << ", expected " << expected.get_str() << "; ";

    const ExactMatrix prod = b_matrix(l) * b_inverse_matrix(l);
    report.b_times_b_inverse_is_identity = (prod == ExactMatrix::identity(l));
    if (!report.b_times_b_inverse_is_identity) {
        for (unsigned i = 0; i < l; ++i)
            for (unsigned j = 0; j < l; ++j)
                if (prod.at(i, j) != Rat(i == j ? 1 : 0)) {
                    detail << "B*B^-1 differs from I at (" << i + 1 << "," << j + 1
                           << "): " << prod.at(i, j).get_str() << "; ";
                    i = l;
                    break;
                }
    }

    report.detail = detail.str();
    return report;
}

bool s_inverse_closed_form_check(unsigned l, double tol) {
    if (l < 3 || l > 6) throw ParameterError("s_inverse_closed_form_check supports 3 <= l <= 6");

    // Squared eigenvalues per index t, with the cycle convention at t = 1.
    std::vector<std::vector<double>> x_choices(l);
    x_choices[0] = {4.0};
    for (unsigned t = 2; t <= l; ++t)
        for (unsigned k = 1; k <= t; ++k) {
            const double c = 2.0 * std::cos(k * M_PI / (t + 1));
            x_choices[t - 1].push_back(c * c);
        }

    const ExactMatrix exact = mat_inverse(s_matrix(l));
    const double denominator = std::pow(2.0, l) * factorial(l + 1).get_d();

    std::vector<std::size_t> alpha(l, 0);
    std::vector<std::vector<double>> sums(l, std::vector<double>(l, 0.0));
    for (;;) {
        std::vector<double> x(l);
        for (unsigned t = 0; t < l; ++t) x[t] = x_choices[t][alpha[t]];
        for (unsigned i = 1; i <= l; ++i) {
            // xbar omits x_i; the summand is independent of alpha_i.
            std::vector<double> xbar;
            xbar.reserve(l - 1);
            for (unsigned t = 0; t < l; ++t)
                if (t != i - 1) xbar.push_back(x[t]);
            // elementary symmetric polynomials of xbar
            std::vector<double> sigma(l, 0.0);
            sigma[0] = 1.0;
            for (double v : xbar)
                for (unsigned k = l - 1; k >= 1; --k) sigma[k] += sigma[k - 1] * v;
            double pairs = 1.0;
            for (unsigned k = 0; k < l; ++k) {
                if (k == i - 1) continue;
                for (unsigned h = k + 1; h < l; ++h)
                    if (h != i - 1) pairs *= x[h] - x[k];
            }
            for (unsigned j = 1; j <= l; ++j)
                sums[i - 1][j - 1] += sigma[l - 1] * sigma[l - j] * pairs / i;
        }
        unsigned t = 0;
        while (t < l && ++alpha[t] == x_choices[t].size()) alpha[t++] = 0;
        if (t == l) break;
    }

    for (unsigned i = 1; i <= l; ++i)
        for (unsigned j = 1; j <= l; ++j) {
            const double sign = ((i + j + l + 1) % 2 == 0) ? 1.0 : -1.0; // parity of i+j-l+1
            const double approx = sign * sums[i - 1][j - 1] / denominator;
            if (std::abs(approx - exact.at(i - 1, j - 1).get_d()) > tol) return false;
        }
    return true;
}

} // namespace hypercycle
