#include "hypercycle/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hypercycle/errors.hpp"
#include "hypercycle/multiplicity.hpp"
#include "hypercycle/path_spectra.hpp"

namespace hypercycle {

Int FactoredCharPoly::total_degree() const {
    Int deg = lambda_exponent;
    for (const Factor& f : factors) deg += Int(r) * f.poly.degree() * f.exponent;
    return deg;
}

FactoredCharPoly assemble(unsigned r, unsigned l) {
    const MultiplicityVector mv = solve_multiplicities(r, l);
    FactoredCharPoly out{r, l, mv.m0, {}, false};
    if (mv.m[0] > 0) out.factors.push_back({IntPoly::linear_root(Int(4)), mv.m[0]});
    for (unsigned j = 2; j <= l; ++j)
        if (mv.m[j - 1] > 0) out.factors.push_back({squared_spectrum_poly(j).poly, mv.m[j - 1]});
    const Int expected = Int(l) * int_pow(r - 1, static_cast<unsigned long>(l) * (r - 1));
    if (out.total_degree() != expected)
        throw InternalConsistencyError("assembled degree " + out.total_degree().get_str() +
                                       " != " + expected.get_str());
    return out;
}

namespace {

// Monic square root by coefficient matching: returns q with q*q == f, or an
// empty optional-equivalent (zero poly) when f is not a perfect square.
IntPoly monic_square_root(const IntPoly& f) {
    const long deg = f.degree();
    if (deg < 0 || deg % 2 != 0 || !f.is_monic()) return IntPoly::zero();
    const std::size_t m = static_cast<std::size_t>(deg) / 2;
    std::vector<Int> q(m + 1, Int(0));
    q[m] = 1;
    for (std::size_t t = 1; t <= m; ++t) {
        // coefficient of x^{2m-t} in q^2: sum_{i+j = 2m-t} q_i q_j
        Int acc(0);
        for (std::size_t i = m - t + 1; i <= m; ++i) {
            const std::size_t j = 2 * m - t - i;
            if (j > m || j <= m - t) continue;
            if (i > j) continue;
            Int prod = q[i] * q[j];
            acc += (i == j) ? prod : Int(2 * prod);
        }
        Int rem = f.coeff(2 * m - t) - acc;
        if (rem % 2 != 0) return IntPoly::zero();
        q[m - t] = rem / 2;
    }
    IntPoly cand{std::move(q)};
    return cand * cand == f ? cand : IntPoly::zero();
}

double eval_poly(const std::vector<double>& p, double x) {
    double acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

struct FactorOrder {
    bool operator()(const IntPoly& a, const IntPoly& b) const {
        static const IntPoly mu_minus_4 = IntPoly::linear_root(Int(4));
        if (a == b) return false;
        if (a == mu_minus_4) return true;
        if (b == mu_minus_4) return false;
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        // same degree: descending coefficient sequence, low to high, so that
        // (mu - 1) sorts before (mu - 2)
        for (std::size_t i = 0; i <= static_cast<std::size_t>(a.degree()); ++i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) > b.coeff(i);
        return false;
    }
};

} // namespace

FactoredCharPoly canonicalize(const FactoredCharPoly& f) {
    FactoredCharPoly out{f.r, f.l, f.lambda_exponent, {}, true};
    std::map<IntPoly, Int, FactorOrder> blocks;

    for (const Factor& factor : f.factors) {
        if (factor.exponent == 0) continue;
        IntPoly p = factor.poly;

        // mu-power: roots at zero join the lambda exponent
        const std::size_t z = p.trailing_zeros();
        if (z > 0 && !p.is_zero()) {
            out.lambda_exponent += Int(f.r) * z * factor.exponent;
            p = p.shifted_down(z);
        }
        if (p.degree() < 1) continue;

        // split off integer roots; every root of a hypercycle factor lies in
        // [0, 4], so candidates outside that range cannot occur
        for (int c = 1; c <= 4 && p.degree() >= 1; ++c) {
            while (p.degree() >= 1 && p.eval(Int(c)) == 0) {
                blocks[IntPoly::linear_root(Int(c))] += factor.exponent;
                p = p.divide_linear(Int(c));
            }
        }
        if (p.degree() < 1) continue;

        // flatten perfect squares (repeatedly, to catch higher even powers)
        Int multiplier(1);
        for (;;) {
            IntPoly root = monic_square_root(p);
            if (root.is_zero()) break;
            multiplier *= 2;
            p = std::move(root);
        }
        blocks[p] += multiplier * factor.exponent;
    }

    for (auto& [poly, exponent] : blocks)
        if (exponent != 0) out.factors.push_back({poly, exponent});

    if (out.total_degree() != f.total_degree())
        throw InternalConsistencyError("canonicalize changed the total degree");
    return out;
}

IntPoly expand(const FactoredCharPoly& f, const Int& max_degree) {
    const Int degree = f.total_degree();
    if (degree > max_degree || !degree.fits_ulong_p())
        throw FeasibilityError("expansion degree " + degree.get_str() + " exceeds the cap " +
                                   max_degree.get_str(),
                               degree.get_str());
    // Work in mu on a canonical factor list: linear blocks take the O(n)
    // binomial path inside IntPoly::pow, everything else repeated squaring.
    const FactoredCharPoly canon = canonicalize(f);
    IntPoly mu_poly = IntPoly::one();
    for (const Factor& factor : canon.factors)
        mu_poly = mu_poly * factor.poly.pow(factor.exponent.get_ui());
    const unsigned long shift = canon.lambda_exponent.get_ui();
    std::vector<Int> coeffs(shift + static_cast<unsigned long>(mu_poly.degree()) * canon.r + 1,
                            Int(0));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(mu_poly.degree()); ++i)
        coeffs[shift + i * canon.r] = mu_poly.coeff(i);
    IntPoly out{std::move(coeffs)};
    if (Int(out.degree()) != degree)
        throw InternalConsistencyError("expansion degree mismatch");
    return out;
}

Int factored_power_sum(const FactoredCharPoly& f, unsigned d) {
    if (d < 1) throw ParameterError("factored_power_sum requires d >= 1");
    Int total(0);
    for (const Factor& factor : f.factors)
        total += factor.exponent * factor.poly.root_power_sum(d);
    return total * f.r;
}

SpectrumCheckReport numeric_spectrum_check(const FactoredCharPoly& f, double tol) {
    SpectrumCheckReport report;
    const auto targets = signed_cycle_squared_values(f.l, f.r == 3);
    std::vector<double> expected;
    expected.reserve(targets.size());
    for (const SpectrumValue& t : targets) expected.push_back(t.mu);
    std::sort(expected.begin(), expected.end());

    std::vector<double> candidates = expected;
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                     candidates.end());

    // roots of every retained factor, via candidate evaluation + deflation
    std::vector<double> found;
    std::ostringstream detail;
    for (const Factor& factor : f.factors) {
        if (factor.exponent == 0) continue;
        std::vector<double> p;
        for (const Int& c : factor.poly.coeffs()) p.push_back(c.get_d());
        double scale = 0.0;
        for (double c : p) scale += std::abs(c);
        const double accept = 1e-6 * std::max(1.0, scale);
        while (p.size() > 1) {
            double best = candidates.front();
            double best_val = std::abs(eval_poly(p, best));
            for (double v : candidates) {
                const double val = std::abs(eval_poly(p, v));
                if (val < best_val) {
                    best_val = val;
                    best = v;
                }
            }
            if (best_val > accept) {
                detail << "no candidate root fits factor "
                       << factor.poly.to_string("mu") << " (best residual " << best_val << "); ";
                report.detail = detail.str();
                return report;
            }
            found.push_back(best);
            // synthetic division by (x - best); p is monic
            std::vector<double> q(p.size() - 1);
            double carry = 0.0;
            for (std::size_t i = p.size(); i-- > 1;) {
                carry = carry * best + p[i];
                q[i - 1] = carry;
            }
            p = std::move(q);
        }
    }

    // The lambda power is the block carrying eigenvalue zero; it stands in
    // for the j = 1 table row (the j = 1 factor index carries the cycle
    // value 4 instead of the one-vertex path spectrum {0}).
    if (f.lambda_exponent > 0) found.push_back(0.0);

    std::sort(found.begin(), found.end());
    if (found.size() != expected.size()) {
        detail << "root count " << found.size() << " != expected " << expected.size() << "; ";
        report.detail = detail.str();
        return report;
    }
    for (std::size_t i = 0; i < found.size(); ++i)
        if (std::abs(found[i] - expected[i]) > tol) {
            detail << "value mismatch at position " << i << ": " << found[i] << " vs "
                   << expected[i] << "; ";
            report.detail = detail.str();
            return report;
        }
    report.pass = true;
    return report;
}

namespace {

// A factor polynomial written in lambda (mu = lambda^r), highest power first:
// "λ^6 - 2λ^3 + 1" in text style, "\lambda^6-2\lambda^3+1" in latex style.
std::string poly_in_lambda(const IntPoly& poly, unsigned r, bool latex) {
    const std::string lambda = latex ? "\\lambda" : "λ";
    const std::string plus = latex ? "+" : " + ";
    const std::string minus = latex ? "-" : " - ";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = static_cast<std::size_t>(poly.degree()) + 1; i-- > 0;) {
        const Int& c = poly.coeff(i);
        if (c == 0) continue;
        const Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? minus : plus);
        }
        const unsigned long e = static_cast<unsigned long>(i) * r;
        if (e == 0 || a != 1) out << a.get_str();
        if (e >= 1) {
            out << lambda;
            if (e > 1) {
                if (latex && e >= 10)
                    out << "^{" << e << "}";
                else
                    out << "^" << e;
            }
        }
    }
    return first ? "0" : out.str();
}

std::string latex_power(const std::string& base, const Int& e) {
    if (e == 1) return base;
    return base + "^{" + e.get_str() + "}";
}

} // namespace

std::string render_text(const FactoredCharPoly& f) {
    std::vector<std::string> parts;
    if (f.lambda_exponent > 0)
        parts.push_back(f.lambda_exponent == 1 ? "λ" : "λ^" + f.lambda_exponent.get_str());
    for (const Factor& factor : f.factors) {
        std::string base = "(" + poly_in_lambda(factor.poly, f.r, false) + ")";
        parts.push_back(factor.exponent == 1 ? base : base + "^" + factor.exponent.get_str());
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " · " + parts[i];
    return out;
}

std::string render_latex(const FactoredCharPoly& f) {
    std::ostringstream out;
    if (f.lambda_exponent > 0) out << latex_power("\\lambda", f.lambda_exponent);
    for (const Factor& factor : f.factors)
        out << latex_power("(" + poly_in_lambda(factor.poly, f.r, true) + ")", factor.exponent);
    std::string s = out.str();
    return s.empty() ? "1" : s;
}

std::string render_json(const FactoredCharPoly& f) {
    nlohmann::json j;
    j["r"] = f.r;
    j["l"] = f.l;
    j["degree"] = f.total_degree().get_str();
    j["lambda_exponent"] = f.lambda_exponent.get_str();
    j["factors"] = nlohmann::json::array();
    for (const Factor& factor : f.factors) {
        nlohmann::json jf;
        jf["mu_coeffs_low_to_high"] = nlohmann::json::array();
        for (const Int& c : factor.poly.coeffs()) jf["mu_coeffs_low_to_high"].push_back(c.get_str());
        jf["exponent"] = factor.exponent.get_str();
        j["factors"].push_back(std::move(jf));
    }
    j["canonical"] = f.canonical;
    return j.dump(2);
}

std::string render(const FactoredCharPoly& f, RenderFormat format) {
    switch (format) {
    case RenderFormat::Text:
        return render_text(f);
    case RenderFormat::Latex:
        return render_latex(f);
    case RenderFormat::Json:
        return render_json(f);
    }
    throw ParameterError("unknown render format");
}

FactoredCharPoly parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("invalid JSON: ") + e.what());
    }
    try {
        FactoredCharPoly f;
        f.r = j.at("r").get<unsigned>();
        f.l = j.at("l").get<unsigned>();
        if (f.r < 3 || f.l < 3) throw ParameterError("r and l must both be >= 3");
        f.lambda_exponent = Int(j.at("lambda_exponent").get<std::string>());
        for (const auto& jf : j.at("factors")) {
            std::vector<Int> coeffs;
            for (const auto& c : jf.at("mu_coeffs_low_to_high"))
                coeffs.emplace_back(c.get<std::string>());
            Factor factor{IntPoly(std::move(coeffs)), Int(jf.at("exponent").get<std::string>())};
            if (!factor.poly.is_monic()) throw ParameterError("factors must be monic");
            if (factor.exponent < 0) throw ParameterError("exponents must be nonnegative");
            if (factor.exponent > 0) f.factors.push_back(std::move(factor));
        }
        f.canonical = j.at("canonical").get<bool>();
        if (f.total_degree().get_str() != j.at("degree").get<std::string>())
            throw ParameterError("degree field does not match the factorization");
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("JSON does not match the schema: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParameterError(std::string("invalid integer field: ") + e.what());
    }
}

std::string render_expanded(const IntPoly& expanded) {
    std::ostringstream out;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(0L, expanded.degree())); ++i)
        if (expanded.coeff(i) != 0) out << i << " " << expanded.coeff(i).get_str() << "\n";
    return out.str();
}

} // namespace hypercycle
