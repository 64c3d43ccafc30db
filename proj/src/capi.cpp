#include "hypercycle.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <sstream>
#include <string>

#include "hypercycle/brute_oracle.hpp"
#include "hypercycle/charpoly.hpp"
#include "hypercycle/errors.hpp"
#include "hypercycle/path_spectra.hpp"
#include "hypercycle/trace_engine.hpp"
#include "hypercycle/verify.hpp"

using namespace hypercycle;

struct hc_charpoly {
    FactoredCharPoly value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hc_status fail(hc_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Translate the C++ error hierarchy to status codes; wraps every entry point.
template <typename Fn>
hc_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const ParameterError& e) {
        return fail(HC_ERR_PARAM, e.what());
    } catch (const DimensionError& e) {
        return fail(HC_ERR_DIMENSION, e.what());
    } catch (const SingularMatrixError& e) {
        return fail(HC_ERR_SINGULAR, e.what());
    } catch (const UnsupportedOrderError& e) {
        return fail(HC_ERR_UNSUPPORTED_ORDER, e.what());
    } catch (const FeasibilityError& e) {
        return fail(HC_ERR_BUDGET, e.what());
    } catch (const InternalConsistencyError& e) {
        return fail(HC_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(HC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HC_ERR_INTERNAL, "unknown error");
    }
}

hc_status require_rl(int r, int l) {
    if (r < 3) throw ParameterError("r must be >= 3");
    if (l < 3) throw ParameterError("l must be >= 3");
    return HC_OK;
}

BruteOptions make_brute_options(long budget, int jobs) {
    BruteOptions opts;
    if (budget > 0) opts.budget = Int(budget);
    opts.jobs = jobs > 1 ? static_cast<unsigned>(jobs) : 1;
    return opts;
}

double eval_dense(const std::vector<double>& p, double x) {
    double acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

} // namespace

extern "C" {

const char* hc_version(void) { return "1.0.0"; }

const char* hc_status_name(hc_status status) {
    switch (status) {
    case HC_OK: return "ok";
    case HC_ERR_PARAM: return "invalid parameter";
    case HC_ERR_DIMENSION: return "dimension mismatch";
    case HC_ERR_SINGULAR: return "singular matrix";
    case HC_ERR_UNSUPPORTED_ORDER: return "unsupported trace order";
    case HC_ERR_BUDGET: return "budget exceeded";
    case HC_ERR_INTERNAL: return "internal consistency error";
    case HC_ERR_VERIFY: return "verification failure";
    }
    return "unknown status";
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

void hc_charpoly_free(hc_charpoly* poly) { delete poly; }

hc_status hc_charpoly_compute(int r, int l, hc_charpoly** out) {
    return guarded([&] {
        if (!out) throw ParameterError("out must not be null");
        require_rl(r, l);
        *out = new hc_charpoly{assemble(static_cast<unsigned>(r), static_cast<unsigned>(l))};
        return HC_OK;
    });
}

hc_status hc_charpoly_canonicalize(hc_charpoly* poly) {
    return guarded([&] {
        if (!poly) throw ParameterError("poly must not be null");
        poly->value = canonicalize(poly->value);
        return HC_OK;
    });
}

hc_status hc_charpoly_render(const hc_charpoly* poly, const char* format, char** out) {
    return guarded([&] {
        if (!poly || !format || !out) throw ParameterError("null argument");
        const std::string fmt(format);
        RenderFormat rf;
        if (fmt == "text")
            rf = RenderFormat::Text;
        else if (fmt == "latex")
            rf = RenderFormat::Latex;
        else if (fmt == "json")
            rf = RenderFormat::Json;
        else
            throw ParameterError("unknown format: " + fmt + " (expected text|latex|json)");
        *out = dup_string(render(poly->value, rf));
        return HC_OK;
    });
}

hc_status hc_charpoly_parse_json(const char* json_text, hc_charpoly** out) {
    return guarded([&] {
        if (!json_text || !out) throw ParameterError("null argument");
        *out = new hc_charpoly{parse_json(json_text)};
        return HC_OK;
    });
}

hc_status hc_charpoly_degree(const hc_charpoly* poly, char** out) {
    return guarded([&] {
        if (!poly || !out) throw ParameterError("null argument");
        *out = dup_string(poly->value.total_degree().get_str());
        return HC_OK;
    });
}

hc_status hc_charpoly_expand(const hc_charpoly* poly, long max_degree, char** out) {
    return guarded([&] {
        if (!poly || !out) throw ParameterError("null argument");
        const Int cap = max_degree > 0 ? Int(max_degree) : Int(1000000);
        *out = dup_string(render_expanded(expand(poly->value, cap)));
        return HC_OK;
    });
}

hc_status hc_charpoly_spectrum_check(const hc_charpoly* poly, double tol, int* pass,
                                     char** report) {
    return guarded([&] {
        if (!poly || !pass) throw ParameterError("null argument");
        const SpectrumCheckReport rep = numeric_spectrum_check(poly->value, tol);
        *pass = rep.pass ? 1 : 0;
        if (report) *report = dup_string(rep.detail);
        return HC_OK;
    });
}

hc_status hc_trace(int r, int l, int d, char** out) {
    return guarded([&] {
        if (!out) throw ParameterError("null argument");
        require_rl(r, l);
        if (d < 1) throw ParameterError("d must be >= 1");
        *out = dup_string(
            trace_dr(static_cast<unsigned>(r), static_cast<unsigned>(l), static_cast<unsigned>(d))
                .get_str());
        return HC_OK;
    });
}

hc_status hc_trace_order(int r, int l, long order, char** out) {
    return guarded([&] {
        if (!out) throw ParameterError("null argument");
        require_rl(r, l);
        if (order < 1) throw ParameterError("order must be >= 1");
        *out = dup_string(trace_any(static_cast<unsigned>(r), static_cast<unsigned>(l),
                                    static_cast<unsigned long>(order))
                              .get_str());
        return HC_OK;
    });
}

hc_status hc_brute_trace(int r, int l, long order, long budget, int jobs, char** out) {
    return guarded([&] {
        if (!out) throw ParameterError("null argument");
        require_rl(r, l);
        if (order < 1) throw ParameterError("order must be >= 1");
        const Rat value = brute_trace(static_cast<unsigned>(r), static_cast<unsigned>(l),
                                      static_cast<unsigned>(order), make_brute_options(budget, jobs));
        *out = dup_string(value.get_str());
        return HC_OK;
    });
}

hc_status hc_verify(const char* suite, int r, int l, long budget, int jobs, int* all_pass,
                    char** report) {
    return guarded([&] {
        if (!suite || !all_pass) throw ParameterError("null argument");
        VerifyOptions opts;
        if (r > 0) opts.r = static_cast<unsigned>(r);
        if (l > 0) opts.l = static_cast<unsigned>(l);
        if (budget > 0) opts.budget = Int(budget);
        if (jobs > 1) opts.jobs = static_cast<unsigned>(jobs);
        const VerifyReport vr = run_verify_suite(suite, opts);
        *all_pass = vr.all_pass() ? 1 : 0;
        if (report) *report = dup_string(vr.to_table());
        return HC_OK;
    });
}

hc_status hc_spectrum_report(int r, int l, double tol, int* pass, char** report) {
    return guarded([&] {
        if (!pass || !report) throw ParameterError("null argument");
        require_rl(r, l);
        const FactoredCharPoly poly =
            assemble(static_cast<unsigned>(r), static_cast<unsigned>(l));
        const SpectrumCheckReport check = numeric_spectrum_check(poly, tol);

        std::vector<double> candidates;
        for (const SpectrumValue& v :
             signed_cycle_squared_values(static_cast<unsigned>(l), r == 3))
            candidates.push_back(v.mu);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                     [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                         candidates.end());

        // distinct mu values with total multiplicity (within-factor root
        // multiplicity times the factor exponent), via candidate deflation
        std::map<long long, Int> mult; // key: index into candidates
        for (const Factor& factor : poly.factors) {
            std::vector<double> p;
            for (const Int& c : factor.poly.coeffs()) p.push_back(c.get_d());
            while (p.size() > 1) {
                std::size_t best = 0;
                double best_val = std::abs(eval_dense(p, candidates[0]));
                for (std::size_t i = 1; i < candidates.size(); ++i) {
                    const double val = std::abs(eval_dense(p, candidates[i]));
                    if (val < best_val) {
                        best_val = val;
                        best = i;
                    }
                }
                mult[static_cast<long long>(best)] += factor.exponent;
                std::vector<double> q(p.size() - 1);
                double carry = 0.0;
                for (std::size_t i = p.size(); i-- > 1;) {
                    carry = carry * candidates[best] + p[i];
                    q[i - 1] = carry;
                }
                p = std::move(q);
            }
        }

        std::ostringstream out;
        out << "r=" << r << " l=" << l << " degree=" << poly.total_degree().get_str()
            << " lambda_exponent=" << poly.lambda_exponent.get_str() << "\n";
        for (const auto& [idx, count] : mult) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.9f", candidates[static_cast<std::size_t>(idx)]);
            out << "mu=" << buf << " multiplicity=" << count.get_str() << "\n";
        }
        out << "spectrum check: " << (check.pass ? "PASS" : "FAIL") << "\n";
        if (!check.pass && !check.detail.empty()) out << check.detail << "\n";
        *pass = check.pass ? 1 : 0;
        *report = dup_string(out.str());
        return HC_OK;
    });
}

} // extern "C"
