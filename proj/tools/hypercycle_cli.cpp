// Command-line front end. Links the C API only; all computation lives in
// libhypercycle.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hypercycle.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Output {
    std::string payload;
    std::string out_path;

    int flush(int code) const {
        std::cout << payload;
        std::cout.flush();
        if (!out_path.empty()) {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot open output file " << out_path << "\n";
                return kExitUsage;
            }
            file << payload;
        }
        return code;
    }
};

int exit_code_for(hc_status status) {
    switch (status) {
    case HC_OK:
        return kExitOk;
    case HC_ERR_PARAM:
        return kExitUsage;
    case HC_ERR_BUDGET:
        return kExitBudget;
    default:
        return kExitVerifyFailure;
    }
}

int report_error(hc_status status) {
    std::cerr << "error: " << hc_last_error() << "\n";
    return exit_code_for(status);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    hc_string_free(s);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic polynomials of uniform hypercycles"};
    app.require_subcommand(1);

    int r = 0, l = 0, d = 0;
    std::string format = "text";
    std::string suite;
    std::string out_path;
    bool canonical = false, do_expand = false, brute = false;
    long max_expand_degree = 1000000;
    long budget = 100000000;
    int jobs = 1;
    double tol = 1e-9;

    auto* compute = app.add_subcommand("compute", "Factored characteristic polynomial");
    compute->add_option("--r", r, "uniformity (>= 3)")->required()->check(CLI::Range(3, 1 << 20));
    compute->add_option("--l", l, "cycle length (>= 3)")->required()->check(CLI::Range(3, 1 << 20));
    compute->add_flag("--canonical", canonical, "canonicalize the factorization");
    compute->add_flag("--expand", do_expand, "append the expanded coefficients");
    compute->add_option("--format", format, "text|latex|json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    compute->add_option("--max-expand-degree", max_expand_degree, "expansion degree cap");
    compute->add_option("--out", out_path, "also write stdout payload to this file");

    auto* trace = app.add_subcommand("trace", "Trace of order d*r");
    trace->add_option("--r", r, "uniformity (>= 3)")->required()->check(CLI::Range(3, 1 << 20));
    trace->add_option("--l", l, "cycle length (>= 3)")->required()->check(CLI::Range(3, 1 << 20));
    trace->add_option("--d", d, "trace index d (order = d*r)")->required()->check(CLI::Range(1, 1 << 20));
    trace->add_flag("--brute", brute, "also run the enumeration oracle and compare");
    trace->add_option("--budget", budget, "enumeration budget for --brute");
    trace->add_option("--jobs", jobs, "worker threads for --brute");
    trace->add_option("--out", out_path, "also write stdout payload to this file");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "identities|lemma-minors|oracle|corollaries")
        ->required()
        ->check(CLI::IsMember({"identities", "lemma-minors", "oracle", "corollaries"}));
    verify->add_option("--r", r, "restrict to one uniformity");
    verify->add_option("--l", l, "restrict to one length");
    verify->add_option("--budget", budget, "enumeration budget");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--out", out_path, "also write stdout payload to this file");

    auto* spectrum = app.add_subcommand("spectrum", "Squared-eigenvalue table and check");
    spectrum->add_option("--r", r, "uniformity (>= 3)")->required()->check(CLI::Range(3, 1 << 20));
    spectrum->add_option("--l", l, "cycle length (>= 3)")->required()->check(CLI::Range(3, 1 << 20));
    spectrum->add_option("--tol", tol, "numeric tolerance");
    spectrum->add_option("--out", out_path, "also write stdout payload to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Output output;
    output.out_path = out_path;

    if (compute->parsed()) {
        hc_charpoly* poly = nullptr;
        hc_status st = hc_charpoly_compute(r, l, &poly);
        if (st != HC_OK) return report_error(st);
        if (canonical) {
            st = hc_charpoly_canonicalize(poly);
            if (st != HC_OK) {
                hc_charpoly_free(poly);
                return report_error(st);
            }
        }
        char* rendered = nullptr;
        st = hc_charpoly_render(poly, format.c_str(), &rendered);
        if (st != HC_OK) {
            hc_charpoly_free(poly);
            return report_error(st);
        }
        output.payload = take_string(rendered) + "\n";
        if (do_expand) {
            char* expanded = nullptr;
            st = hc_charpoly_expand(poly, max_expand_degree, &expanded);
            if (st != HC_OK) {
                hc_charpoly_free(poly);
                return report_error(st);
            }
            output.payload += "expanded coefficients (exponent coefficient):\n";
            output.payload += take_string(expanded);
        }
        hc_charpoly_free(poly);
        return output.flush(kExitOk);
    }

    if (trace->parsed()) {
        char* formula = nullptr;
        hc_status st = hc_trace(r, l, d, &formula);
        if (st != HC_OK) return report_error(st);
        const std::string formula_str = take_string(formula);
        if (!brute) {
            output.payload = formula_str + "\n";
            return output.flush(kExitOk);
        }
        char* brute_str = nullptr;
        st = hc_brute_trace(r, l, static_cast<long>(d) * r, budget, jobs, &brute_str);
        if (st != HC_OK) return report_error(st);
        const std::string brute_value = take_string(brute_str);
        const bool agree = brute_value == formula_str;
        output.payload =
            "formula=" + formula_str + " brute=" + brute_value + (agree ? " OK" : " MISMATCH") + "\n";
        return output.flush(agree ? kExitOk : kExitVerifyFailure);
    }

    if (verify->parsed()) {
        int all_pass = 0;
        char* report = nullptr;
        hc_status st = hc_verify(suite.c_str(), r, l, budget, jobs, &all_pass, &report);
        if (st != HC_OK) return report_error(st);
        output.payload = take_string(report);
        output.payload += all_pass ? "all checks passed\n" : "verification FAILED\n";
        return output.flush(all_pass ? kExitOk : kExitVerifyFailure);
    }

    if (spectrum->parsed()) {
        int pass = 0;
        char* report = nullptr;
        hc_status st = hc_spectrum_report(r, l, tol, &pass, &report);
        if (st != HC_OK) return report_error(st);
        output.payload = take_string(report);
        return output.flush(pass ? kExitOk : kExitVerifyFailure);
    }

    return kExitUsage;
}
