#pragma once

#include <string>
#include <vector>

#include "hypercycle/numbers.hpp"

namespace hypercycle {

struct VerifyLine {
    bool pass = false;
    std::string name;
    std::string detail; // empty when passing
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool all_pass() const;
    std::string to_table() const; // "PASS name" / "FAIL name detail", one per line
};

struct VerifyOptions {
    unsigned r = 0; // restrict to one r (0 = full grid)
    unsigned l = 0; // restrict to one l (0 = full grid)
    Int budget = Int(100000000);
    unsigned jobs = 1;
};

/// Matrix identities: S = H B^{-1} and Det(S) for l in 3..8, B B^{-1} = I for
/// l in 3..10, plus the numeric closed form of S^{-1} for l in 3..5.
VerifyReport verify_suite_identities(const VerifyOptions& opts = {});

/// Laplacian-minor determinant closed forms on random draws (fixed seed):
/// 100 per kind with r in {3,4,5}, path length / cycle length <= 5,
/// edge weights <= 5.
VerifyReport verify_suite_lemma_minors(const VerifyOptions& opts = {});

/// Brute-force digraph enumeration against the closed-form traces:
/// (3,3) orders 1..9 and the larger-uniformity spot check (4,3) order 4.
VerifyReport verify_suite_oracle(const VerifyOptions& opts = {});

/// Solver output against the closed-form multiplicity vectors for l = 5 and
/// l = 6, r in 3..12.
VerifyReport verify_suite_corollaries(const VerifyOptions& opts = {});

/// Dispatch by suite name: identities | lemma-minors | oracle | corollaries.
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opts = {});

} // namespace hypercycle
