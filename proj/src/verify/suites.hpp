#pragma once

#include <string>
#include <vector>

namespace qw {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success; a reproducible counterexample on failure
    double seconds = 0.0;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    int rank = 0;       // 0: suite default (ranks 2 and 3)
    long box_lo = 0;    // used by box-based suites; eiglat defaults to [-2,4]
    long box_hi = 4;
    bool box_set = false;
    long trunc = 8;
};

// Suites named for the identities they certify:
//   fourway   four independent constructions agree on the dominant box
//   eiglat    lattice Toda eigenproblem
//   modpsi    limit-operator eigenproblems and the conjugation identities
//   spectra   Macdonald operator eigenvalues and orthogonality
//   selfdual  evaluation symmetry at t = q^{-k}
//   corSan    Demazure-character route, rank-two closed forms
//   reclimt0  t=0 constant-term recursion
//   norms     closed-form norms against the combinatorial scalar product
//   noncomm   torus-algebra identities, character values, symmetry, translation
//   demlaws   Demazure operator laws (idempotence, braid relations)
std::vector<std::string> suite_names();

Report run_suite(const std::string& suite, const VerifyOptions& opt = {});

} // namespace qw
