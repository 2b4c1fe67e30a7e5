#pragma once

// The cross-module invariant suite behind `sturm verify`: every identity the
// library promises, run over a deterministic slope corpus, reporting the
// first counterexample per invariant rather than aggregate statistics.

#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/slope.hpp"

namespace sturmian {

struct VerifyOptions {
    std::uint64_t seed = 12345;
    int random_slopes = 10;
    int jobs = 1;

    std::int64_t parity_nmax = 300;       // height-sum parity
    std::int64_t height_sum_nmax = 200;    // closed form vs enumeration
    std::int64_t bseq_kmax = 1000;        // recurrence / complement / parity checks
    std::int64_t window_nmax = 50;        // construction vs window oracle
    std::int64_t structural_nmax = 101;   // reversal closure, palindrome counts
    std::int64_t farey_count_nmax = 12;   // phi-sum identity
    std::int64_t farey_dedup_nmax = 20;   // no collisions between intervals
    std::int64_t oracle_matrices = 100;   // nullity vs rational elimination
    std::int64_t perm_trials = 20;        // spectrum permutation invariance
    std::int64_t perm_n = 30;
    bool anchors = true;                  // m(55) = 13, m(65) = 0

    static VerifyOptions quick();
};

struct VerifyFailure {
    std::string invariant;
    std::string slope;     // spec string, or "-" when not slope-specific
    std::int64_t index;    // the offending n or k, -1 when not applicable
    std::string expected;
    std::string actual;
};

struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    bool passed = true;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<std::string> corpus;       // spec strings, in order
    std::vector<CheckResult> checks;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Named corpus slopes plus their complements plus `random_count` seeded
// random quadratic irrationals, deduplicated, order-stable for a given seed.
std::vector<Slope> default_corpus(std::uint64_t seed, int random_count);

VerifyReport run_verification(const VerifyOptions& options);

std::string report_text(const VerifyReport& report);
std::string report_json(const VerifyReport& report);
std::string report_csv(const VerifyReport& report);

}  // namespace sturmian
