#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "maclaurin/weights.hpp"

namespace maclaurin {

// Reference extension number by exhaustive superset enumeration (n <= 20).
int brute_extension_number(const Graph& g, const Bitset& clique);

// Independent verification of the localized inequality at x = 1 (n <= 10):
// per-clique weights summed in fixed-point arithmetic at 4x the main
// precision, sharing only big-integer binomials with the primary path.
VerificationReport brute_verify(const Graph& g, int s, int q,
                                const PrecisionSchedule& schedule = default_precision_schedule());

struct SurveyRecord {
    long long line_index = 0;
    std::string graph6;
    int n = 0;
    int s = 0;
    int q = 0;
    VerdictKind verdict = VerdictKind::Inconclusive;
    bool tight = false;
    bool predicted_tight = false;
    bool discrepancy = false;
    std::string error;  // nonempty when the input line failed to parse

    bool is_error() const { return !error.empty(); }
};

struct SurveyOptions {
    PrecisionSchedule schedule = default_precision_schedule();
    int parallelism = 1;
    // Pair policy: all 1 <= s <= q <= omega by default.
    int fixed_s = 0;  // >0 pins s
    int fixed_q = 0;  // >0 pins q
    int max_q = 0;    // >0 caps q
    bool only_divisible = false;
};

// Verdict + equality-structure prediction for every admissible (s, q) pair
// of every corpus line, at x = 1.  Output order follows the input order.
std::vector<SurveyRecord> survey(const std::vector<std::string>& lines,
                                 const SurveyOptions& options = {});

}  // namespace maclaurin
