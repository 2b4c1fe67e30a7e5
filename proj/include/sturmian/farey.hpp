#pragma once

// Farey intervals of order n and the count of distinct factor sets across
// them. Each interval carries its mediant as a guarded-rational
// representative; the mediant denominator q1+q2 >= n+1 makes every
// factor_set(rep, n) query guard-safe.

#include <cstdint>
#include <vector>

#include "sturmian/slope.hpp"

namespace sturmian {

struct FareyInterval {
    std::int64_t p1, q1;  // lo = p1/q1
    std::int64_t p2, q2;  // hi = p2/q2, consecutive in the order-n Farey sequence
    Slope rep;            // mediant (p1+p2)/(q1+q2), guard = q1+q2
};

// All consecutive pairs of order-n Farey fractions in [0,1], increasing.
std::vector<FareyInterval> farey_intervals(std::int64_t n);

// Number of distinct F_n over one representative per interval.
std::int64_t distinct_factor_sets(std::int64_t n);

}  // namespace sturmian
