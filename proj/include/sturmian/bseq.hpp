#pragma once

// The counting function B_alpha(k) = #{q : 1 <= q < k, {q*alpha} < {k*alpha}},
// computed three ways: directly from the definition, by the three-case
// second-difference recurrence (with the complement identity for alpha > 1/2),
// and as a pure parity prediction. Also the closed form for the height sum
// of F_n(alpha).

#include <cstdint>
#include <string_view>
#include <vector>

#include "sturmian/slope.hpp"

namespace sturmian {

// Which cell of [0,alpha) / [alpha,2alpha) / [2alpha,1) the point {k*alpha}
// fell into when the recurrence fired at k. NA when it did not (k < 3, or the
// value came from the complement identity because alpha > 1/2).
enum class BCase { Low, Mid, High, NA };

std::string_view to_string(BCase c) noexcept;

struct BSeqRecord {
    std::int64_t k;
    std::int64_t value;
    BCase cls;
};

// Definition: k-1 exact fractional-part comparisons.
std::int64_t b_direct(const Slope& alpha, std::int64_t k);

// Records for k = 1..k_max. For alpha < 1/2 runs the recurrence with seeds
// B(1)=0, B(2)=1; for alpha > 1/2 runs it on 1-alpha and applies
// B_alpha(k) = k-1 - B_(1-alpha)(k). Throws HalfSlope at alpha = 1/2.
std::vector<BSeqRecord> b_recurrence(const Slope& alpha, std::int64_t k_max);

// Parity of B_alpha(k) without counting: 0 for odd k,
// (floor(k*alpha)+1) mod 2 for even k.
int b_parity(const Slope& alpha, std::int64_t k);

// B_alpha(n) + (n+1)*floor(n*alpha) + 1.
std::int64_t height_sum_formula(const Slope& alpha, std::int64_t n);

}  // namespace sturmian
