#include "sturmian/bseq.hpp"

#include "sturmian/errors.hpp"

namespace sturmian {

std::string_view to_string(BCase c) noexcept {
    switch (c) {
        case BCase::Low: return "LOW";
        case BCase::Mid: return "MID";
        case BCase::High: return "HIGH";
        case BCase::NA: break;
    }
    return "NA";
}

std::int64_t b_direct(const Slope& alpha, std::int64_t k) {
    if (k < 1) throw Error("b_direct: k must be positive");
    std::int64_t count = 0;
    const std::int64_t floor_k = alpha.floor_mul(k);
    for (std::int64_t q = 1; q < k; ++q)
        if (alpha.frac_cmp_with_floors(q, k, alpha.floor_mul(q), floor_k) == Ordering::LT) ++count;
    return count;
}

std::vector<BSeqRecord> b_recurrence(const Slope& alpha, std::int64_t k_max) {
    if (k_max < 1) throw Error("b_recurrence: k must be positive");
    if (alpha.is_half()) throw HalfSlope("b_recurrence: recurrence undefined at alpha = 1/2");

    if (!alpha.less_than_half()) {
        // B_alpha(k) = k-1 - B_(1-alpha)(k); the recurrence runs on 1-alpha,
        // so no case label applies to alpha itself.
        const Slope comp = alpha.complement();
        std::vector<BSeqRecord> records = b_recurrence(comp, k_max);
        for (BSeqRecord& r : records) {
            r.value = r.k - 1 - r.value;
            r.cls = BCase::NA;
        }
        return records;
    }

    std::vector<BSeqRecord> records;
    records.reserve(static_cast<std::size_t>(k_max));
    records.push_back({1, 0, BCase::NA});
    if (k_max >= 2) records.push_back({2, 1, BCase::NA});
    for (std::int64_t k = 3; k <= k_max; ++k) {
        const std::int64_t b1 = records[static_cast<std::size_t>(k - 2)].value;
        const std::int64_t b2 = records[static_cast<std::size_t>(k - 3)].value;
        BCase cls;
        std::int64_t jump;
        if (alpha.frac_lt_multiple(k, 1)) {
            cls = BCase::Low;
            jump = 1 - k;
        } else if (alpha.frac_lt_multiple(k, 2)) {
            cls = BCase::Mid;
            jump = k - 1;
        } else {
            cls = BCase::High;
            jump = 0;
        }
        records.push_back({k, 2 * b1 - b2 + jump, cls});
    }
    return records;
}

int b_parity(const Slope& alpha, std::int64_t k) {
    if (k < 1) throw Error("b_parity: k must be positive");
    alpha.require_index(k);
    if (k % 2 == 1) return 0;
    return static_cast<int>((alpha.floor_mul(k) + 1) % 2);
}

std::int64_t height_sum_formula(const Slope& alpha, std::int64_t n) {
    if (n < 1) throw Error("height_sum_formula: n must be positive");
    return b_direct(alpha, n) + (n + 1) * alpha.floor_mul(n) + 1;
}

}  // namespace sturmian
