#include "sturmian/farey.hpp"

#include <set>

#include "sturmian/errors.hpp"
#include "sturmian/factor.hpp"

namespace sturmian {

std::vector<FareyInterval> farey_intervals(std::int64_t n) {
    if (n < 1) throw Error("farey_intervals: n must be positive");
    std::vector<FareyInterval> out;
    // Standard next-term recurrence for the order-n Farey sequence,
    // starting from 0/1, 1/n.
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = n;
    for (;;) {
        out.push_back(FareyInterval{p0, q0, p1, q1, Slope::rational(p0 + p1, q0 + q1)});
        if (p1 == 1 && q1 == 1) break;
        const std::int64_t k = (q0 + n) / q1;
        const std::int64_t p2 = k * p1 - p0;
        const std::int64_t q2 = k * q1 - q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return out;
}

std::int64_t distinct_factor_sets(std::int64_t n) {
    std::set<std::vector<Factor>> seen;
    for (const FareyInterval& interval : farey_intervals(n))
        seen.insert(factor_set(interval.rep, n).factors);
    return static_cast<std::int64_t>(seen.size());
}

}  // namespace sturmian
