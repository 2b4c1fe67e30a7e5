#include "sturmian/reference.hpp"

#include <vector>

#include <gmpxx.h>

#include "sturmian/errors.hpp"

namespace sturmian::reference {

std::int64_t nullity_rational(const IntMatrix& m) {
    const std::int64_t size = m.size;
    std::vector<mpq_class> a(static_cast<std::size_t>(size * size));
    for (std::int64_t i = 0; i < size * size; ++i)
        a[static_cast<std::size_t>(i)] = mpq_class(m.e[static_cast<std::size_t>(i)]);
    const auto at = [&](std::int64_t i, std::int64_t j) -> mpq_class& {
        return a[static_cast<std::size_t>(i * size + j)];
    };

    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < size && rank < size; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t i = rank; i < size; ++i)
            if (sgn(at(i, col)) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (std::int64_t j = 0; j < size; ++j) std::swap(at(rank, j), at(pivot, j));
        const mpq_class lead = at(rank, col);
        for (std::int64_t i = rank + 1; i < size; ++i) {
            if (sgn(at(i, col)) == 0) continue;
            const mpq_class factor = at(i, col) / lead;
            at(i, col) = 0;
            for (std::int64_t j = col + 1; j < size; ++j) at(i, j) -= factor * at(rank, j);
        }
        ++rank;
    }
    return size - rank;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw Error("euler_phi: n must be positive");
    std::int64_t result = n;
    std::int64_t rest = n;
    for (std::int64_t f = 2; f * f <= rest; ++f) {
        if (rest % f != 0) continue;
        result -= result / f;
        while (rest % f == 0) rest /= f;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::int64_t phi_sum(std::int64_t n) {
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= n; ++i) total += euler_phi(i);
    return total;
}

}  // namespace sturmian::reference
