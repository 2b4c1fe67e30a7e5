#include "sturmian/gram.hpp"

#include <utility>

#include "sturmian/detail/parallel.hpp"
#include "sturmian/errors.hpp"

namespace sturmian {

IntMatrix IntMatrix::zero(std::int64_t size) {
    IntMatrix m;
    m.size = size;
    m.e.assign(static_cast<std::size_t>(size * size), mpz_class(0));
    return m;
}

IntMatrix IntMatrix::identity(std::int64_t size) {
    IntMatrix m = zero(size);
    for (std::int64_t i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

mpz_class IntMatrix::trace() const {
    mpz_class t = 0;
    for (std::int64_t i = 0; i < size; ++i) t += at(i, i);
    return t;
}

void IntMatrix::swap_rows(std::int64_t i, std::int64_t j) {
    if (i == j) return;
    for (std::int64_t col = 0; col < size; ++col) std::swap(at(i, col), at(j, col));
}

IntMatrix gram_entries(const std::vector<Factor>& factors) {
    const std::int64_t size = static_cast<std::int64_t>(factors.size());
    IntMatrix m = IntMatrix::zero(size);
    for (std::int64_t i = 0; i < size; ++i) {
        const Factor& wi = factors[static_cast<std::size_t>(i)];
        for (std::int64_t j = i; j < size; ++j) {
            const std::int64_t d = wi.dot(factors[static_cast<std::size_t>(j)]);
            m.at(i, j) = d;
            m.at(j, i) = d;
        }
    }
    return m;
}

GramMatrix gram_matrix(const FactorSet& set) {
    return GramMatrix{set.n, set.slope, gram_entries(set.factors)};
}

namespace {

// q = num / den, throwing if the division is not exact. Fraction-free
// elimination guarantees exactness; a nonzero remainder means a bug upstream.
void exact_div(mpz_class& q, const mpz_class& num, const mpz_class& den) {
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw Error("fraction-free elimination: inexact division");
}

}  // namespace

std::int64_t nullity(IntMatrix m) {
    // Bareiss fraction-free elimination with first-nonzero pivoting. After
    // each step the remaining entries are minors of the original matrix
    // bordered by the processed pivots, so dividing by the previous pivot is
    // exact and entry growth stays polynomial in bit size.
    const std::int64_t size = m.size;
    std::int64_t rank = 0;
    mpz_class prev(1);
    mpz_class tmp, num;
    for (std::int64_t col = 0; col < size && rank < size; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t i = rank; i < size; ++i)
            if (sgn(m.at(i, col)) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;  // column already clear below the processed rows
        m.swap_rows(rank, pivot);
        const mpz_class p = m.at(rank, col);
        for (std::int64_t i = rank + 1; i < size; ++i) {
            const mpz_class& head = m.at(i, col);
            if (sgn(head) == 0) {
                // Still rescale: the invariant requires every remaining entry
                // to be a bordered minor, head factor zero or not.
                for (std::int64_t j = col + 1; j < size; ++j) {
                    num = p * m.at(i, j);
                    exact_div(tmp, num, prev);
                    m.at(i, j) = tmp;
                }
            } else {
                for (std::int64_t j = col + 1; j < size; ++j) {
                    num = p * m.at(i, j) - head * m.at(rank, j);
                    exact_div(tmp, num, prev);
                    m.at(i, j) = tmp;
                }
                m.at(i, col) = 0;
            }
        }
        prev = p;
        ++rank;
    }
    return size - rank;
}

std::int64_t eigen_multiplicity(const IntMatrix& m, const mpz_class& lambda) {
    IntMatrix shifted = m;
    for (std::int64_t i = 0; i < shifted.size; ++i) shifted.at(i, i) -= lambda;
    return nullity(std::move(shifted));
}

std::int64_t eigen_multiplicity(const GramMatrix& g, const mpz_class& lambda) {
    return eigen_multiplicity(g.entries, lambda);
}

std::vector<std::pair<std::int64_t, std::int64_t>> m_sweep(const Slope& alpha,
                                                           std::int64_t n_max, int jobs) {
    if (n_max < 1) throw Error("m_sweep: n_max must be positive");
    std::vector<std::pair<std::int64_t, std::int64_t>> out(static_cast<std::size_t>(n_max));
    detail::parallel_for(std::int64_t(1), n_max + 1, jobs, [&](std::int64_t n) {
        const GramMatrix g = gram_matrix(factor_set(alpha, n));
        out[static_cast<std::size_t>(n - 1)] = {n, eigen_multiplicity(g, 1)};
    });
    return out;
}

}  // namespace sturmian
