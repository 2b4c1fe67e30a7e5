#pragma once

// Gram matrices of factor sets and exact integer-eigenvalue multiplicities.
// Rank (hence nullity, hence multiplicity) is computed by fraction-free
// Bareiss elimination over the integers; no floating point, no tolerances.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sturmian/factor.hpp"
#include "sturmian/slope.hpp"

namespace sturmian {

// Dense square integer matrix, row-major.
struct IntMatrix {
    std::int64_t size = 0;
    std::vector<mpz_class> e;

    static IntMatrix zero(std::int64_t size);
    static IntMatrix identity(std::int64_t size);

    mpz_class& at(std::int64_t i, std::int64_t j) { return e[static_cast<std::size_t>(i * size + j)]; }
    const mpz_class& at(std::int64_t i, std::int64_t j) const {
        return e[static_cast<std::size_t>(i * size + j)];
    }

    mpz_class trace() const;
    void swap_rows(std::int64_t i, std::int64_t j);

    bool operator==(const IntMatrix& other) const = default;
};

// Pairwise dot products of the given factors, in the given order. The order
// affects only the matrix layout, never its spectrum.
IntMatrix gram_entries(const std::vector<Factor>& factors);

struct GramMatrix {
    std::int64_t n;      // factor length; the matrix is (n+1) x (n+1)
    Slope slope;
    IntMatrix entries;   // entries.at(i,j) = factors[i] . factors[j], lexicographic order
};

GramMatrix gram_matrix(const FactorSet& set);

// Kernel dimension over the rationals: size - rank, rank by fraction-free
// elimination with first-nonzero pivoting.
std::int64_t nullity(IntMatrix m);

// Multiplicity of the integer lambda as an eigenvalue: nullity(M - lambda*I).
// For symmetric M the geometric multiplicity equals the algebraic one.
std::int64_t eigen_multiplicity(const IntMatrix& m, const mpz_class& lambda);
std::int64_t eigen_multiplicity(const GramMatrix& g, const mpz_class& lambda);

// (n, m(n)) for n = 1..n_max where m(n) is the multiplicity of 1 as an
// eigenvalue of the Gram matrix of F_n(alpha). jobs <= 0 selects
// hardware_concurrency; output is in ascending n regardless of scheduling.
std::vector<std::pair<std::int64_t, std::int64_t>> m_sweep(const Slope& alpha,
                                                           std::int64_t n_max, int jobs = 1);

}  // namespace sturmian
