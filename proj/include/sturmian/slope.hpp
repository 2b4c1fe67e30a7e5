#pragma once

// Exact slope arithmetic. A Slope is either a quadratic irrational
// (a + b*sqrt(d))/c held in canonical form, or a guarded rational p/q that
// stands in for any irrational in the same Farey interval and is valid only
// for multipliers |k| < guard. Floors and fractional-part comparisons are
// decided by pure integer arithmetic; no floating point is involved.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "sturmian/errors.hpp"

namespace sturmian {

enum class Ordering { LT, EQ, GT };

// Sign of u + v*sqrt(d) for integers u, v and a non-square radicand d >= 2.
// Decided by case analysis on the signs of u and v, then comparing u^2
// against v^2*d. Returns -1, 0, or +1 (0 only when u = v = 0).
int sign_with_radical(const mpz_class& u, const mpz_class& v, const mpz_class& d);

// floor(v*sqrt(d)) for v != 0 and non-square d >= 2.
mpz_class floor_radical(const mpz_class& v, const mpz_class& d);

struct QuadraticIrrational {
    mpz_class a, b, c, d;  // (a + b*sqrt(d)) / c, canonical: c > 0, gcd(a,b,c) = 1,
                           // d squarefree >= 2, b != 0, value in (0,1)
};

struct GuardedRational {
    mpz_class p, q;     // p/q in lowest terms, 0 < p < q
    mpz_class guard;    // queries require |k| < guard; 1 <= guard <= q
};

class Slope {
public:
    // (a + b*sqrt(d))/c reduced mod 1. Throws ZeroDenominator, DegenerateRational.
    static Slope quadratic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    // p/q reduced mod 1 and to lowest terms; guard <= 0 selects the default
    // guard q (after reduction). Throws ZeroDenominator, ZeroValue, GuardTooLarge.
    static Slope rational(std::int64_t p, std::int64_t q, std::int64_t guard = 0);

    // CLI grammar: "quad:a,b,c,d", "rat:p/q[:guard]", aliases "golden",
    // "invsqrt3". Integers only; no decimals.
    static Slope parse(std::string_view spec);

    bool is_rational() const noexcept;
    const QuadraticIrrational* as_quadratic() const noexcept;
    const GuardedRational* as_rational() const noexcept;

    // Largest valid multiplier bound: guard for rationals, INT64_MAX otherwise.
    std::int64_t guard() const noexcept;

    // Exact alpha < 1/2 / alpha == 1/2 (the latter only possible for rationals).
    bool less_than_half() const;
    bool is_half() const noexcept;

    // 1 - alpha. Same variant; guard is preserved for rationals.
    Slope complement() const;

    // floor(k*alpha), exact, for signed k. Throws GuardViolation when a
    // rational's |k| >= guard.
    std::int64_t floor_mul(std::int64_t k) const;

    // Compare {j*alpha} with {k*alpha} exactly for j, k >= 0. EQ occurs only
    // for j == k (irrational) or equal residues (rational).
    Ordering frac_cmp(std::int64_t j, std::int64_t k) const;

    // Same comparison with the floors already known; used by callers that
    // batch floor_mul over a range.
    Ordering frac_cmp_with_floors(std::int64_t j, std::int64_t k, std::int64_t floor_j,
                                  std::int64_t floor_k) const;

    // {k*alpha} < m*alpha for k >= 1, m >= 1. Requires m*alpha < 1, else
    // IntervalOutOfRange. Decided by the sign of (k-m)*alpha - floor(k*alpha).
    bool frac_lt_multiple(std::int64_t k, std::int64_t m) const;

    // Round-trippable spec string ("quad:-1,1,2,5", "rat:3/7:7").
    std::string spec_string() const;

    // Throws GuardViolation unless |k| < guard (no-op for irrationals).
    void require_index(std::int64_t k) const;

    friend bool operator==(const Slope& lhs, const Slope& rhs);

private:
    explicit Slope(QuadraticIrrational q) : rep_(std::move(q)) {}
    explicit Slope(GuardedRational r) : rep_(std::move(r)) {}

    static Slope canonical_quadratic(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    std::variant<QuadraticIrrational, GuardedRational> rep_;
};

}  // namespace sturmian
