#pragma once

// Error taxonomy for the sturmian library. Every failure mode that callers
// can trigger through the public API derives from sturmian::Error; internal
// consistency violations use std::logic_error.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sturmian {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadratic constructor received b = 0, a perfect-square radicand, or a
// radicand < 2: the number would be rational.
class DegenerateRational : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

// Rational slope reduced to an integer (value 0 mod 1).
class ZeroValue : public Error {
public:
    using Error::Error;
};

// Requested guard exceeds the reduced denominator.
class GuardTooLarge : public Error {
public:
    using Error::Error;
};

// A query used a multiplier k with |k| >= guard on a guarded rational.
class GuardViolation : public Error {
public:
    GuardViolation(std::int64_t k, std::int64_t guard, const std::string& slope)
        : Error("guard violation at k=" + std::to_string(k) + ": requires |k| < guard=" +
                std::to_string(guard) + " (slope " + slope + ")"),
          k_(k),
          guard_(guard) {}

    std::int64_t k() const noexcept { return k_; }
    std::int64_t guard() const noexcept { return guard_; }

private:
    std::int64_t k_;
    std::int64_t guard_;
};

// frac_lt_multiple asked about [0, m*alpha) with m*alpha >= 1.
class IntervalOutOfRange : public Error {
public:
    using Error::Error;
};

// The B-sequence recurrence is undefined at alpha = 1/2.
class HalfSlope : public Error {
public:
    using Error::Error;
};

// factor_set_window failed to find n+1 distinct factors within its budget,
// or found more than n+1: the slope does not behave like a Sturmian slope.
class NonSturmianBudget : public Error {
public:
    using Error::Error;
};

}  // namespace sturmian
