#pragma once

// Factors of characteristic words: fixed-length binary words with packed
// storage, the factor set F_n(alpha) built two independent ways, and
// height/palindrome utilities.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/slope.hpp"

namespace sturmian {

// Fixed-length binary word. Bits are packed 64 per word, most significant
// first, so lexicographic order coincides with numeric order of the words.
class Factor {
public:
    Factor() = default;
    explicit Factor(std::span<const std::uint8_t> bits);
    static Factor from_string(std::string_view s);  // characters '0' / '1'

    std::int64_t size() const noexcept { return n_; }
    int bit(std::int64_t t) const;

    std::int64_t height() const noexcept;  // number of 1-components
    Factor reversed() const;
    bool is_palindrome() const;

    // Dot product as 0/1 vectors; both factors must have equal length.
    std::int64_t dot(const Factor& other) const;

    std::string to_string() const;

    bool operator==(const Factor& other) const = default;
    bool operator<(const Factor& other) const;

private:
    std::int64_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline std::int64_t height(const Factor& w) { return w.height(); }
inline Factor reversed(const Factor& w) { return w.reversed(); }
inline bool is_palindrome(const Factor& w) { return w.is_palindrome(); }

// F_n(alpha): the n+1 factors of length n, strictly increasing lexicographically.
struct FactorSet {
    std::int64_t n;
    Slope slope;
    std::vector<Factor> factors;

    bool contains(const Factor& w) const;
    bool same_factors(const FactorSet& other) const;
};

std::int64_t height_sum(const FactorSet& set);
std::vector<Factor> palindromes(const FactorSet& set);

// First `length` letters of the characteristic word,
// c_alpha(i) = floor((i+2)*alpha) - floor((i+1)*alpha).
std::vector<std::uint8_t> char_prefix(const Slope& alpha, std::int64_t length);

// F_n(alpha) via the sorted-fractional-parts construction: indices
// j in {0..n} ordered by {-j*alpha}, each factor evaluated from a floor
// table. Rational slopes need guard > n.
FactorSet factor_set(const Slope& alpha, std::int64_t n);

// Definitional oracle: slide a length-n window over growing characteristic
// prefixes until n+1 distinct factors appear. Throws NonSturmianBudget if
// that never happens within length 2^20 * n.
FactorSet factor_set_window(const Slope& alpha, std::int64_t n);

}  // namespace sturmian
