#include "sturmian/factor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

std::size_t words_for(std::int64_t n) {
    return static_cast<std::size_t>((n + 63) / 64);
}

}  // namespace

Factor::Factor(std::span<const std::uint8_t> bits)
    : n_(static_cast<std::int64_t>(bits.size())), w_(words_for(n_)) {
    for (std::int64_t t = 0; t < n_; ++t) {
        if (bits[static_cast<std::size_t>(t)] > 1)
            throw Error("factor: letters must be 0 or 1");
        if (bits[static_cast<std::size_t>(t)])
            w_[static_cast<std::size_t>(t / 64)] |= std::uint64_t(1) << (63 - t % 64);
    }
}

Factor Factor::from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw Error("factor: letters must be 0 or 1");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Factor(bits);
}

int Factor::bit(std::int64_t t) const {
    if (t < 0 || t >= n_) throw Error("factor: position out of range");
    return static_cast<int>((w_[static_cast<std::size_t>(t / 64)] >> (63 - t % 64)) & 1);
}

std::int64_t Factor::height() const noexcept {
    std::int64_t total = 0;
    for (std::uint64_t word : w_) total += std::popcount(word);
    return total;
}

Factor Factor::reversed() const {
    Factor out;
    out.n_ = n_;
    out.w_.assign(words_for(n_), 0);
    for (std::int64_t t = 0; t < n_; ++t) {
        const std::int64_t r = n_ - 1 - t;
        const int b = static_cast<int>((w_[static_cast<std::size_t>(t / 64)] >> (63 - t % 64)) & 1);
        if (b) out.w_[static_cast<std::size_t>(r / 64)] |= std::uint64_t(1) << (63 - r % 64);
    }
    return out;
}

bool Factor::is_palindrome() const {
    for (std::int64_t t = 0, r = n_ - 1; t < r; ++t, --r)
        if (((w_[static_cast<std::size_t>(t / 64)] >> (63 - t % 64)) & 1) !=
            ((w_[static_cast<std::size_t>(r / 64)] >> (63 - r % 64)) & 1))
            return false;
    return true;
}

std::int64_t Factor::dot(const Factor& other) const {
    if (n_ != other.n_) throw Error("factor: dot product needs equal lengths");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) total += std::popcount(w_[i] & other.w_[i]);
    return total;
}

std::string Factor::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (std::int64_t t = 0; t < n_; ++t)
        if ((w_[static_cast<std::size_t>(t / 64)] >> (63 - t % 64)) & 1)
            s[static_cast<std::size_t>(t)] = '1';
    return s;
}

bool Factor::operator<(const Factor& other) const {
    // Most-significant-first packing makes word-wise comparison lexicographic;
    // trailing bits of the last word are zero on both sides.
    if (n_ != other.n_) return n_ < other.n_;
    return w_ < other.w_;
}

bool FactorSet::contains(const Factor& w) const {
    return std::binary_search(factors.begin(), factors.end(), w);
}

bool FactorSet::same_factors(const FactorSet& other) const {
    return factors == other.factors;
}

std::int64_t height_sum(const FactorSet& set) {
    std::int64_t total = 0;
    for (const Factor& w : set.factors) total += w.height();
    return total;
}

std::vector<Factor> palindromes(const FactorSet& set) {
    std::vector<Factor> out;
    for (const Factor& w : set.factors)
        if (w.is_palindrome()) out.push_back(w);
    return out;
}

std::vector<std::uint8_t> char_prefix(const Slope& alpha, std::int64_t length) {
    if (length < 0) throw Error("char_prefix: length must be nonnegative");
    std::vector<std::uint8_t> word(static_cast<std::size_t>(length));
    if (length == 0) return word;
    std::int64_t prev = alpha.floor_mul(1);
    for (std::int64_t i = 0; i < length; ++i) {
        const std::int64_t next = alpha.floor_mul(i + 2);
        word[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(next - prev);
        prev = next;
    }
    return word;
}

FactorSet factor_set(const Slope& alpha, std::int64_t n) {
    if (n < 1) throw Error("factor_set: n must be positive");

    // Floor table over every multiplier the construction touches: m in [-n, n].
    std::vector<std::int64_t> floors(static_cast<std::size_t>(2 * n + 1));
    const auto floor_at = [&](std::int64_t m) -> std::int64_t {
        return floors[static_cast<std::size_t>(m + n)];
    };
    for (std::int64_t m = 0; m <= n; ++m) {
        floors[static_cast<std::size_t>(m + n)] = alpha.floor_mul(m);
        if (m > 0) floors[static_cast<std::size_t>(n - m)] = alpha.floor_mul(-m);
    }

    // Order the shifts j = 0..n by {-j*alpha} = {j*(1-alpha)}, ascending.
    const Slope comp = alpha.complement();
    std::vector<std::int64_t> comp_floors(static_cast<std::size_t>(n + 1));
    for (std::int64_t j = 0; j <= n; ++j)
        comp_floors[static_cast<std::size_t>(j)] = comp.floor_mul(j);

    std::vector<std::int64_t> order(static_cast<std::size_t>(n + 1));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int64_t x, std::int64_t y) {
        const Ordering c = comp.frac_cmp_with_floors(x, y, comp_floors[static_cast<std::size_t>(x)],
                                                     comp_floors[static_cast<std::size_t>(y)]);
        if (c == Ordering::EQ && x != y)
            throw Error("factor_set: tied sort keys (slope guard too small?)");
        return c == Ordering::LT;
    });

    // Factor i reads off w_i[t] = floor((t+1-j)*alpha) - floor((t-j)*alpha)
    // with j = order[i]; the shift identity folds the offset into the index.
    FactorSet out{n, alpha, {}};
    out.factors.reserve(static_cast<std::size_t>(n + 1));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i <= n; ++i) {
        const std::int64_t j = order[static_cast<std::size_t>(i)];
        for (std::int64_t t = 0; t < n; ++t)
            bits[static_cast<std::size_t>(t)] =
                static_cast<std::uint8_t>(floor_at(t + 1 - j) - floor_at(t - j));
        out.factors.emplace_back(bits);
    }

    // The construction emits factors in strictly increasing lexicographic
    // order; anything else means the slope arithmetic is broken.
    for (std::size_t i = 0; i + 1 < out.factors.size(); ++i)
        if (!(out.factors[i] < out.factors[i + 1]))
            throw Error("factor_set: output not strictly sorted");
    return out;
}

FactorSet factor_set_window(const Slope& alpha, std::int64_t n) {
    if (n < 1) throw Error("factor_set_window: n must be positive");
    const std::int64_t budget = std::int64_t(1) << 20;
    std::set<Factor> seen;
    for (std::int64_t scale = 4; scale <= budget; scale *= 2) {
        const std::int64_t length = scale * n;
        const std::vector<std::uint8_t> word = char_prefix(alpha, length);
        seen.clear();
        const std::span<const std::uint8_t> all(word);
        for (std::int64_t pos = 0; pos + n <= length; ++pos) {
            seen.emplace(all.subspan(static_cast<std::size_t>(pos), static_cast<std::size_t>(n)));
            if (static_cast<std::int64_t>(seen.size()) > n + 1)
                throw NonSturmianBudget("factor_set_window: more than n+1 distinct factors");
        }
        if (static_cast<std::int64_t>(seen.size()) == n + 1) {
            FactorSet out{n, alpha, {seen.begin(), seen.end()}};
            return out;
        }
    }
    throw NonSturmianBudget("factor_set_window: fewer than n+1 factors within 2^20 * n letters");
}

}  // namespace sturmian
