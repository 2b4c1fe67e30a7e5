#include "sturmian/slope.hpp"

#include <cassert>
#include <charconv>
#include <cstdint>
#include <limits>
#include <utility>

namespace sturmian {

namespace {

// Largest radicand we are willing to make squarefree by trial division.
constexpr std::int64_t kMaxRadicand = 1'000'000'000'000;

std::int64_t to_i64(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw Error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

mpz_class floor_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// d = square * d0 with d0 squarefree; returns (d0, sqrt of the square part).
std::pair<std::int64_t, std::int64_t> extract_square_part(std::int64_t d) {
    std::int64_t square_root = 1;
    for (std::int64_t f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            square_root *= f;
        }
    }
    return {d, square_root};
}

Ordering ordering_from_sign(int s) {
    if (s < 0) return Ordering::LT;
    if (s > 0) return Ordering::GT;
    return Ordering::EQ;
}

std::int64_t parse_int(std::string_view text, const char* what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw Error(std::string("bad slope spec: cannot parse integer ") + std::string(text) +
                    " in " + what);
    return value;
}

}  // namespace

int sign_with_radical(const mpz_class& u, const mpz_class& v, const mpz_class& d) {
    const int su = sgn(u);
    const int sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // Opposite signs: |u| vs |v|*sqrt(d), i.e. u^2 vs v^2*d.
    const mpz_class lhs = u * u;
    const mpz_class rhs = v * v * d;
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for non-square d with v != 0
    return c > 0 ? su : sv;
}

mpz_class floor_radical(const mpz_class& v, const mpz_class& d) {
    assert(sgn(v) != 0);
    mpz_class r = sqrt(mpz_class(v * v * d));
    if (sgn(v) > 0) return r;
    // v*sqrt(d) is a negative irrational: floor(-x) = -floor(x) - 1.
    return -r - 1;
}

Slope Slope::canonical_quadratic(mpz_class a, mpz_class b, mpz_class c, mpz_class d) {
    if (sgn(c) == 0) throw ZeroDenominator("quadratic slope: c = 0");
    if (d < 2) throw DegenerateRational("quadratic slope: radicand must be >= 2");
    if (d > kMaxRadicand) throw Error("quadratic slope: radicand exceeds 10^12");

    const auto [d0, root] = extract_square_part(to_i64(d, "radicand"));
    if (d0 == 1) throw DegenerateRational("quadratic slope: radicand is a perfect square");
    b *= root;
    d = d0;
    if (sgn(b) == 0) throw DegenerateRational("quadratic slope: b = 0 gives a rational value");

    if (sgn(c) < 0) {
        a = -a;
        b = -b;
        c = -c;
    }

    // Reduce mod 1: floor((a + b*sqrt(d))/c) = floor((a + floor(b*sqrt(d)))/c).
    const mpz_class f = floor_div(a + floor_radical(b, d), c);
    a -= f * c;

    mpz_class g = gcd(gcd(a, b), c);
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    return Slope(QuadraticIrrational{std::move(a), std::move(b), std::move(c), std::move(d)});
}

Slope Slope::quadratic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return canonical_quadratic(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)),
                               mpz_class(static_cast<long>(c)), mpz_class(static_cast<long>(d)));
}

Slope Slope::rational(std::int64_t p_in, std::int64_t q_in, std::int64_t guard_in) {
    if (q_in == 0) throw ZeroDenominator("rational slope: q = 0");
    mpz_class p(static_cast<long>(p_in));
    mpz_class q(static_cast<long>(q_in));
    if (sgn(q) < 0) {
        p = -p;
        q = -q;
    }

    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());  // p mod q in [0, q)
    p = r;
    if (sgn(p) == 0) throw ZeroValue("rational slope: value is 0 mod 1");

    const mpz_class g = gcd(p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }

    mpz_class guard = guard_in <= 0 ? q : mpz_class(static_cast<long>(guard_in));
    if (guard > q)
        throw GuardTooLarge("rational slope: guard " + guard.get_str() + " exceeds denominator " +
                            q.get_str());
    return Slope(GuardedRational{std::move(p), std::move(q), std::move(guard)});
}

Slope Slope::parse(std::string_view spec) {
    if (spec == "golden") return quadratic(-1, 1, 2, 5);
    if (spec == "invsqrt3") return quadratic(0, 1, 3, 3);

    constexpr std::string_view quad_prefix = "quad:";
    constexpr std::string_view rat_prefix = "rat:";
    if (spec.substr(0, quad_prefix.size()) == quad_prefix) {
        std::string_view rest = spec.substr(quad_prefix.size());
        std::int64_t vals[4];
        for (int i = 0; i < 4; ++i) {
            const auto comma = rest.find(',');
            if (i < 3 && comma == std::string_view::npos)
                throw Error("bad slope spec: quad:a,b,c,d needs four integers");
            if (i == 3 && comma != std::string_view::npos)
                throw Error("bad slope spec: quad:a,b,c,d needs exactly four integers");
            vals[i] = parse_int(i < 3 ? rest.substr(0, comma) : rest, "quad");
            if (i < 3) rest = rest.substr(comma + 1);
        }
        return quadratic(vals[0], vals[1], vals[2], vals[3]);
    }
    if (spec.substr(0, rat_prefix.size()) == rat_prefix) {
        std::string_view rest = spec.substr(rat_prefix.size());
        const auto slash = rest.find('/');
        if (slash == std::string_view::npos)
            throw Error("bad slope spec: rat:p/q[:guard] needs a '/'");
        const std::int64_t p = parse_int(rest.substr(0, slash), "rat");
        rest = rest.substr(slash + 1);
        const auto colon = rest.find(':');
        std::int64_t guard = 0;
        std::int64_t q;
        if (colon == std::string_view::npos) {
            q = parse_int(rest, "rat");
        } else {
            q = parse_int(rest.substr(0, colon), "rat");
            guard = parse_int(rest.substr(colon + 1), "rat guard");
            if (guard <= 0) throw Error("bad slope spec: guard must be positive");
        }
        return rational(p, q, guard);
    }
    throw Error("bad slope spec: '" + std::string(spec) +
                "' (expected quad:a,b,c,d | rat:p/q[:guard] | golden | invsqrt3)");
}

bool Slope::is_rational() const noexcept {
    return std::holds_alternative<GuardedRational>(rep_);
}

const QuadraticIrrational* Slope::as_quadratic() const noexcept {
    return std::get_if<QuadraticIrrational>(&rep_);
}

const GuardedRational* Slope::as_rational() const noexcept {
    return std::get_if<GuardedRational>(&rep_);
}

std::int64_t Slope::guard() const noexcept {
    const auto* r = as_rational();
    if (r == nullptr) return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(r->guard.get_si());
}

bool Slope::less_than_half() const {
    if (const auto* r = as_rational()) return 2 * r->p < r->q;
    const auto& q = *as_quadratic();
    return sign_with_radical(2 * q.a - q.c, 2 * q.b, q.d) < 0;
}

bool Slope::is_half() const noexcept {
    const auto* r = as_rational();
    return r != nullptr && 2 * r->p == r->q;
}

Slope Slope::complement() const {
    if (const auto* r = as_rational())
        return Slope(GuardedRational{mpz_class(r->q - r->p), r->q, r->guard});
    const auto& q = *as_quadratic();
    // 1 - (a + b*sqrt(d))/c = ((c-a) - b*sqrt(d))/c; already in (0,1).
    return canonical_quadratic(q.c - q.a, -q.b, q.c, q.d);
}

void Slope::require_index(std::int64_t k) const {
    const auto* r = as_rational();
    if (r == nullptr) return;
    const std::int64_t magnitude = k < 0 ? -k : k;
    if (mpz_class(static_cast<long>(magnitude)) >= r->guard)
        throw GuardViolation(k, static_cast<std::int64_t>(r->guard.get_si()), spec_string());
}

std::int64_t Slope::floor_mul(std::int64_t k) const {
    if (k == 0) return 0;
    require_index(k);
    if (const auto* r = as_rational())
        return to_i64(floor_div(mpz_class(static_cast<long>(k)) * r->p, r->q), "floor_mul");

    const auto& s = *as_quadratic();
    const mpz_class u = k * s.a;
    const mpz_class v = k * s.b;
    const mpz_class f = floor_div(u + floor_radical(v, s.d), s.c);
    // f <= k*alpha < f+1, both checked through the radical sign test.
    assert(sign_with_radical(u - f * s.c, v, s.d) >= 0);
    assert(sign_with_radical(u - (f + 1) * s.c, v, s.d) < 0);
    return to_i64(f, "floor_mul");
}

Ordering Slope::frac_cmp(std::int64_t j, std::int64_t k) const {
    if (j < 0 || k < 0) throw Error("frac_cmp: indices must be nonnegative");
    if (j == k) return Ordering::EQ;
    return frac_cmp_with_floors(j, k, floor_mul(j), floor_mul(k));
}

Ordering Slope::frac_cmp_with_floors(std::int64_t j, std::int64_t k, std::int64_t floor_j,
                                     std::int64_t floor_k) const {
    if (j == k) return Ordering::EQ;
    // {j*alpha} - {k*alpha} = (j-k)*alpha - (floor_j - floor_k)
    const std::int64_t dj = j - k;
    const std::int64_t df = floor_j - floor_k;
    if (const auto* r = as_rational()) {
        require_index(j);
        require_index(k);
        return ordering_from_sign(sgn(mpz_class(dj * r->p - df * r->q)));
    }
    const auto& s = *as_quadratic();
    const int sign = sign_with_radical(dj * s.a - df * s.c, dj * s.b, s.d);
    assert(sign != 0);  // distinct indices never tie for an irrational slope
    return ordering_from_sign(sign);
}

bool Slope::frac_lt_multiple(std::int64_t k, std::int64_t m) const {
    if (k < 1 || m < 1) throw Error("frac_lt_multiple: k and m must be positive");
    // m*alpha must lie in (0,1) for [0, m*alpha) to be an arc of the circle.
    if (const auto* r = as_rational()) {
        if (m * r->p >= r->q)
            throw IntervalOutOfRange("frac_lt_multiple: m*alpha >= 1 for m=" + std::to_string(m));
        const std::int64_t f = floor_mul(k);
        return sgn(mpz_class((k - m) * r->p - f * r->q)) < 0;
    }
    const auto& s = *as_quadratic();
    if (sign_with_radical(m * s.a - s.c, m * s.b, s.d) >= 0)
        throw IntervalOutOfRange("frac_lt_multiple: m*alpha >= 1 for m=" + std::to_string(m));
    // {k*alpha} < m*alpha  <=>  (k-m)*alpha < floor(k*alpha)
    const std::int64_t f = floor_mul(k);
    return sign_with_radical((k - m) * s.a - f * s.c, (k - m) * s.b, s.d) < 0;
}

std::string Slope::spec_string() const {
    if (const auto* r = as_rational())
        return "rat:" + r->p.get_str() + "/" + r->q.get_str() + ":" + r->guard.get_str();
    const auto& q = *as_quadratic();
    return "quad:" + q.a.get_str() + "," + q.b.get_str() + "," + q.c.get_str() + "," +
           q.d.get_str();
}

bool operator==(const Slope& lhs, const Slope& rhs) {
    if (const auto* lr = lhs.as_rational()) {
        const auto* rr = rhs.as_rational();
        return rr != nullptr && lr->p == rr->p && lr->q == rr->q && lr->guard == rr->guard;
    }
    const auto* lq = lhs.as_quadratic();
    const auto* rq = rhs.as_quadratic();
    return rq != nullptr && lq->a == rq->a && lq->b == rq->b && lq->c == rq->c && lq->d == rq->d;
}

}  // namespace sturmian
