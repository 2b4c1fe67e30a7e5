#include "sturmian/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include <json.hpp>

#include "sturmian/bseq.hpp"
#include "sturmian/detail/parallel.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/factor.hpp"
#include "sturmian/farey.hpp"
#include "sturmian/gram.hpp"
#include "sturmian/reference.hpp"

namespace sturmian {

namespace {

// Canonical check order for reports; checks that ran zero cases are omitted.
const char* const kCheckOrder[] = {
    "floor-complement",       "frac-total-order",       "complement-involution",
    "height-parity",          "height-sum-closed-form", "structural-size-sorted",
    "reversal-closure",       "palindromes",            "height-split",
    "window-oracle",          "window-membership",      "b-direct-spotcheck",
    "b-complement-identity",  "b-recurrence-vs-direct", "b-parity-formula",
    "mod2-collapsed",         "gram-trace",             "psd-negative-lambda",
    "permutation-invariance", "nullity-oracle",         "farey-neighbors",
    "farey-phi-count",        "farey-no-collisions",    "sweep-anchors",
};

struct Bucket {
    std::map<std::string, std::int64_t> cases;
    std::vector<VerifyFailure> failures;
    std::set<std::string> tripped;

    void count(const char* name) { ++cases[name]; }

    // Records the first counterexample per (invariant, slope) pair.
    void fail(const char* name, const std::string& slope, std::int64_t index,
              std::string expected, std::string actual) {
        if (!tripped.insert(std::string(name) + "|" + slope).second) return;
        failures.push_back({name, slope, index, std::move(expected), std::move(actual)});
    }
};

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool is_square(std::int64_t d) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= d) ++r;
    return r * r == d;
}

Slope random_quadratic(std::mt19937_64& rng) {
    for (;;) {
        const std::int64_t b = draw(rng, -20, 20);
        if (b == 0) continue;
        const std::int64_t d = draw(rng, 2, 2000);
        if (is_square(d)) continue;
        return Slope::quadratic(draw(rng, -50, 50), b, draw(rng, 1, 50), d);
    }
}

// B_alpha(k) for k = 0..kmax straight from the definition, using a shared
// floor table; the public b_direct is spot-checked against this separately.
std::vector<std::int64_t> b_table(const Slope& s, const std::vector<std::int64_t>& floors,
                                  std::int64_t kmax) {
    std::vector<std::int64_t> table(static_cast<std::size_t>(kmax + 1), 0);
    for (std::int64_t k = 1; k <= kmax; ++k) {
        std::int64_t count = 0;
        for (std::int64_t q = 1; q < k; ++q)
            if (s.frac_cmp_with_floors(q, k, floors[static_cast<std::size_t>(q)],
                                       floors[static_cast<std::size_t>(k)]) == Ordering::LT)
                ++count;
        table[static_cast<std::size_t>(k)] = count;
    }
    return table;
}

void check_slope(const Slope& s, const VerifyOptions& opt, Bucket& b) {
    const std::string spec = s.spec_string();
    const Slope comp = s.complement();
    const std::int64_t kmax = opt.bseq_kmax;

    std::vector<std::int64_t> fs(static_cast<std::size_t>(kmax + 1));
    std::vector<std::int64_t> fc(static_cast<std::size_t>(kmax + 1));
    for (std::int64_t k = 0; k <= kmax; ++k) {
        fs[static_cast<std::size_t>(k)] = s.floor_mul(k);
        fc[static_cast<std::size_t>(k)] = comp.floor_mul(k);
    }

    // floor(k*a) + floor(k*(1-a)) = k-1 for irrational a.
    for (std::int64_t k = 1; k <= kmax; ++k) {
        b.count("floor-complement");
        const std::int64_t sum = fs[static_cast<std::size_t>(k)] + fc[static_cast<std::size_t>(k)];
        if (sum != k - 1)
            b.fail("floor-complement", spec, k, std::to_string(k - 1), std::to_string(sum));
    }

    // Involution, plus the comparison reflection {ja}<{ka} iff {k(1-a)}<{j(1-a)}.
    b.count("complement-involution");
    if (!(comp.complement() == s))
        b.fail("complement-involution", spec, -1, spec, comp.complement().spec_string());
    // j = k = 0 is excluded: {0*a} = 0 is the minimum under both slopes, so
    // the reflection {ja}<{ka} <=> {j(1-a)}>{k(1-a)} starts at index 1.
    for (std::int64_t j = 1; j <= 40; ++j)
        for (std::int64_t k = 1; k <= 40; ++k) {
            if (j == k) continue;
            b.count("complement-involution");
            const bool lt = s.frac_cmp(j, k) == Ordering::LT;
            const bool comp_gt = comp.frac_cmp(j, k) == Ordering::GT;
            if (lt != comp_gt)
                b.fail("complement-involution", spec, k, "reflected ordering", "same ordering");
        }

    // frac_cmp is a strict total order on indices 0..60.
    {
        constexpr std::int64_t K = 60;
        bool order_ok = true;
        for (std::int64_t j = 0; j <= K && order_ok; ++j)
            for (std::int64_t k = 0; k <= K; ++k) {
                const Ordering jk = s.frac_cmp(j, k);
                if (j == k ? jk != Ordering::EQ
                           : (jk == Ordering::EQ ||
                              (jk == Ordering::LT) != (s.frac_cmp(k, j) == Ordering::GT))) {
                    b.count("frac-total-order");
                    b.fail("frac-total-order", spec, k, "strict total order", "violation");
                    order_ok = false;
                    break;
                }
            }
        std::vector<std::int64_t> idx(K + 1);
        for (std::int64_t j = 0; j <= K; ++j) idx[static_cast<std::size_t>(j)] = j;
        std::sort(idx.begin(), idx.end(), [&](std::int64_t x, std::int64_t y) {
            return s.frac_cmp(x, y) == Ordering::LT;
        });
        for (std::size_t t = 0; t + 1 < idx.size() && order_ok; ++t)
            if (s.frac_cmp(idx[t], idx[t + 1]) != Ordering::LT) {
                b.count("frac-total-order");
                b.fail("frac-total-order", spec, idx[t + 1], "LT chain after sort", "non-LT link");
                order_ok = false;
            }
        if (order_ok) b.count("frac-total-order");
    }

    const std::vector<std::int64_t> B = b_table(s, fs, kmax);
    const std::vector<std::int64_t> Bc = b_table(comp, fc, kmax);

    for (std::int64_t k = 1; k <= std::min<std::int64_t>(100, kmax); ++k) {
        b.count("b-direct-spotcheck");
        const std::int64_t direct = b_direct(s, k);
        if (direct != B[static_cast<std::size_t>(k)])
            b.fail("b-direct-spotcheck", spec, k, std::to_string(B[static_cast<std::size_t>(k)]),
                   std::to_string(direct));
    }

    for (std::int64_t k = 1; k <= kmax; ++k) {
        b.count("b-complement-identity");
        const std::int64_t sum = B[static_cast<std::size_t>(k)] + Bc[static_cast<std::size_t>(k)];
        if (sum != k - 1)
            b.fail("b-complement-identity", spec, k, std::to_string(k - 1), std::to_string(sum));
    }

    {
        const std::vector<BSeqRecord> rec = b_recurrence(s, kmax);
        for (std::int64_t k = 1; k <= kmax; ++k) {
            b.count("b-recurrence-vs-direct");
            const std::int64_t value = rec[static_cast<std::size_t>(k - 1)].value;
            if (value != B[static_cast<std::size_t>(k)])
                b.fail("b-recurrence-vs-direct", spec, k, std::to_string(B[static_cast<std::size_t>(k)]),
                       std::to_string(value));
        }
    }

    for (std::int64_t k = 1; k <= kmax; ++k) {
        b.count("b-parity-formula");
        const int predicted = b_parity(s, k);
        const int actual = static_cast<int>(B[static_cast<std::size_t>(k)] % 2);
        if (predicted != actual)
            b.fail("b-parity-formula", spec, k, std::to_string(predicted), std::to_string(actual));
    }

    if (s.less_than_half()) {
        for (std::int64_t k = 3; k <= kmax; ++k) {
            b.count("mod2-collapsed");
            const int bump = (k % 2 == 0 && s.frac_lt_multiple(k, 2)) ? 1 : 0;
            const int lhs = static_cast<int>(B[static_cast<std::size_t>(k)] % 2);
            const int rhs = static_cast<int>((B[static_cast<std::size_t>(k - 2)] + bump) % 2);
            if (lhs != rhs)
                b.fail("mod2-collapsed", spec, k, std::to_string(rhs), std::to_string(lhs));
        }
    }

    // Factor-set sweep: every per-n invariant in one pass.
    const std::int64_t n_top = std::max({opt.parity_nmax, opt.height_sum_nmax,
                                         opt.structural_nmax, opt.window_nmax});
    for (std::int64_t n = 1; n <= n_top; ++n) {
        const FactorSet set = factor_set(s, n);
        const std::int64_t hs = height_sum(set);

        if (n <= opt.parity_nmax) {
            b.count("height-parity");
            if ((hs - n) % 2 != 0)
                b.fail("height-parity", spec, n, "height sum with parity of n",
                       std::to_string(hs));
        }

        if (n <= opt.height_sum_nmax) {
            b.count("height-sum-closed-form");
            const std::int64_t formula = height_sum_formula(s, n);
            if (hs != formula)
                b.fail("height-sum-closed-form", spec, n, std::to_string(formula), std::to_string(hs));
        }

        if (n <= opt.structural_nmax) {
            b.count("structural-size-sorted");
            bool ok = static_cast<std::int64_t>(set.factors.size()) == n + 1;
            for (std::size_t i = 0; ok && i < set.factors.size(); ++i) {
                if (set.factors[i].size() != n) ok = false;
                if (i + 1 < set.factors.size() && !(set.factors[i] < set.factors[i + 1]))
                    ok = false;
            }
            if (!ok)
                b.fail("structural-size-sorted", spec, n, "n+1 sorted factors of length n",
                       "violation");

            b.count("reversal-closure");
            for (const Factor& w : set.factors)
                if (!set.contains(w.reversed())) {
                    b.fail("reversal-closure", spec, n, w.to_string() + " reversed in set",
                           "missing");
                    break;
                }

            b.count("palindromes");
            const std::vector<Factor> pals = palindromes(set);
            if (n % 2 == 1) {
                if (pals.size() != 2)
                    b.fail("palindromes", spec, n, "exactly 2 palindromes",
                           std::to_string(pals.size()));
            } else {
                for (const Factor& w : pals)
                    if (w.height() % 2 != 0) {
                        b.fail("palindromes", spec, n, "even palindrome heights",
                               w.to_string());
                        break;
                    }
            }

            b.count("height-split");
            const std::int64_t base = fs[static_cast<std::size_t>(std::min(n, kmax))];
            std::int64_t above = 0;
            bool two_valued = n <= kmax;
            for (const Factor& w : set.factors) {
                const std::int64_t h = w.height();
                if (h == base + 1)
                    ++above;
                else if (h != base)
                    two_valued = false;
            }
            if (!two_valued || above != B[static_cast<std::size_t>(std::min(n, kmax))] + 1)
                b.fail("height-split", spec, n,
                       "heights in {fl,fl+1}, B+1 at the larger value",
                       !two_valued ? "value outside the pair" : std::to_string(above));
        }

        if (n <= opt.window_nmax) {
            b.count("window-oracle");
            if (!set.same_factors(factor_set_window(s, n)))
                b.fail("window-oracle", spec, n, "window factors equal construction", "differ");
        }

        // Cross-module: trace(G) = height sum = the closed form.
        if ((n <= 34 && (n == 1 || n == 2 || n == 3 || n == 5 || n == 8 || n == 13 || n == 21 ||
                         n == 34)) &&
            n <= opt.structural_nmax) {
            b.count("gram-trace");
            const mpz_class tr = gram_entries(set.factors).trace();
            if (tr != hs || tr != height_sum_formula(s, n))
                b.fail("gram-trace", spec, n, std::to_string(hs), tr.get_str());
        }

        // Positive semidefiniteness probe: no negative integer eigenvalues.
        if ((n == 10 || n == 25) && n <= opt.structural_nmax) {
            const IntMatrix g = gram_entries(set.factors);
            for (std::int64_t lambda = -5; lambda <= -1; ++lambda) {
                b.count("psd-negative-lambda");
                const std::int64_t mult = eigen_multiplicity(g, mpz_class(lambda));
                if (mult != 0)
                    b.fail("psd-negative-lambda", spec, lambda, "0", std::to_string(mult));
            }
        }
    }

    // Every window of a long prefix is a known factor.
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(20, opt.structural_nmax); ++n) {
        b.count("window-membership");
        const FactorSet set = factor_set(s, n);
        const std::vector<std::uint8_t> word = char_prefix(s, 40 * n);
        for (std::int64_t pos = 0; pos + n <= 40 * n; ++pos) {
            const Factor w(std::span<const std::uint8_t>(word.data() + pos,
                                                         static_cast<std::size_t>(n)));
            if (!set.contains(w)) {
                b.fail("window-membership", spec, n, "window at " + std::to_string(pos) +
                       " in factor set", "missing");
                break;
            }
        }
    }
}

void check_farey(const VerifyOptions& opt, Bucket& b) {
    for (std::int64_t n = 1; n <= opt.farey_dedup_nmax; ++n) {
        const std::vector<FareyInterval> intervals = farey_intervals(n);

        b.count("farey-neighbors");
        bool ok = true;
        for (std::size_t i = 0; ok && i < intervals.size(); ++i) {
            const FareyInterval& iv = intervals[i];
            if (iv.p2 * iv.q1 - iv.p1 * iv.q2 != 1) ok = false;
            if (iv.q1 > n || iv.q2 > n || iv.q1 + iv.q2 <= n) ok = false;
            if (iv.rep.guard() != iv.q1 + iv.q2) ok = false;
            if (i > 0 && !(intervals[i - 1].p2 == iv.p1 && intervals[i - 1].q2 == iv.q1))
                ok = false;
        }
        if (intervals.front().p1 != 0 || intervals.front().q1 != 1 ||
            intervals.back().p2 != 1 || intervals.back().q2 != 1)
            ok = false;
        if (!ok) b.fail("farey-neighbors", "-", n, "unimodular consecutive chain", "violation");

        const std::int64_t expected = reference::phi_sum(n);
        const std::int64_t distinct = distinct_factor_sets(n);

        if (n <= opt.farey_count_nmax) {
            b.count("farey-phi-count");
            if (static_cast<std::int64_t>(intervals.size()) != expected || distinct != expected)
                b.fail("farey-phi-count", "-", n, std::to_string(expected),
                       std::to_string(distinct) + " distinct over " +
                           std::to_string(intervals.size()) + " intervals");
        }

        b.count("farey-no-collisions");
        if (distinct != static_cast<std::int64_t>(intervals.size()))
            b.fail("farey-no-collisions", "-", n, std::to_string(intervals.size()),
                   std::to_string(distinct));
    }
}

void check_linear_algebra(const VerifyOptions& opt, std::mt19937_64& rng, Bucket& b) {
    // Structured matrices first (forcing rank-deficiency and column skips),
    // then the seeded random batch.
    std::vector<IntMatrix> batch;
    batch.push_back(IntMatrix::zero(3));
    batch.push_back(IntMatrix::identity(5));
    {
        IntMatrix m = IntMatrix::zero(2);
        m.at(0, 0) = 2;
        m.at(0, 1) = 2;
        m.at(1, 0) = 2;
        m.at(1, 1) = 2;
        batch.push_back(m);
    }
    {
        // Zero column plus a duplicated row.
        IntMatrix m = IntMatrix::zero(4);
        const std::int64_t rows[4][4] = {{1, 0, 2, 3}, {2, 0, 4, 6}, {0, 0, 0, 0}, {1, 0, 2, 4}};
        for (std::int64_t i = 0; i < 4; ++i)
            for (std::int64_t j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
        batch.push_back(m);
    }
    while (static_cast<std::int64_t>(batch.size()) < opt.oracle_matrices) {
        const std::int64_t size = draw(rng, 1, 8);
        IntMatrix m = IntMatrix::zero(size);
        for (std::int64_t i = 0; i < size * size; ++i)
            m.e[static_cast<std::size_t>(i)] = draw(rng, -5, 5);
        batch.push_back(std::move(m));
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
        b.count("nullity-oracle");
        const std::int64_t fast = nullity(batch[i]);
        const std::int64_t slow = reference::nullity_rational(batch[i]);
        if (fast != slow)
            b.fail("nullity-oracle", "-", static_cast<std::int64_t>(i), std::to_string(slow),
                   std::to_string(fast));
    }

    // Frozen sanity values for the three trivial cases.
    if (nullity(batch[0]) != 3 || nullity(batch[1]) != 0 || nullity(batch[2]) != 1) {
        b.count("nullity-oracle");
        b.fail("nullity-oracle", "-", -1, "3/0/1 for zero/identity/rank-1", "other");
    }
}

void check_permutations(const VerifyOptions& opt, std::mt19937_64& rng, Bucket& b) {
    const Slope golden = Slope::quadratic(-1, 1, 2, 5);
    const FactorSet set = factor_set(golden, opt.perm_n);
    const std::int64_t base = eigen_multiplicity(gram_entries(set.factors), 1);
    std::vector<Factor> shuffled = set.factors;
    for (std::int64_t trial = 0; trial < opt.perm_trials; ++trial) {
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[static_cast<std::size_t>(draw(
                                           rng, 0, static_cast<std::int64_t>(i) - 1))]);
        b.count("permutation-invariance");
        const std::int64_t mult = eigen_multiplicity(gram_entries(shuffled), 1);
        if (mult != base)
            b.fail("permutation-invariance", golden.spec_string(), trial, std::to_string(base),
                   std::to_string(mult));
    }
}

void check_anchors(Bucket& b) {
    const Slope golden = Slope::quadratic(-1, 1, 2, 5);
    const std::pair<std::int64_t, std::int64_t> anchors[] = {{55, 13}, {65, 0}};
    for (const auto& [n, expected] : anchors) {
        b.count("sweep-anchors");
        const std::int64_t mult = eigen_multiplicity(gram_entries(factor_set(golden, n).factors), 1);
        if (mult != expected)
            b.fail("sweep-anchors", golden.spec_string(), n, std::to_string(expected),
                   std::to_string(mult) +
                       " (re-examine the mod-1 slope reduction of 2/(sqrt(5)-1))");
    }
}

}  // namespace

VerifyOptions VerifyOptions::quick() {
    VerifyOptions o;
    o.random_slopes = 4;
    o.parity_nmax = 60;
    o.height_sum_nmax = 40;
    o.bseq_kmax = 200;
    o.window_nmax = 16;
    o.structural_nmax = 31;
    o.farey_count_nmax = 8;
    o.farey_dedup_nmax = 10;
    o.oracle_matrices = 30;
    o.perm_trials = 5;
    o.perm_n = 12;
    o.anchors = false;
    return o;
}

std::vector<Slope> default_corpus(std::uint64_t seed, int random_count) {
    std::vector<Slope> corpus;
    const auto add = [&](Slope s) {
        for (const Slope& existing : corpus)
            if (existing == s) return;
        corpus.push_back(std::move(s));
    };
    const Slope named[] = {
        Slope::quadratic(-1, 1, 2, 5),  // golden ratio fractional part
        Slope::quadratic(0, 1, 3, 3),   // 1/sqrt(3)
        Slope::quadratic(-1, 1, 1, 2),  // sqrt(2) - 1
        Slope::quadratic(3, -1, 2, 5),  // 2 minus the golden ratio
    };
    for (const Slope& s : named) add(s);
    for (const Slope& s : named) add(s.complement());

    std::mt19937_64 rng(seed);
    int added = 0;
    while (added < random_count) {
        const std::size_t before = corpus.size();
        add(random_quadratic(rng));
        if (corpus.size() > before) ++added;
    }
    return corpus;
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    report.seed = options.seed;

    const std::vector<Slope> corpus = default_corpus(options.seed, options.random_slopes);
    for (const Slope& s : corpus) report.corpus.push_back(s.spec_string());

    std::vector<Bucket> buckets(corpus.size());
    detail::parallel_for(std::int64_t(0), static_cast<std::int64_t>(corpus.size()), options.jobs,
                         [&](std::int64_t i) {
                             check_slope(corpus[static_cast<std::size_t>(i)], options,
                                         buckets[static_cast<std::size_t>(i)]);
                         });

    Bucket tail;
    check_farey(options, tail);
    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    check_linear_algebra(options, rng, tail);
    check_permutations(options, rng, tail);
    if (options.anchors) check_anchors(tail);
    buckets.push_back(std::move(tail));

    std::map<std::string, std::int64_t> cases;
    std::set<std::string> failed;
    for (const Bucket& b : buckets) {
        for (const auto& [name, c] : b.cases) cases[name] += c;
        for (const VerifyFailure& f : b.failures) {
            failed.insert(f.invariant);
            if (report.failures.size() < 50) report.failures.push_back(f);
        }
    }
    for (const char* name : kCheckOrder) {
        const auto it = cases.find(name);
        if (it == cases.end()) continue;
        report.checks.push_back({name, it->second, failed.count(name) == 0});
    }
    return report;
}

std::string report_text(const VerifyReport& report) {
    std::string out = "seed: " + std::to_string(report.seed) + "\n";
    out += "corpus (" + std::to_string(report.corpus.size()) + "):";
    for (const std::string& s : report.corpus) out += " " + s;
    out += "\n";
    std::int64_t total_cases = 0;
    for (const CheckResult& c : report.checks) {
        out += c.name;
        out += c.passed ? ": PASS (" : ": FAIL (";
        out += std::to_string(c.cases) + " cases)\n";
        total_cases += c.cases;
    }
    if (!report.failures.empty()) {
        out += "counterexamples:\n";
        for (const VerifyFailure& f : report.failures) {
            out += "  [" + f.invariant + "] slope=" + f.slope +
                   " index=" + std::to_string(f.index) + " expected=" + f.expected +
                   " actual=" + f.actual + "\n";
        }
    }
    out += std::string("result: ") + (report.ok() ? "PASS" : "FAIL") + " (" +
           std::to_string(report.checks.size()) + " checks, " + std::to_string(total_cases) +
           " cases, " + std::to_string(report.failures.size()) + " failures)\n";
    return out;
}

std::string report_json(const VerifyReport& report) {
    nlohmann::ordered_json out;
    out["seed"] = report.seed;
    out["corpus"] = report.corpus;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back({{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}});
    out["checks"] = checks;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const VerifyFailure& f : report.failures)
        failures.push_back({{"invariant", f.invariant},
                            {"slope", f.slope},
                            {"index", f.index},
                            {"expected", f.expected},
                            {"actual", f.actual}});
    out["failures"] = failures;
    out["ok"] = report.ok();
    return out.dump();
}

std::string report_csv(const VerifyReport& report) {
    std::string out = "check,cases,passed\n";
    for (const CheckResult& c : report.checks)
        out += c.name + "," + std::to_string(c.cases) + "," + (c.passed ? "1" : "0") + "\n";
    return out;
}

}  // namespace sturmian
