// Acceptance gate: eight go/no-go criteria for the library, each reported as
// a single PASS/FAIL line with its case count and wall time. Any failure
// prints counterexamples (slope spec, index, expected, actual) and the
// process exits nonzero.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "sturmian/bseq.hpp"
#include "sturmian/factor.hpp"
#include "sturmian/farey.hpp"
#include "sturmian/gram.hpp"
#include "sturmian/reference.hpp"
#include "sturmian/slope.hpp"
#include "sturmian/verify.hpp"

using namespace sturmian;

namespace {

constexpr std::uint64_t kSeed = 12345;

struct Outcome {
    bool pass = true;
    long long cases = 0;
    std::vector<std::string> notes;

    void fail(std::string msg) {
        pass = false;
        if (notes.size() < 5) notes.push_back(std::move(msg));
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Definitional B table: B(k) = #{q in [1,k) : {q a} < {k a}}, floors hoisted.
std::vector<std::int64_t> b_table_direct(const Slope& s, std::int64_t k_max) {
    std::vector<std::int64_t> floors(static_cast<std::size_t>(k_max) + 1, 0);
    for (std::int64_t k = 1; k <= k_max; ++k)
        floors[static_cast<std::size_t>(k)] = s.floor_mul(k);
    std::vector<std::int64_t> b(static_cast<std::size_t>(k_max) + 1, 0);
    for (std::int64_t k = 2; k <= k_max; ++k) {
        std::int64_t count = 0;
        for (std::int64_t q = 1; q < k; ++q)
            if (s.frac_cmp_with_floors(q, k, floors[static_cast<std::size_t>(q)],
                                       floors[static_cast<std::size_t>(k)]) == Ordering::LT)
                ++count;
        b[static_cast<std::size_t>(k)] = count;
    }
    return b;
}

// Criterion 1: height_sum(F_n) has the parity of n, corpus-wide, n <= 300.
Outcome parity_over_corpus(const std::vector<Slope>& corpus) {
    Outcome out;
    for (const Slope& s : corpus)
        for (std::int64_t n = 1; n <= 300; ++n) {
            const std::int64_t hs = height_sum(factor_set(s, n));
            ++out.cases;
            if ((hs - n) % 2 != 0)
                out.fail("slope=" + s.spec_string() + " n=" + std::to_string(n) +
                         " height_sum=" + std::to_string(hs) + " parity != n");
        }
    return out;
}

// Criterion 2: height_sum(F_n) = B(n) + (n+1)*floor(n a) + 1 exactly, n <= 200.
Outcome height_sum_identity(const std::vector<Slope>& corpus) {
    Outcome out;
    for (const Slope& s : corpus)
        for (std::int64_t n = 1; n <= 200; ++n) {
            const std::int64_t enumerated = height_sum(factor_set(s, n));
            const std::int64_t closed = height_sum_formula(s, n);
            ++out.cases;
            if (enumerated != closed)
                out.fail("slope=" + s.spec_string() + " n=" + std::to_string(n) + " expected=" +
                         std::to_string(closed) + " actual=" + std::to_string(enumerated));
        }
    return out;
}

// Criterion 3: (a) B_a(k) + B_{1-a}(k) = k-1 for k <= 1000; (b) the three-case
// recurrence reproduces the definitional count at every k, seeds included.
Outcome b_sequence_consistency(const std::vector<Slope>& corpus) {
    Outcome out;
    const std::int64_t k_max = 1000;
    for (const Slope& s : corpus) {
        const auto table = b_table_direct(s, k_max);
        const auto co_table = b_table_direct(s.complement(), k_max);
        const bool below_half = s.floor_mul(2) == 0;
        for (std::int64_t k = 1; k <= k_max; ++k) {
            const std::int64_t b = table[static_cast<std::size_t>(k)];
            ++out.cases;
            if (b + co_table[static_cast<std::size_t>(k)] != k - 1)
                out.fail("complement: slope=" + s.spec_string() + " k=" + std::to_string(k) +
                         " expected=" + std::to_string(k - 1) + " actual=" +
                         std::to_string(b + co_table[static_cast<std::size_t>(k)]));
        }
        const auto records = b_recurrence(s, k_max);
        if (records.size() != static_cast<std::size_t>(k_max) ||
            records[0].value != 0 ||
            records[1].value != (below_half ? 1 : 0)) {
            out.fail("seeds: slope=" + s.spec_string() + " B(1)/B(2) wrong");
        }
        for (const BSeqRecord& r : records) {
            ++out.cases;
            if (r.value != table[static_cast<std::size_t>(r.k)])
                out.fail("recurrence: slope=" + s.spec_string() + " k=" + std::to_string(r.k) +
                         " expected=" + std::to_string(table[static_cast<std::size_t>(r.k)]) +
                         " actual=" + std::to_string(r.value));
        }
    }
    return out;
}

// Criterion 4: predicted parity matches the definitional count mod 2 for
// k <= 1000, with all four (k parity x slope side of 1/2) buckets populated.
Outcome parity_formula(const std::vector<Slope>& corpus) {
    Outcome out;
    long long bucket[2][2] = {{0, 0}, {0, 0}};
    for (const Slope& s : corpus) {
        const auto table = b_table_direct(s, 1000);
        const int side = s.floor_mul(2) == 0 ? 0 : 1;
        for (std::int64_t k = 1; k <= 1000; ++k) {
            ++out.cases;
            ++bucket[static_cast<int>(k % 2)][side];
            const int predicted = b_parity(s, k);
            const int actual = static_cast<int>(table[static_cast<std::size_t>(k)] % 2);
            if (predicted != actual)
                out.fail("slope=" + s.spec_string() + " k=" + std::to_string(k) + " expected=" +
                         std::to_string(actual) + " predicted=" + std::to_string(predicted));
        }
    }
    if (bucket[0][0] == 0 || bucket[0][1] == 0 || bucket[1][0] == 0 || bucket[1][1] == 0)
        out.fail("a (k parity x slope side) combination was never exercised");
    return out;
}

// Criterion 5: the published sweep anchors, then the full 200-point sweep
// within the time budget.
Outcome sweep_anchors(double* sweep_seconds) {
    Outcome out;
    const Slope golden = Slope::parse("golden");
    const auto values = m_sweep(golden, 70);
    out.cases = static_cast<long long>(values.size());
    if (values[54] != std::pair<std::int64_t, std::int64_t>{55, 13} ||
        values[64] != std::pair<std::int64_t, std::int64_t>{65, 0}) {
        out.fail("anchor mismatch: expected m(55)=13 and m(65)=0, got m(55)=" +
                 std::to_string(values[54].second) + ", m(65)=" +
                 std::to_string(values[64].second) +
                 " — re-examine the mod-1 reduction of the golden slope "
                 "(2/(sqrt(5)-1) and (sqrt(5)-1)/2 name the same number mod 1)");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto full = m_sweep(golden, 200);
    *sweep_seconds = seconds_since(start);
    out.cases += static_cast<long long>(full.size());
    if (full.size() != 200)
        out.fail("full sweep returned " + std::to_string(full.size()) + " rows");
    else if (full[54].second != values[54].second || full[64].second != values[64].second)
        out.fail("full sweep disagrees with the 70-point sweep at an anchor");
    if (*sweep_seconds > 600.0)
        out.fail("full sweep took " + std::to_string(*sweep_seconds) + "s (budget 600s)");
    return out;
}

// Criterion 6: structural facts about F_n, plus agreement with the
// sliding-window construction.
Outcome structural_invariants(const std::vector<Slope>& corpus) {
    Outcome out;
    for (const Slope& s : corpus) {
        for (std::int64_t n = 1; n <= 101; ++n) {
            const FactorSet set = factor_set(s, n);
            ++out.cases;
            if (static_cast<std::int64_t>(set.factors.size()) != n + 1) {
                out.fail("size: slope=" + s.spec_string() + " n=" + std::to_string(n) +
                         " expected=" + std::to_string(n + 1) + " actual=" +
                         std::to_string(set.factors.size()));
                continue;
            }
            for (const Factor& w : set.factors)
                if (!set.contains(w.reversed()))
                    out.fail("reversal: slope=" + s.spec_string() + " n=" + std::to_string(n) +
                             " factor=" + w.to_string());
            const auto pals = palindromes(set);
            if (n % 2 == 1 && pals.size() != 2)
                out.fail("palindromes: slope=" + s.spec_string() + " n=" + std::to_string(n) +
                         " expected=2 actual=" + std::to_string(pals.size()));
            if (n % 2 == 0)
                for (const Factor& w : pals)
                    if (w.height() % 2 != 0)
                        out.fail("palindrome height: slope=" + s.spec_string() +
                                 " n=" + std::to_string(n) + " factor=" + w.to_string());
            if (n <= 50 && !set.same_factors(factor_set_window(s, n)))
                out.fail("window: slope=" + s.spec_string() + " n=" + std::to_string(n) +
                         " construction and sliding window disagree");
        }
    }
    return out;
}

// Criterion 7: one distinct factor set per Farey interval.
Outcome farey_counts() {
    Outcome out;
    for (std::int64_t n = 1; n <= 20; ++n) {
        const std::int64_t distinct = distinct_factor_sets(n);
        const std::int64_t expected = reference::phi_sum(n);
        ++out.cases;
        if (distinct != expected)
            out.fail("n=" + std::to_string(n) + " expected=" + std::to_string(expected) +
                     " actual=" + std::to_string(distinct));
        if (n == 12 && distinct != 46)
            out.fail("n=12 expected the published value 46, actual=" + std::to_string(distinct));
    }
    return out;
}

// Criterion 8: elimination cross-checks — random matrices against rational
// elimination, and permutation invariance of the multiplicity.
Outcome elimination_oracles() {
    Outcome out;
    std::uint64_t state = kSeed ^ 0xa5a5a5a5a5a5a5a5ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t size = 1 + static_cast<std::int64_t>(next() % 8);
        IntMatrix m = IntMatrix::zero(size);
        for (std::int64_t i = 0; i < size * size; ++i)
            m.e[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(next() % 11) - 5;
        ++out.cases;
        const std::int64_t fast = nullity(m);
        const std::int64_t slow = reference::nullity_rational(m);
        if (fast != slow)
            out.fail("trial=" + std::to_string(trial) + " size=" + std::to_string(size) +
                     " expected=" + std::to_string(slow) + " actual=" + std::to_string(fast));
    }
    const FactorSet set = factor_set(Slope::parse("golden"), 30);
    const std::int64_t base = eigen_multiplicity(gram_matrix(set), 1);
    std::vector<Factor> perm = set.factors;
    for (int trial = 0; trial < 20; ++trial) {
        for (std::size_t i = perm.size() - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<std::size_t>(next() % (i + 1))]);
        ++out.cases;
        const std::int64_t got = eigen_multiplicity(gram_entries(perm), 1);
        if (got != base)
            out.fail("permutation trial=" + std::to_string(trial) + " expected=" +
                     std::to_string(base) + " actual=" + std::to_string(got));
    }
    return out;
}

int report(int id, const char* label, const Outcome& out, double elapsed) {
    std::printf("[%d/8] %-58s %s (%lld cases, %.1fs)\n", id, label, out.pass ? "PASS" : "FAIL",
                out.cases, elapsed);
    for (const std::string& note : out.notes) std::printf("      %s\n", note.c_str());
    std::fflush(stdout);
    return out.pass ? 0 : 1;
}

}  // namespace

int main() {
    const std::vector<Slope> corpus = default_corpus(kSeed, 10);
    std::printf("corpus: %zu slopes (seed %llu)\n", corpus.size(),
                static_cast<unsigned long long>(kSeed));

    int failures = 0;
    auto timed = [&failures](int id, const char* label, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome out = fn();
        failures += report(id, label, out, seconds_since(start));
    };

    timed(1, "height-sum parity equals n over the corpus, n <= 300",
          [&] { return parity_over_corpus(corpus); });
    timed(2, "height-sum closed form matches enumeration, n <= 200",
          [&] { return height_sum_identity(corpus); });
    timed(3, "B-sequence: complement identity and recurrence, k <= 1000",
          [&] { return b_sequence_consistency(corpus); });
    timed(4, "B-parity formula matches the count mod 2, k <= 1000",
          [&] { return parity_formula(corpus); });
    double sweep_seconds = 0.0;
    timed(5, "sweep anchors m(55)=13, m(65)=0; 200-point sweep in budget",
          [&] { return sweep_anchors(&sweep_seconds); });
    timed(6, "factor-set structure and sliding-window agreement",
          [&] { return structural_invariants(corpus); });
    timed(7, "distinct factor sets per Farey interval = phi sum, n <= 20",
          [] { return farey_counts(); });
    timed(8, "nullity oracle (100 matrices) and permutation invariance",
          [] { return elimination_oracles(); });

    if (failures == 0) {
        std::printf("acceptance: PASS (8/8 criteria)\n");
        return 0;
    }
    std::printf("acceptance: FAIL (%d of 8 criteria)\n", failures);
    return 1;
}
