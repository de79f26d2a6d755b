// Acceptance suite: one self-contained check per criterion, each printing a
// single PASS/FAIL line with its elapsed time. Run with a list of criterion
// numbers, or no arguments for all of them. Exit code is the number of
// failures.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "addiword/collinear.hpp"
#include "addiword/detectors.hpp"
#include "addiword/ejs.hpp"
#include "addiword/search.hpp"
#include "addiword/word.hpp"

using namespace addiword;

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<Letter>> random_words(std::uint64_t seed, std::size_t count,
                                              std::size_t len,
                                              const std::vector<Letter>& symbols) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Letter>> words(count);
    for (auto& w : words) {
        w.reserve(len);
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(symbols[static_cast<std::size_t>(rng() % symbols.size())]);
    }
    return words;
}

Letter direct_sum(const std::vector<Letter>& w, std::size_t start, std::size_t len) {
    Letter s = 0;
    for (std::size_t i = 0; i < len; ++i) s += w[start + i];
    return s;
}

// ---- criterion 1: the worked example ---------------------------------------

bool criterion1(std::string& detail) {
    const Word w({2, 1, 3, 5, 1, 2, 6});
    const auto loc = find_additive_power(w, 2, 1);
    if (!loc || loc->start != 1 || loc->half_len != 3 ||
        loc->block_sums != std::vector<Letter>{9, 9}) {
        detail = "expected halves 1 3 5 / 1 2 6 with sums 9/9";
        return false;
    }
    detail = "halves at 2-4 / 5-7, sums 9/9";
    return true;
}

// ---- criteria 2 and 3: the near-square bound -------------------------------

bool near_square_bound(const std::vector<Letter>& symbols, Letter expected_bound,
                       std::uint64_t seed, std::string& detail) {
    const Alphabet alpha(symbols);
    if (compute_bound(alpha) != expected_bound) {
        detail = "bound constant mismatch";
        return false;
    }
    const auto words = random_words(seed, 1000, 500, symbols);
    std::atomic<int> failures{0};
    Letter max_seen = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : max_seen)
    for (std::size_t i = 0; i < words.size(); ++i) {
        try {
            const Word w(words[i], alpha);
            const auto r = near_additive_square(w, 5);
            const auto& sq = r.square;
            const Letter su = direct_sum(words[i], sq.u.start, sq.u.len);
            const Letter sv = direct_sum(words[i], sq.v.start, sq.v.len);
            const Letter direct = std::abs(su - sv);
            bool ok = sq.u.len == sq.v.len && sq.u.len >= 5 &&
                      sq.u.start + sq.u.len == sq.v.start && direct == sq.discrepancy &&
                      sq.discrepancy <= expected_bound;
            // Shift cancellation: the same windows on the shifted letters.
            const auto [shifted, offset] = shift_to_positive(Word(words[i]));
            const Letter shifted_gap =
                std::abs(direct_sum(shifted.letters, sq.u.start, sq.u.len) -
                         direct_sum(shifted.letters, sq.v.start, sq.v.len));
            ok = ok && shifted_gap == sq.discrepancy && sq.shift_offset == offset;
            if (!ok) ++failures;
            max_seen = std::max(max_seen, sq.discrepancy);
        } catch (...) {
            ++failures;
        }
    }
    std::ostringstream os;
    os << words.size() << " words, every |sum(u)-sum(v)| <= " << expected_bound
       << " (max seen " << max_seen << ")";
    detail = os.str();
    return failures == 0;
}

bool criterion2(std::string& detail) {
    return near_square_bound({1, 2, 3, 4, 5, 6}, 12, 0xC2, detail);
}

bool criterion3(std::string& detail) { return near_square_bound({-2, 0, 3}, 12, 0xC3, detail); }

// ---- criterion 4: abelian squares in random binary words -------------------

bool criterion4(std::string& detail) {
    std::mt19937_64 rng(0xC4);
    std::vector<std::vector<std::uint8_t>> words(1000);
    for (auto& bits : words) {
        bits.resize(2000);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
    }
    std::atomic<int> misses{0};
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto sq = find_binary_abelian_square(words[i], 50);
        if (!sq || sq->half_len < 50) ++misses;
    }
    detail = "1000 binary words of length 2000, abelian square with half >= 50 in each";
    return misses == 0;
}

// ---- criterion 5: equal-average factorizations ------------------------------

bool criterion5(std::string& detail) {
    const std::vector<Letter> symbols{1, 2, 3};
    const auto words = random_words(0xC5, 100, 2000, symbols);
    std::atomic<int> failures{0};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word w(words[i]);
        const auto fz = equal_average_factorization(w, 4);
        if (!fz || fz->factors.size() != 4) {
            ++failures;
            continue;
        }
        bool ok = true;
        std::size_t cursor = fz->factors.front().start;
        for (const Factor& f : fz->factors) {
            ok = ok && f.start == cursor && f.len >= 1;
            cursor = f.start + f.len;
            const Rational avg(direct_sum(words[i], f.start, f.len),
                               static_cast<Int128>(f.len));
            ok = ok && avg == fz->common_average;
        }
        if (!ok) ++failures;
    }
    detail = "100 words of length 2000 over {1,2,3}, k = 4, all averages exactly equal";
    return failures == 0;
}

// ---- criterion 6: g values against generate-and-filter ---------------------

bool naive_avoids_additive_square(const std::vector<Letter>& w) {
    for (std::size_t start = 0; start < w.size(); ++start)
        for (std::size_t half = 1; start + 2 * half <= w.size(); ++half)
            if (direct_sum(w, start, half) == direct_sum(w, start + half, half)) return false;
    return true;
}

void enumerate_filter(const std::vector<Letter>& symbols, std::size_t max_len,
                      std::vector<Letter>& w, std::vector<std::uint64_t>& counts,
                      std::size_t& longest, std::vector<Letter>& witness) {
    if (w.size() == max_len) return;
    for (Letter a : symbols) {
        w.push_back(a);
        if (naive_avoids_additive_square(w)) {
            counts[w.size()] += 1;
            if (w.size() > longest) {
                longest = w.size();
                witness = w;
            }
            enumerate_filter(symbols, max_len, w, counts, longest, witness);
        }
        w.pop_back();
    }
}

bool criterion6(std::string& detail) {
    SearchConfig two;
    two.alphabet = Alphabet({1, 2});
    two.depth_budget = 20;
    const auto r2 = longest_avoiding(two);
    bool ok = r2.verdict == Verdict::exhausted && r2.length == 3 &&
              r2.witness == std::vector<Letter>{1, 2, 1} && count_avoiding(two, 3) == 2 &&
              count_avoiding(two, 4) == 0;

    // Independent generate-and-filter confirmation for both alphabets.
    for (const auto& symbols : {std::vector<Letter>{1, 2}, std::vector<Letter>{1, 2, 3}}) {
        std::vector<std::uint64_t> counts(15, 0);
        std::vector<Letter> scratch, witness;
        std::size_t longest = 0;
        enumerate_filter(symbols, 14, scratch, counts, longest, witness);
        SearchConfig cfg;
        cfg.alphabet = Alphabet(symbols);
        cfg.depth_budget = 14;
        const auto res = longest_avoiding(cfg);
        ok = ok && res.verdict == Verdict::exhausted && res.length == longest &&
             res.witness == witness;
        for (std::size_t n = 1; n <= 14; ++n) ok = ok && count_avoiding(cfg, n) == counts[n];
        // g over {1,2,3} was pinned at 7 (witness 1 2 1 3 1 2 1) when first
        // computed; the enumeration above re-derives it.
        if (symbols.size() == 3)
            ok = ok && res.length == 7 && res.witness == std::vector<Letter>{1, 2, 1, 3, 1, 2, 1};
    }
    detail = "g({1,2}) = 3 (witness 1 2 1), counts 2/0, g({1,2,3}) = 7, all vs enumeration";
    return ok;
}

// ---- criterion 7: sampled length-61 guarantee -------------------------------

bool criterion7(std::string& detail) {
    const auto words = random_words(0xC7, 10'000, 61, {1, 2, 3, 4});
    std::atomic<int> counterexamples{0};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (!find_additive_power(Word(words[i]), 2, 1)) ++counterexamples;
    }
    std::ostringstream os;
    os << "10^4 words of length 61 over {1,2,3,4} (1+4 = 2+3), " << counterexamples
       << " counterexamples";
    detail = os.str();
    return counterexamples == 0;
}

// ---- criterion 8: cube-free search outruns the depth budget ----------------

bool criterion8(std::string& detail) {
    SearchConfig cfg;
    cfg.alphabet = Alphabet({0, 1, 3, 4});
    cfg.pattern = Pattern::additive_cube;
    cfg.depth_budget = 200;
    cfg.node_budget = 100'000'000;
    const auto res = longest_avoiding(cfg);
    std::ostringstream os;
    os << "verdict " << (res.verdict == Verdict::exhausted ? "exhausted" : "budget-exceeded")
       << ", depth " << res.length << ", " << res.nodes_visited << " nodes";
    detail = os.str();
    return res.verdict == Verdict::budget_exceeded && res.length == 200 &&
           res.nodes_visited <= cfg.node_budget;
}

// ---- criterion 9: oracle suites ---------------------------------------------

bool same_location(const std::optional<PowerLocation>& a, const std::optional<PowerLocation>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->start == b->start && a->half_len == b->half_len && a->block_sums == b->block_sums;
}

std::optional<PowerLocation> cubic_additive_square(const std::vector<Letter>& w) {
    for (std::size_t e = 2; e <= w.size(); ++e) {
        for (std::size_t half = 1; 2 * half <= e; ++half) {
            const std::size_t start = e - 2 * half;
            if (direct_sum(w, start, half) == direct_sum(w, start + half, half))
                return PowerLocation{start, half, 2,
                                     {direct_sum(w, start, half), direct_sum(w, start + half, half)}};
        }
    }
    return std::nullopt;
}

bool criterion9(std::string& detail) {
    std::atomic<int> mismatches{0};

    // Every word of length <= 12 over {1,2}.
    for (std::size_t len = 0; len <= 12; ++len) {
        const std::size_t total = static_cast<std::size_t>(1) << len;
#pragma omp parallel for schedule(dynamic, 256)
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<Letter> w(len);
            for (std::size_t i = 0; i < len; ++i) w[i] = ((code >> i) & 1u) ? 2 : 1;
            if (!same_location(find_additive_power(Word(w), 2, 1), cubic_additive_square(w)))
                ++mismatches;
        }
    }

    const auto words = random_words(0xC9, 1000, 60, {1, 2, 3, 4, 5});
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (!same_location(find_additive_power(Word(words[i]), 2, 1),
                           cubic_additive_square(words[i])))
            ++mismatches;
    }

    // Double-AP finder against the cubic triple scan.
    std::mt19937_64 rng(0xC9A);
    for (int round = 0; round < 100; ++round) {
        std::vector<Letter> xs;
        Letter v = 0;
        for (int i = 0; i < 300; ++i) {
            v += 1 + static_cast<Letter>(rng() % 9);
            xs.push_back(v);
        }
        std::optional<DoubleApTriple> want;
        for (std::size_t k = 0; k < xs.size() && !want; ++k)
            for (std::size_t j = 0; j < k && !want; ++j)
                for (std::size_t i = 0; i < j && !want; ++i)
                    if (j - i == k - j && xs[j] - xs[i] == xs[k] - xs[j])
                        want = DoubleApTriple{i, j, k, xs[i], xs[j], xs[k]};
        const auto got = find_double_ap(xs);
        const bool same = got.has_value() == want.has_value() &&
                          (!got || (got->i == want->i && got->j == want->j && got->k == want->k));
        if (!same) ++mismatches;
    }

    std::ostringstream os;
    os << "detector and double-AP oracles, " << mismatches << " mismatches";
    detail = os.str();
    return mismatches == 0;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<bool(std::string&)> check;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "worked example detection", 1.0, criterion1},
        {2, "near-square bound on {1..6}", 30.0, criterion2},
        {3, "near-square bound on {-2,0,3} with shift cancellation", 30.0, criterion3},
        {4, "abelian squares in random binary words", 60.0, criterion4},
        {5, "equal-average factorizations, k = 4", 60.0, criterion5},
        {6, "g values vs generate-and-filter", 1.0, criterion6},
        {7, "length-61 sampling over {1,2,3,4}", 60.0, criterion7},
        {8, "cube-free search hits depth 200", 300.0, criterion8},
        {9, "oracle agreement suites", 120.0, criterion9},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria()) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
            continue;
        std::string detail;
        const auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0).count();
        const bool in_budget = secs < c.budget_seconds;
        const bool pass = ok && in_budget;
        std::printf("criterion %d: %s (%.2fs of %.0fs) - %s%s\n", c.id,
                    pass ? "PASS" : "FAIL", secs, c.budget_seconds, c.title,
                    detail.empty() ? "" : ("; " + detail).c_str());
        if (!in_budget && ok) std::printf("criterion %d: over time budget\n", c.id);
        if (!pass) ++failures;
    }
    return failures;
}
