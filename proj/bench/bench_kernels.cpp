// Times each OpenMP kernel against its serial reference on a fixed set of
// full-scan workloads and checks that both return the same answer. Set
// ADDIWORD_THREADS to vary the worker count.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "addiword/collinear.hpp"
#include "addiword/detectors.hpp"
#include "addiword/ejs.hpp"
#include "addiword/parallel.hpp"
#include "addiword/search.hpp"
#include "addiword/word.hpp"

using namespace addiword;

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_ms(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() -
                                                                                 t0)
        .count();
}

void report(const std::string& name, std::size_t n, double serial_ms, double parallel_ms,
            bool same) {
    std::printf("%-38s n=%-9zu serial %9.2f ms   omp %9.2f ms   speedup %5.2fx   %s\n",
                name.c_str(), n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, same ? "match" : "MISMATCH");
}

Word random_word(std::uint64_t seed, std::size_t len, const std::vector<Letter>& symbols) {
    std::mt19937_64 rng(seed);
    std::vector<Letter> w(len);
    for (auto& x : w) x = symbols[static_cast<std::size_t>(rng() % symbols.size())];
    return Word(std::move(w));
}

// A long additive-cube-free word, grown by the search engine itself; the
// cube detector then has to scan it fully.
Word cube_free_word(std::size_t len) {
    SearchConfig cfg;
    cfg.alphabet = Alphabet({0, 1, 3, 4});
    cfg.pattern = Pattern::additive_cube;
    cfg.depth_budget = len;
    cfg.node_budget = 10'000'000;
    const auto res = serial::longest_avoiding(cfg);
    return Word(res.witness);
}

// Encoding of 1 2 3 ... m: half sums grow quadratically along the word, so
// large abelian squares cannot occur and the scan runs to completion.
std::vector<std::uint8_t> ascending_runs(Letter m) {
    std::vector<Letter> letters;
    for (Letter x = 1; x <= m; ++x) letters.push_back(x);
    return ejs_encode(Word(std::move(letters))).bits;
}

}  // namespace

int main() {
    std::printf("workers: %d\n\n", thread_count());

    {
        const Word w = cube_free_word(4000);
        std::optional<PowerLocation> a, b;
        const double ts = time_ms([&] { a = serial::find_additive_power(w, 3, 1); });
        const double tp = time_ms([&] { b = find_additive_power(w, 3, 1); });
        report("additive cube scan (absent)", w.size(), ts, tp, a == std::nullopt && b == std::nullopt);
    }

    {
        const Word w = random_word(11, 6000, {1, 2, 3, 4});
        std::optional<PowerLocation> a, b;
        const double ts = time_ms([&] { a = serial::find_abelian_square(w, 1200); });
        const double tp = time_ms([&] { b = find_abelian_square(w, 1200); });
        const bool same = a.has_value() == b.has_value() &&
                          (!a || (a->start == b->start && a->half_len == b->half_len));
        report("abelian square scan, half >= 1200", w.size(), ts, tp, same);
    }

    {
        const auto bits = ascending_runs(200);
        std::optional<BinarySquare> a, b;
        const double ts = time_ms([&] { a = serial::find_binary_abelian_square(bits, 2000); });
        const double tp = time_ms([&] { b = find_binary_abelian_square(bits, 2000); });
        report("binary abelian scan (absent)", bits.size(), ts, tp, a == b);
    }

    {
        const Word w = random_word(12, 1'000'000, {1, 2, 3, 4, 5, 6});
        Letter sum_serial = 0, sum_parallel = 0;
        const double ts = time_ms([&] {
            for (std::size_t half = 1; half <= 200; ++half)
                sum_serial += serial::min_discrepancy_scan(w, half).discrepancy;
        });
        const double tp = time_ms([&] {
            for (std::size_t half = 1; half <= 200; ++half)
                sum_parallel += min_discrepancy_scan(w, half).discrepancy;
        });
        report("min discrepancy sweep, half 1..200", w.size(), ts, tp,
               sum_serial == sum_parallel);
    }

    {
        const auto pts = lattice_path(random_word(13, 3000, {1, 2, 3}));
        std::optional<std::vector<std::size_t>> a, b;
        const double ts = time_ms([&] { a = serial::find_collinear(pts, 12); });
        const double tp = time_ms([&] { b = find_collinear(pts, 12); });
        report("collinear selection, m = 12", pts.size(), ts, tp, a == b);
    }

    {
        SearchConfig cfg;
        cfg.alphabet = Alphabet({1, 2, 3, 4});
        cfg.pattern = Pattern::additive_square;
        cfg.depth_budget = 100;
        cfg.node_budget = 1'000'000'000;
        SearchResult a, b;
        const double ts = time_ms([&] { a = serial::longest_avoiding(cfg); });
        const double tp = time_ms([&] { b = longest_avoiding(cfg); });
        const bool same = a.verdict == b.verdict && a.length == b.length &&
                          a.witness == b.witness && a.nodes_visited == b.nodes_visited;
        report("exhaustive search g(1,2,3,4)", static_cast<std::size_t>(a.nodes_visited), ts, tp,
               same);
    }

    return 0;
}
