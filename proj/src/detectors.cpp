#include "addiword/detectors.hpp"

#include <algorithm>
#include <limits>

#include "addiword/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace addiword {

namespace {

inline int tid() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

std::vector<Letter> block_sums_at(const PrefixSums& ps, std::size_t start, std::size_t half_len,
                                  int order) {
    std::vector<Letter> sums;
    sums.reserve(static_cast<std::size_t>(order));
    for (int b = 0; b < order; ++b)
        sums.push_back(factor_sum(ps, Factor{start + static_cast<std::size_t>(b) * half_len, half_len}));
    return sums;
}

PowerLocation make_location(const PrefixSums& ps, std::size_t start, std::size_t half_len,
                            int order) {
    return PowerLocation{start, half_len, order, block_sums_at(ps, start, half_len, order)};
}

// Scans ends in [e_lo, e_hi); returns the (end, half_len)-minimal hit.
std::optional<PowerLocation> additive_scan_range(const PrefixSums& ps, int order,
                                                 std::size_t min_half_len, std::size_t e_lo,
                                                 std::size_t e_hi) {
    const std::size_t p = static_cast<std::size_t>(order);
    for (std::size_t e = e_lo; e < e_hi; ++e) {
        if (e < p * min_half_len) continue;
        for (std::size_t half = min_half_len; p * half <= e; ++half) {
            const std::size_t start = e - p * half;
            if (is_additive_power_at(ps, start, half, order))
                return make_location(ps, start, half, order);
        }
    }
    return std::nullopt;
}

// One abelian-square probe line: for a fixed start, the shortest half length
// in [min_half_len, max] making the two windows permutations of one another.
// Runs in O(n - start) via an incremental count-difference vector.
std::optional<std::size_t> abelian_scan_start(const std::vector<std::size_t>& sym,
                                              std::size_t n, std::size_t start,
                                              std::size_t min_half_len,
                                              std::vector<std::int64_t>& delta) {
    if (start + 2 * min_half_len > n) return std::nullopt;
    std::fill(delta.begin(), delta.end(), 0);
    std::size_t nonzero = 0;
    auto apply = [&](std::size_t s, std::int64_t d) {
        const std::int64_t before = delta[s];
        const std::int64_t after = before + d;
        delta[s] = after;
        nonzero += static_cast<std::size_t>(after != 0) - static_cast<std::size_t>(before != 0);
    };
    apply(sym[start], -1);
    apply(sym[start + 1], +1);
    for (std::size_t half = 1; start + 2 * half <= n; ++half) {
        if (half >= min_half_len && nonzero == 0) return half;
        if (start + 2 * half + 2 > n) break;
        apply(sym[start + half], -2);
        apply(sym[start + 2 * half], +1);
        apply(sym[start + 2 * half + 1], +1);
    }
    return std::nullopt;
}

struct StartHit {
    std::size_t start = std::numeric_limits<std::size_t>::max();
    std::size_t half = std::numeric_limits<std::size_t>::max();
    bool found = false;

    bool better_than(const StartHit& o) const {
        if (!o.found) return found;
        if (!found) return false;
        if (start != o.start) return start < o.start;
        return half < o.half;
    }
};

std::vector<std::size_t> symbol_indices(const Word& w, const Alphabet& alpha) {
    std::vector<std::size_t> sym;
    sym.reserve(w.size());
    for (Letter x : w.letters) sym.push_back(alpha.index_of(x));
    return sym;
}

}  // namespace

bool is_additive_power_at(const PrefixSums& ps, std::size_t start, std::size_t half_len,
                          int order) {
    if (order < 2 || half_len == 0) return false;
    const std::size_t p = static_cast<std::size_t>(order);
    if (start + p * half_len > ps.word_length()) return false;
    const auto& s = ps.sums();
    const Int128 first = static_cast<Int128>(s[start + half_len]) - s[start];
    for (std::size_t b = 1; b < p; ++b) {
        const Int128 sum =
            static_cast<Int128>(s[start + (b + 1) * half_len]) - s[start + b * half_len];
        if (sum != first) return false;
    }
    return true;
}

bool is_abelian_square_at(const Word& w, std::size_t start, std::size_t half_len) {
    if (half_len == 0 || start + 2 * half_len > w.size()) return false;
    std::vector<Letter> a(w.letters.begin() + static_cast<std::ptrdiff_t>(start),
                          w.letters.begin() + static_cast<std::ptrdiff_t>(start + half_len));
    std::vector<Letter> b(w.letters.begin() + static_cast<std::ptrdiff_t>(start + half_len),
                          w.letters.begin() + static_cast<std::ptrdiff_t>(start + 2 * half_len));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

namespace serial {

std::optional<PowerLocation> find_additive_power(const Word& w, int order,
                                                 std::size_t min_half_len) {
    if (order < 2) throw DomainError("power order must be at least 2");
    if (min_half_len == 0) throw DomainError("min_half_len must be positive");
    const PrefixSums ps(w);
    return additive_scan_range(ps, order, min_half_len, 0, w.size() + 1);
}

std::optional<PowerLocation> find_abelian_square(const Word& w, std::size_t min_half_len) {
    if (min_half_len == 0) throw DomainError("min_half_len must be positive");
    const std::size_t n = w.size();
    if (n < 2 * min_half_len) return std::nullopt;
    const Alphabet alpha = w.effective_alphabet();
    const auto sym = symbol_indices(w, alpha);
    std::vector<std::int64_t> delta(alpha.size());
    for (std::size_t start = 0; start + 2 * min_half_len <= n; ++start) {
        if (auto half = abelian_scan_start(sym, n, start, min_half_len, delta)) {
            const PrefixSums ps(w);
            return make_location(ps, start, *half, 2);
        }
    }
    return std::nullopt;
}

DiscrepancyReport min_discrepancy_scan(const Word& w, std::size_t half_len) {
    if (half_len == 0 || 2 * half_len > w.size()) throw RangeError("window does not fit the word");
    const PrefixSums ps(w);
    const auto& s = ps.sums();
    std::size_t best_start = 0;
    Int128 best = 0;
    bool have = false;
    for (std::size_t start = 0; start + 2 * half_len <= w.size(); ++start) {
        const Int128 d = int128_abs((static_cast<Int128>(s[start + 2 * half_len]) - s[start + half_len]) -
                                    (static_cast<Int128>(s[start + half_len]) - s[start]));
        if (!have || d < best) {
            have = true;
            best = d;
            best_start = start;
        }
    }
    return DiscrepancyReport{Factor{best_start, half_len}, Factor{best_start + half_len, half_len},
                             checked_i64(best)};
}

}  // namespace serial

std::optional<PowerLocation> find_additive_power(const Word& w, int order,
                                                 std::size_t min_half_len) {
    if (order < 2) throw DomainError("power order must be at least 2");
    if (min_half_len == 0) throw DomainError("min_half_len must be positive");
    const PrefixSums ps(w);
    const std::size_t n = w.size();
    const std::size_t p = static_cast<std::size_t>(order);
    if (n < p * min_half_len) return std::nullopt;

    const int nt = thread_count();
    constexpr std::size_t kWave = 1024;
    for (std::size_t wave_lo = p * min_half_len; wave_lo <= n; wave_lo += kWave) {
        const std::size_t wave_hi = std::min(n + 1, wave_lo + kWave);
        struct Hit {
            std::size_t e = std::numeric_limits<std::size_t>::max();
            std::size_t half = std::numeric_limits<std::size_t>::max();
        };
        std::vector<Hit> local(static_cast<std::size_t>(nt));
#pragma omp parallel for num_threads(nt) schedule(dynamic, 16)
        for (std::size_t e = wave_lo; e < wave_hi; ++e) {
            Hit& h = local[static_cast<std::size_t>(tid())];
            if (e >= h.e) continue;  // a smaller end already found by this thread
            for (std::size_t half = min_half_len; p * half <= e; ++half) {
                if (is_additive_power_at(ps, e - p * half, half, order)) {
                    h = Hit{e, half};
                    break;
                }
            }
        }
        Hit best;
        for (const Hit& h : local) {
            if (h.e < best.e || (h.e == best.e && h.half < best.half)) best = h;
        }
        if (best.e != std::numeric_limits<std::size_t>::max())
            return make_location(ps, best.e - p * best.half, best.half, order);
    }
    return std::nullopt;
}

std::optional<PowerLocation> find_abelian_square(const Word& w, std::size_t min_half_len) {
    if (min_half_len == 0) throw DomainError("min_half_len must be positive");
    const std::size_t n = w.size();
    if (n < 2 * min_half_len) return std::nullopt;
    const Alphabet alpha = w.effective_alphabet();
    const auto sym = symbol_indices(w, alpha);
    const std::size_t t = alpha.size();
    const std::size_t last_start = n - 2 * min_half_len;

    const int nt = thread_count();
    constexpr std::size_t kWave = 256;
    for (std::size_t wave_lo = 0; wave_lo <= last_start; wave_lo += kWave) {
        const std::size_t wave_hi = std::min(last_start + 1, wave_lo + kWave);
        std::vector<StartHit> local(static_cast<std::size_t>(nt));
#pragma omp parallel num_threads(nt)
        {
            std::vector<std::int64_t> delta(t);
            StartHit& mine = local[static_cast<std::size_t>(tid())];
#pragma omp for schedule(dynamic, 8)
            for (std::size_t start = wave_lo; start < wave_hi; ++start) {
                if (mine.found && start >= mine.start) continue;
                if (auto half = abelian_scan_start(sym, n, start, min_half_len, delta)) {
                    mine = StartHit{start, *half, true};
                }
            }
        }
        StartHit best;
        for (const StartHit& h : local)
            if (h.better_than(best)) best = h;
        if (best.found) {
            const PrefixSums ps(w);
            return make_location(ps, best.start, best.half, 2);
        }
    }
    return std::nullopt;
}

DiscrepancyReport min_discrepancy_scan(const Word& w, std::size_t half_len) {
    if (half_len == 0 || 2 * half_len > w.size()) throw RangeError("window does not fit the word");
    const PrefixSums ps(w);
    const auto& s = ps.sums();
    const std::size_t starts = w.size() - 2 * half_len + 1;

    const int nt = thread_count();
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    Int128 best_d = 0;
    std::size_t best_start = kUnset;
#pragma omp parallel num_threads(nt)
    {
        // Register-local minimum per thread; one merge at the end. The
        // (d, start) order is total, so the merged result is unique no
        // matter how threads interleave.
        Int128 my_d = 0;
        std::size_t my_start = kUnset;
#pragma omp for schedule(static) nowait
        for (std::size_t start = 0; start < starts; ++start) {
            const Int128 d =
                int128_abs((static_cast<Int128>(s[start + 2 * half_len]) - s[start + half_len]) -
                           (static_cast<Int128>(s[start + half_len]) - s[start]));
            if (my_start == kUnset || d < my_d || (d == my_d && start < my_start)) {
                my_d = d;
                my_start = start;
            }
        }
#pragma omp critical
        {
            if (my_start != kUnset &&
                (best_start == kUnset || my_d < best_d ||
                 (my_d == best_d && my_start < best_start))) {
                best_d = my_d;
                best_start = my_start;
            }
        }
    }
    return DiscrepancyReport{Factor{best_start, half_len},
                             Factor{best_start + half_len, half_len}, checked_i64(best_d)};
}

}  // namespace addiword
