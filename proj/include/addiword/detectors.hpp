#pragma once

#include <optional>
#include <vector>

#include "addiword/word.hpp"

namespace addiword {

// A factor B1...Bp of equal-length blocks starting at `start`, each block
// `half_len` letters long. For additive powers all block sums are equal.
struct PowerLocation {
    std::size_t start = 0;
    std::size_t half_len = 0;
    int order = 2;
    std::vector<Letter> block_sums;

    std::size_t end() const noexcept { return start + half_len * static_cast<std::size_t>(order); }
};

// Adjacent equal-length windows u, v and |sum(u) - sum(v)|.
struct DiscrepancyReport {
    Factor u;
    Factor v;
    Letter discrepancy = 0;
};

// Predicates used by the scanners, the search engine, and the test oracles.
bool is_additive_power_at(const PrefixSums& ps, std::size_t start, std::size_t half_len,
                          int order);
bool is_abelian_square_at(const Word& w, std::size_t start, std::size_t half_len);

// Smallest end index first, ties by smallest half_len. Every block at least
// min_half_len letters. Absence is a normal return.
std::optional<PowerLocation> find_additive_power(const Word& w, int order,
                                                 std::size_t min_half_len = 1);

// Leftmost start first, ties by smallest half_len.
std::optional<PowerLocation> find_abelian_square(const Word& w, std::size_t min_half_len = 1);

// Among all adjacent pairs with |u| = |v| = half_len, minimal |sum(u)-sum(v)|,
// ties by smallest start. Throws RangeError when 2*half_len > |w|.
DiscrepancyReport min_discrepancy_scan(const Word& w, std::size_t half_len);

// Straight-line reference implementations. The default entry points above
// run OpenMP kernels that must return bit-identical results; tests and the
// benchmark compare the two.
namespace serial {
std::optional<PowerLocation> find_additive_power(const Word& w, int order,
                                                 std::size_t min_half_len = 1);
std::optional<PowerLocation> find_abelian_square(const Word& w, std::size_t min_half_len = 1);
DiscrepancyReport min_discrepancy_scan(const Word& w, std::size_t half_len);
}  // namespace serial

}  // namespace addiword
