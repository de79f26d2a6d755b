#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "addiword/word.hpp"

namespace addiword {

// Unary-with-separator encoding of a positive word: letter x contributes a
// run of x ones followed by a single zero, so w = x1 x2 ... xm becomes
// 1^x1 0 1^x2 0 ... 1^xm 0. The zero terminating letter i is the only bit
// that pins i's position, which is what lets a binary abelian square be
// pulled back to letter blocks.
struct BinaryWord {
    std::vector<std::uint8_t> bits;         // values 0/1
    std::vector<std::size_t> run_starts;    // per letter: index of its first 1 (== its 0 for x=0)
    std::vector<std::size_t> zero_pos;      // per letter: index of its terminating 0
    std::vector<std::int64_t> ones_prefix;  // ones in bits[0, i)

    std::size_t size() const noexcept { return bits.size(); }
    std::size_t letter_count() const noexcept { return zero_pos.size(); }
    std::int64_t ones_in(std::size_t lo, std::size_t hi) const {
        return ones_prefix[hi] - ones_prefix[lo];
    }
    std::int64_t zeros_in(std::size_t lo, std::size_t hi) const {
        return static_cast<std::int64_t>(hi - lo) - ones_in(lo, hi);
    }
    // Letter whose run is terminated by the first zero at or after `pos`.
    std::size_t letter_of_zero_at(std::size_t pos) const;
};

struct BinarySquare {
    std::size_t start = 0;
    std::size_t half_len = 0;

    friend bool operator==(const BinarySquare&, const BinarySquare&) = default;
};

// How a binary abelian square straddles letter runs: k zeros per half, and
// the split letters at the left edge, midpoint and right edge broken into
// alpha[0]+alpha[1], alpha[2]+alpha[3], alpha[4]+alpha[5] ones (outside/
// inside-left, inside-left/inside-right, inside/outside). The decoded pair
// satisfies |sum(u) - sum(v)| = |alpha[0] - 2*alpha[2] + alpha[4]|.
struct EjsAlignment {
    std::size_t k = 0;
    std::array<Letter, 6> alpha{};
    std::size_t first_block_start = 0;   // letter index of u
    std::size_t second_block_start = 0;  // letter index of v
};

// Adjacent equal-length blocks whose sums differ by at most bound_c.
struct NearSquare {
    Factor u;
    Factor v;
    Letter discrepancy = 0;
    Letter bound_c = 0;
    Letter shift_offset = 0;
};

struct NearSquareReport {
    NearSquare square;
    EjsAlignment alignment;
    BinarySquare binary;
};

// 2*max(S) for positive alphabets, else 2*(|min(S)| + 1 + max(S)).
Letter compute_bound(const Alphabet& s);

// Identity for all-positive words; otherwise translates every letter up by
// |min|+1 so the smallest becomes 1. Returns the shifted word and the offset.
std::pair<Word, Letter> shift_to_positive(const Word& w);

// Requires every letter >= 1 (DomainError otherwise).
BinaryWord ejs_encode(const Word& w);

// Leftmost start first, ties by smallest half length. A binary abelian
// square is just equal length plus equal ones-count. Works on any bit
// sequence, encoded or not.
std::optional<BinarySquare> find_binary_abelian_square(const std::vector<std::uint8_t>& bits,
                                                       std::size_t min_half_len = 1);
std::optional<BinarySquare> find_binary_abelian_square(const BinaryWord& bw,
                                                       std::size_t min_half_len = 1);

// Pulls a binary abelian square in ejs_encode(w) back to letter blocks of w:
// u covers the k letters whose terminating zeros fall in the first half, v
// the next k. Throws NoZeroCrossing when the square contains no zero.
// The recomputed |sum(u)-sum(v)| is checked against the alignment identity.
std::pair<NearSquare, EjsAlignment> decode_to_near_square(const Word& w, const BinaryWord& bw,
                                                          const BinarySquare& square);

// Full pipeline: shift, encode, search with the half-length floor
// (min_block_len+1)*(1+max shifted letter) that forces k >= min_block_len,
// decode, and recompute the discrepancy on the original letters (equal
// block lengths cancel the shift). Throws NotFound when this finite word
// has no qualifying square.
NearSquareReport near_additive_square(const Word& w, std::size_t min_block_len);

namespace serial {
std::optional<BinarySquare> find_binary_abelian_square(const std::vector<std::uint8_t>& bits,
                                                       std::size_t min_half_len = 1);
}

}  // namespace addiword
