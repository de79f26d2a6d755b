#include "addiword/ejs.hpp"

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

// Largest bit string any encode call may produce.
constexpr std::size_t kMaxEncodedBits = 200'000'000;

std::vector<std::int64_t> ones_prefix_of(const std::vector<std::uint8_t>& bits) {
    std::vector<std::int64_t> ones(bits.size() + 1, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        ones[i + 1] = ones[i] + (bits[i] != 0 ? 1 : 0);
    return ones;
}

// Shortest qualifying half length at this start, or nullopt.
std::optional<std::size_t> binary_scan_start(const std::vector<std::int64_t>& ones,
                                             std::size_t n, std::size_t start,
                                             std::size_t min_half_len) {
    for (std::size_t half = min_half_len; start + 2 * half <= n; ++half) {
        const std::int64_t left = ones[start + half] - ones[start];
        const std::int64_t right = ones[start + 2 * half] - ones[start + half];
        if (left == right) return half;
    }
    return std::nullopt;
}

}  // namespace

Letter compute_bound(const Alphabet& s) {
    const Letter lo = s.min();
    const Letter hi = s.max();
    if (lo >= 1) return checked_i64(Int128(2) * hi);
    return checked_i64(Int128(2) * ((lo < 0 ? -Int128(lo) : Int128(0)) + 1 + hi));
}

std::pair<Word, Letter> shift_to_positive(const Word& w) {
    if (w.empty()) return {w, 0};
    const Letter lo = *std::min_element(w.letters.begin(), w.letters.end());
    if (lo >= 1) return {w, 0};
    const Letter offset = checked_i64(Int128(lo < 0 ? -lo : 0) + 1);
    Word shifted;
    shifted.letters.reserve(w.size());
    for (Letter x : w.letters) shifted.letters.push_back(checked_i64(Int128(x) + offset));
    return {std::move(shifted), offset};
}

std::size_t BinaryWord::letter_of_zero_at(std::size_t pos) const {
    return static_cast<std::size_t>(
        std::lower_bound(zero_pos.begin(), zero_pos.end(), pos) - zero_pos.begin());
}

BinaryWord ejs_encode(const Word& w) {
    Int128 total = 0;
    for (Letter x : w.letters) {
        if (x < 1) throw DomainError("encode requires every letter >= 1");
        total += x;
    }
    total += static_cast<Int128>(w.size());
    if (total > static_cast<Int128>(kMaxEncodedBits))
        throw RangeError("encoded word would be too large");

    BinaryWord bw;
    bw.bits.reserve(static_cast<std::size_t>(total));
    bw.run_starts.reserve(w.size());
    bw.zero_pos.reserve(w.size());
    for (Letter x : w.letters) {
        bw.run_starts.push_back(bw.bits.size());
        bw.bits.insert(bw.bits.end(), static_cast<std::size_t>(x), std::uint8_t{1});
        bw.zero_pos.push_back(bw.bits.size());
        bw.bits.push_back(0);
    }
    bw.ones_prefix = ones_prefix_of(bw.bits);
    return bw;
}

namespace serial {

std::optional<BinarySquare> find_binary_abelian_square(const std::vector<std::uint8_t>& bits,
                                                       std::size_t min_half_len) {
    if (min_half_len == 0) throw DomainError("min_half_len must be positive");
    const std::size_t n = bits.size();
    if (n < 2 * min_half_len) return std::nullopt;
    const auto ones = ones_prefix_of(bits);
    for (std::size_t start = 0; start + 2 * min_half_len <= n; ++start) {
        if (auto half = binary_scan_start(ones, n, start, min_half_len))
            return BinarySquare{start, *half};
    }
    return std::nullopt;
}

}  // namespace serial

std::optional<BinarySquare> find_binary_abelian_square(const std::vector<std::uint8_t>& bits,
                                                       std::size_t min_half_len) {
    if (min_half_len == 0) throw DomainError("min_half_len must be positive");
    const std::size_t n = bits.size();
    if (n < 2 * min_half_len) return std::nullopt;
    const auto ones = ones_prefix_of(bits);
    const std::size_t last_start = n - 2 * min_half_len;

    const int nt = thread_count();
    constexpr std::size_t kWave = 512;
    for (std::size_t wave_lo = 0; wave_lo <= last_start; wave_lo += kWave) {
        const std::size_t wave_hi = std::min(last_start + 1, wave_lo + kWave);
        struct Hit {
            std::size_t start = std::numeric_limits<std::size_t>::max();
            std::size_t half = 0;
        };
        std::vector<Hit> local(static_cast<std::size_t>(nt));
#pragma omp parallel for num_threads(nt) schedule(dynamic, 16)
        for (std::size_t start = wave_lo; start < wave_hi; ++start) {
            Hit& mine = local[static_cast<std::size_t>(tid())];
            if (start >= mine.start) continue;
            if (auto half = binary_scan_start(ones, n, start, min_half_len))
                mine = Hit{start, *half};
        }
        Hit best;
        for (const Hit& h : local) {
            if (h.start < best.start || (h.start == best.start && h.half < best.half))
                best = h;
        }
        if (best.start != std::numeric_limits<std::size_t>::max())
            return BinarySquare{best.start, best.half};
    }
    return std::nullopt;
}

std::optional<BinarySquare> find_binary_abelian_square(const BinaryWord& bw,
                                                       std::size_t min_half_len) {
    return find_binary_abelian_square(bw.bits, min_half_len);
}

std::pair<NearSquare, EjsAlignment> decode_to_near_square(const Word& w, const BinaryWord& bw,
                                                          const BinarySquare& square) {
    const std::size_t start = square.start;
    const std::size_t half = square.half_len;
    if (half == 0 || start + 2 * half > bw.size())
        throw RangeError("square reaches past the binary word");
    if (bw.letter_count() != w.size())
        throw DomainError("binary word does not encode this word");

    const std::size_t mid = start + half;
    const std::size_t end = start + 2 * half;
    const std::int64_t k64 = bw.zeros_in(start, mid);
    if (k64 != bw.zeros_in(mid, end))
        throw DomainError("halves carry different zero counts; not an abelian square");
    if (k64 == 0) throw NoZeroCrossing("square lies inside a single 1-run");
    const std::size_t k = static_cast<std::size_t>(k64);

    // Letter whose terminating zero is the first zero of the left half.
    const std::size_t a = bw.letter_of_zero_at(start);
    // Zeros are one per letter, in letter order, so half one holds the zeros
    // of letters a..a+k-1 and half two those of a+k..a+2k-1.
    const std::size_t b = a + k;
    if (b + k > w.size()) throw DomainError("binary word does not encode this word");

    EjsAlignment al;
    al.k = k;
    al.first_block_start = a;
    al.second_block_start = b;

    const std::size_t zero_last_u = bw.zero_pos[a + k - 1];
    const std::size_t zero_first_v = bw.zero_pos[b];
    const std::size_t zero_last_v = bw.zero_pos[b + k - 1];

    const Letter alpha2 = static_cast<Letter>(bw.zero_pos[a] - start);  // run tail inside u
    const Letter alpha1 = w.letters[a] - alpha2;
    const Letter alpha3 = static_cast<Letter>(mid - (zero_last_u + 1));  // trailing ones of u
    const Letter alpha4 = static_cast<Letter>(zero_first_v - mid);       // leading ones of v
    const Letter alpha5 = static_cast<Letter>(end - (zero_last_v + 1));  // trailing ones of v
    const Letter alpha6 = (b + k < w.size()) ? w.letters[b + k] - alpha5 : 0;
    al.alpha = {alpha1, alpha2, alpha3, alpha4, alpha5, alpha6};

    if (alpha1 < 0 || alpha1 + alpha2 != w.letters[a])
        throw DomainError("left-edge split does not reconstruct its letter");
    if (b < w.size() && alpha3 + alpha4 != w.letters[b])
        throw DomainError("midpoint split does not reconstruct its letter");

    const PrefixSums ps(w);
    const Factor u{a, k};
    const Factor v{b, k};
    const Int128 diff = static_cast<Int128>(factor_sum(ps, u)) - factor_sum(ps, v);
    const Letter discrepancy = checked_i64(int128_abs(diff));
    const Int128 identity = int128_abs(Int128(alpha1) - 2 * Int128(alpha3) + Int128(alpha5));
    if (identity != static_cast<Int128>(discrepancy))
        throw DomainError("alignment identity violated; inputs are inconsistent");

    NearSquare ns;
    ns.u = u;
    ns.v = v;
    ns.discrepancy = discrepancy;
    ns.bound_c = compute_bound(w.effective_alphabet());
    ns.shift_offset = 0;
    return {ns, al};
}

NearSquareReport near_additive_square(const Word& w, std::size_t min_block_len) {
    if (min_block_len == 0) throw DomainError("min_block_len must be positive");
    if (w.empty()) throw NotFound("empty word contains no near square");

    auto [shifted, offset] = shift_to_positive(w);
    const BinaryWord bw = ejs_encode(shifted);
    const Letter max_shifted =
        *std::max_element(shifted.letters.begin(), shifted.letters.end());
    const Int128 floor128 =
        static_cast<Int128>(min_block_len + 1) * (Int128(1) + max_shifted);
    if (floor128 > static_cast<Int128>(bw.size()))
        throw NotFound("word too short for the requested block length");
    const std::size_t min_half = static_cast<std::size_t>(floor128);

    const auto square = find_binary_abelian_square(bw, min_half);
    if (!square) throw NotFound("no qualifying abelian square in this finite encoding");

    auto [ns, al] = decode_to_near_square(shifted, bw, *square);

    // Same windows on the original letters; equal lengths cancel the shift.
    const PrefixSums ps(w);
    const Int128 diff = static_cast<Int128>(factor_sum(ps, ns.u)) - factor_sum(ps, ns.v);
    const Letter original_disc = checked_i64(int128_abs(diff));
    if (original_disc != ns.discrepancy)
        throw DomainError("shift cancellation identity violated");

    ns.discrepancy = original_disc;
    ns.bound_c = compute_bound(w.effective_alphabet());
    ns.shift_offset = offset;
    if (ns.discrepancy > ns.bound_c) throw DomainError("discrepancy exceeds the alphabet bound");
    return NearSquareReport{ns, al, *square};
}

}  // namespace addiword
