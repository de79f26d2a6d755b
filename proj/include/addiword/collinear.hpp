#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addiword/word.hpp"

namespace addiword {

// Path point P_i = (i, x1 + ... + xi); P_0 = (0, 0) is included so a
// factorization may begin at the first letter.
struct LatticePoint {
    std::size_t index = 0;
    Letter ordinate = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Canonical a*x + b*y = c with gcd(a, b) = 1 and the leading nonzero of
// (a, b) positive, so equal lines hash equal.
struct LineKey {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const LineKey&, const LineKey&) = default;
};

struct LineKeyHash {
    std::size_t operator()(const LineKey& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t v : {static_cast<std::uint64_t>(k.a), static_cast<std::uint64_t>(k.b),
                                static_cast<std::uint64_t>(k.c)}) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Adjacent nonempty factors tiling one window, every average equal.
struct Factorization {
    std::vector<Factor> factors;
    Rational common_average;
    std::vector<std::size_t> point_indices;  // the k+1 chosen path indices
};

// Indices i < j < k with j - i = k - j and x_j - x_i = x_k - x_j (0-based).
struct DoubleApTriple {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Letter xi = 0;
    Letter xj = 0;
    Letter xk = 0;
};

std::vector<LatticePoint> lattice_path(const Word& w);

// Exact integer cross-product test.
bool collinear(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r);

LineKey line_through(const LatticePoint& p, const LatticePoint& q);

// Among lines through >= m of the points, the m earliest points on the line
// minimizing the largest chosen index, ties by lexicographic index order.
// Requires m >= 3 (DomainError) and distinct points.
std::optional<std::vector<std::size_t>> find_collinear(const std::vector<LatticePoint>& points,
                                                       std::size_t m);

// k adjacent factors with one exact common average, from k+1 collinear path
// points; the common average is the chord slope. Requires k >= 2.
std::optional<Factorization> equal_average_factorization(const Word& w, std::size_t k);

// First triple in (k, j) order whose indices and values both form arithmetic
// progressions.
std::optional<DoubleApTriple> find_double_ap(const std::vector<Letter>& xs);

namespace serial {
std::optional<std::vector<std::size_t>> find_collinear(const std::vector<LatticePoint>& points,
                                                       std::size_t m);
}

}  // namespace addiword
