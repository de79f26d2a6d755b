#include "addiword/collinear.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

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

// Pair grouping is quadratic in the path length; this cap keeps a single
// call at desk scale.
constexpr std::size_t kMaxCollinearPoints = 100'000;

void require_path(const std::vector<LatticePoint>& points) {
    if (points.size() > kMaxCollinearPoints)
        throw RangeError("too many points for pair grouping");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1].index >= points[i].index)
            throw DomainError("point indices must be strictly increasing");
    }
}

// Chosen m points of one line, compared by (largest index, lexicographic).
bool tuple_better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (b.empty()) return !a.empty();
    if (a.empty()) return false;
    if (a.back() != b.back()) return a.back() < b.back();
    return a < b;
}

struct SlopeMate {
    std::int64_t num = 0;  // reduced rise, sign carried here
    std::int64_t den = 1;  // reduced run, > 0
    std::size_t idx = 0;
};

// Slope from anchor to every later point, reduced so equality is
// componentwise; grouping equal slopes through one anchor groups lines.
void slopes_from(const std::vector<LatticePoint>& points, std::size_t anchor,
                 std::vector<SlopeMate>& out) {
    out.clear();
    const Int128 ax = static_cast<Int128>(points[anchor].index);
    const Int128 ay = points[anchor].ordinate;
    for (std::size_t j = anchor + 1; j < points.size(); ++j) {
        Int128 dx = static_cast<Int128>(points[j].index) - ax;
        Int128 dy = static_cast<Int128>(points[j].ordinate) - ay;
        const Int128 g = int128_gcd(dy, dx);
        if (g > 1) {
            dx /= g;
            dy /= g;
        }
        out.push_back(SlopeMate{checked_i64(dy), checked_i64(dx), j});
    }
    std::sort(out.begin(), out.end(), [](const SlopeMate& l, const SlopeMate& r) {
        if (l.num != r.num) return l.num < r.num;
        if (l.den != r.den) return l.den < r.den;
        return l.idx < r.idx;
    });
}

// Best m-tuple anchored at `anchor` (anchor must be the line's first point
// to yield the line's earliest m points; later anchors only produce strictly
// worse tuples, so scanning every anchor is still exact).
std::vector<std::size_t> best_tuple_at_anchor(const std::vector<SlopeMate>& mates,
                                              std::size_t anchor, std::size_t m) {
    std::vector<std::size_t> best;
    std::size_t run_lo = 0;
    while (run_lo < mates.size()) {
        std::size_t run_hi = run_lo + 1;
        while (run_hi < mates.size() && mates[run_hi].num == mates[run_lo].num &&
               mates[run_hi].den == mates[run_lo].den)
            ++run_hi;
        if (run_hi - run_lo >= m - 1) {
            std::vector<std::size_t> tuple;
            tuple.reserve(m);
            tuple.push_back(anchor);
            for (std::size_t r = run_lo; r < run_lo + m - 1; ++r) tuple.push_back(mates[r].idx);
            if (tuple_better(tuple, best)) best = std::move(tuple);
        }
        run_lo = run_hi;
    }
    return best;
}

}  // namespace

std::vector<LatticePoint> lattice_path(const Word& w) {
    const PrefixSums ps(w);
    std::vector<LatticePoint> points;
    points.reserve(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) points.push_back(LatticePoint{i, ps.sums()[i]});
    return points;
}

bool collinear(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
    const Int128 cross = (static_cast<Int128>(q.index) - static_cast<Int128>(p.index)) *
                             (static_cast<Int128>(r.ordinate) - p.ordinate) -
                         (static_cast<Int128>(r.index) - static_cast<Int128>(p.index)) *
                             (static_cast<Int128>(q.ordinate) - p.ordinate);
    return cross == 0;
}

LineKey line_through(const LatticePoint& p, const LatticePoint& q) {
    Int128 a = static_cast<Int128>(q.ordinate) - p.ordinate;
    Int128 b = static_cast<Int128>(p.index) - static_cast<Int128>(q.index);
    if (a == 0 && b == 0) throw DomainError("a line needs two distinct points");
    const Int128 g = int128_gcd(a, b);
    a /= g;
    b /= g;
    Int128 c = a * static_cast<Int128>(p.index) + b * p.ordinate;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return LineKey{checked_i64(a), checked_i64(b), checked_i64(c)};
}

namespace serial {

std::optional<std::vector<std::size_t>> find_collinear(const std::vector<LatticePoint>& points,
                                                       std::size_t m) {
    if (m < 3) throw DomainError("need at least 3 collinear points");
    require_path(points);
    const std::size_t n = points.size();
    if (n < m) return std::nullopt;

    // Outer index ascending keeps every per-line list sorted and unique:
    // a pair's second point is appended only when it is new.
    std::unordered_map<LineKey, std::vector<std::size_t>, LineKeyHash> groups;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto& members = groups[line_through(points[i], points[j])];
            if (members.empty()) members.push_back(i);
            if (members.back() != j) members.push_back(j);
        }
    }

    std::vector<std::size_t> best;
    for (const auto& [key, members] : groups) {
        if (members.size() < m) continue;
        std::vector<std::size_t> tuple(members.begin(),
                                       members.begin() + static_cast<std::ptrdiff_t>(m));
        if (tuple_better(tuple, best)) best = std::move(tuple);
    }
    if (best.empty()) return std::nullopt;
    return best;
}

}  // namespace serial

std::optional<std::vector<std::size_t>> find_collinear(const std::vector<LatticePoint>& points,
                                                       std::size_t m) {
    if (m < 3) throw DomainError("need at least 3 collinear points");
    require_path(points);
    const std::size_t n = points.size();
    if (n < m) return std::nullopt;

    const int nt = thread_count();
    constexpr std::size_t kWave = 64;
    std::vector<std::size_t> best;
    for (std::size_t wave_lo = 0; wave_lo + m <= n; wave_lo += kWave) {
        // Anchors at or past the best tuple's largest index cannot improve it.
        if (!best.empty() && wave_lo >= best.back()) break;
        const std::size_t wave_hi = std::min(n - m + 1, wave_lo + kWave);
        std::vector<std::vector<std::size_t>> local(static_cast<std::size_t>(nt));
#pragma omp parallel num_threads(nt)
        {
            std::vector<SlopeMate> mates;
            std::vector<std::size_t>& mine = local[static_cast<std::size_t>(tid())];
#pragma omp for schedule(dynamic, 1)
            for (std::size_t anchor = wave_lo; anchor < wave_hi; ++anchor) {
                if (!best.empty() && anchor >= best.back()) continue;
                if (!mine.empty() && anchor >= mine.back()) continue;
                slopes_from(points, anchor, mates);
                auto tuple = best_tuple_at_anchor(mates, anchor, m);
                if (tuple_better(tuple, mine)) mine = std::move(tuple);
            }
        }
        for (auto& t : local)
            if (tuple_better(t, best)) best = std::move(t);
    }
    if (best.empty()) return std::nullopt;
    return best;
}

std::optional<Factorization> equal_average_factorization(const Word& w, std::size_t k) {
    if (k < 2) throw DomainError("need at least 2 factors");
    const auto points = lattice_path(w);
    const auto chosen = find_collinear(points, k + 1);
    if (!chosen) return std::nullopt;

    const auto& idx = *chosen;
    Factorization out;
    out.point_indices = idx;
    out.common_average =
        Rational(static_cast<Int128>(points[idx.back()].ordinate) - points[idx.front()].ordinate,
                 static_cast<Int128>(idx.back()) - static_cast<Int128>(idx.front()));
    const PrefixSums ps(w);
    out.factors.reserve(k);
    for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
        const Factor f{idx[j], idx[j + 1] - idx[j]};
        out.factors.push_back(f);
        if (factor_average(ps, f) != out.common_average)
            throw DomainError("chord slope does not match a factor average");
    }
    return out;
}

std::optional<DoubleApTriple> find_double_ap(const std::vector<Letter>& xs) {
    const std::size_t n = xs.size();
    for (std::size_t k = 2; k < n; ++k) {
        for (std::size_t j = (k + 1) / 2; j < k; ++j) {
            const std::size_t i = 2 * j - k;
            if (static_cast<Int128>(2) * xs[j] == static_cast<Int128>(xs[i]) + xs[k])
                return DoubleApTriple{i, j, k, xs[i], xs[j], xs[k]};
        }
    }
    return std::nullopt;
}

}  // namespace addiword
