#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addiword/word.hpp"

namespace addiword {

enum class Pattern { additive_square, additive_cube, abelian_square };

int pattern_order(Pattern p);
std::string pattern_name(Pattern p);
Pattern pattern_from_name(const std::string& name);  // DomainError on unknown names

struct SearchConfig {
    Alphabet alphabet;
    Pattern pattern = Pattern::additive_square;
    std::size_t depth_budget = 200;
    std::uint64_t node_budget = 100'000'000;
};

enum class Verdict { exhausted, budget_exceeded };

// `length` is g when exhausted, otherwise the deepest explored length.
// The witness is the lexicographically least word of that length. All
// fields, nodes_visited included, are identical across serial and parallel
// runs: the engine replays its node accounting in canonical DFS order.
struct SearchResult {
    Verdict verdict = Verdict::exhausted;
    std::size_t length = 0;
    std::vector<Letter> witness;
    std::uint64_t nodes_visited = 0;
};

// Word under construction with incremental prefix sums. Not safe for
// concurrent use of one instance; each search worker owns its own.
class SearchState {
public:
    SearchState(Alphabet alphabet, Pattern pattern);

    void push(Letter letter);
    void pop();
    std::size_t size() const noexcept { return letters_.size(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    Pattern pattern() const noexcept { return pattern_; }

    // True iff appending `letter` creates no forbidden block pattern ending
    // at the new last position. Any forbidden factor must end somewhere, so
    // probing only suffixes at every extension still visits it; that is what
    // makes suffix-only checking exhaustive.
    bool extendable(Letter letter) const;

private:
    Alphabet alphabet_;
    Pattern pattern_;
    std::vector<Letter> letters_;
    std::vector<Letter> sums_;       // prefix sums, sums_[0] = 0
    std::vector<std::size_t> sym_;   // alphabet index per letter
    mutable std::vector<std::int64_t> delta_;  // abelian scan scratch
};

bool extendable(const SearchState& state, Letter letter);

// Exhaustive lexicographic DFS for g(alphabet): Exhausted(g) when the whole
// tree fits the budgets, otherwise BudgetExceeded. Reaching depth_budget
// settles the verdict, so the search stops at the lexicographically first
// word of that length. Budget exhaustion is a verdict, never an error.
SearchResult longest_avoiding(const SearchConfig& cfg);

// Number of pattern-avoiding words of length exactly n. Requires
// n <= depth_budget; explores the full truncated tree (the node budget does
// not apply, the caller controls n).
std::uint64_t count_avoiding(const SearchConfig& cfg, std::size_t n);

namespace serial {
SearchResult longest_avoiding(const SearchConfig& cfg);
std::uint64_t count_avoiding(const SearchConfig& cfg, std::size_t n);
}  // namespace serial

}  // namespace addiword
