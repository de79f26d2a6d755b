#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "addiword/errors.hpp"
#include "addiword/rational.hpp"

namespace addiword {

using Letter = std::int64_t;

// Longest word any operation accepts. Within this cap, 128-bit prefix-sum
// accumulation cannot overflow and the int64 range check below is the only
// guard needed.
inline constexpr std::size_t kMaxWordLength = 10'000'000;

// Finite ordered set of integer symbols. Symbols are kept strictly
// increasing, so min/max are the ends.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> symbols);

    const std::vector<Letter>& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    Letter min() const;
    Letter max() const;
    bool contains(Letter s) const;
    // Position of s among the symbols; throws DomainError when absent.
    std::size_t index_of(Letter s) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Letter> symbols_;
};

// Finite integer word. An alphabet may be attached; attachment validates
// every letter.
struct Word {
    std::vector<Letter> letters;
    std::optional<Alphabet> alphabet;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
    Word(std::initializer_list<Letter> ls) : letters(ls) {}
    Word(std::vector<Letter> ls, Alphabet a);

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    // The attached alphabet, or the distinct letters when none is attached.
    Alphabet effective_alphabet() const;
};

// Half-open letter window [start, start+len); factors are nonempty.
struct Factor {
    std::size_t start = 0;
    std::size_t len = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
};

class PrefixSums {
public:
    explicit PrefixSums(const Word& w);

    // sums()[i] = sum of the first i letters; sums()[0] = 0.
    const std::vector<Letter>& sums() const noexcept { return sums_; }
    std::size_t word_length() const noexcept { return sums_.size() - 1; }

    Letter at(std::size_t i) const { return sums_.at(i); }

private:
    std::vector<Letter> sums_;
};

PrefixSums prefix_sums(const Word& w);

// Sum over the factor window, O(1). Throws RangeError when the factor is
// empty or reaches past the word.
Letter factor_sum(const PrefixSums& ps, const Factor& f);

// Exact average sum/len in lowest terms.
Rational factor_average(const PrefixSums& ps, const Factor& f);

}  // namespace addiword
