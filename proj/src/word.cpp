#include "addiword/word.hpp"

#include <algorithm>

namespace addiword {

Alphabet::Alphabet(std::vector<Letter> symbols) : symbols_(std::move(symbols)) {
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
    if (symbols_.empty()) throw DomainError("alphabet must be non-empty");
}

Letter Alphabet::min() const {
    if (symbols_.empty()) throw DomainError("empty alphabet has no min");
    return symbols_.front();
}

Letter Alphabet::max() const {
    if (symbols_.empty()) throw DomainError("empty alphabet has no max");
    return symbols_.back();
}

bool Alphabet::contains(Letter s) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

std::size_t Alphabet::index_of(Letter s) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s) throw DomainError("symbol not in alphabet");
    return static_cast<std::size_t>(it - symbols_.begin());
}

Word::Word(std::vector<Letter> ls, Alphabet a) : letters(std::move(ls)), alphabet(std::move(a)) {
    for (Letter x : letters) {
        if (!alphabet->contains(x)) throw DomainError("letter outside the attached alphabet");
    }
}

Alphabet Word::effective_alphabet() const {
    if (alphabet) return *alphabet;
    if (letters.empty()) throw DomainError("empty word has no derivable alphabet");
    return Alphabet(letters);
}

PrefixSums::PrefixSums(const Word& w) {
    if (w.size() > kMaxWordLength) throw RangeError("word exceeds the supported length");
    sums_.reserve(w.size() + 1);
    sums_.push_back(0);
    Int128 acc = 0;
    for (Letter x : w.letters) {
        acc += x;
        sums_.push_back(checked_i64(acc));
    }
}

PrefixSums prefix_sums(const Word& w) { return PrefixSums(w); }

Letter factor_sum(const PrefixSums& ps, const Factor& f) {
    if (f.len == 0) throw RangeError("factors are nonempty");
    if (f.start + f.len > ps.word_length()) throw RangeError("factor reaches past the word");
    return checked_i64(static_cast<Int128>(ps.sums()[f.start + f.len]) - ps.sums()[f.start]);
}

Rational factor_average(const PrefixSums& ps, const Factor& f) {
    return Rational(factor_sum(ps, f), static_cast<Int128>(f.len));
}

}  // namespace addiword
