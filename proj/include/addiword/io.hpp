#pragma once

#include <string>
#include <string_view>

#include "addiword/word.hpp"

namespace addiword {

// Word file format shared by every tool: integers separated by whitespace
// and/or commas; lines whose first non-blank character is '#' are ignored.
// Throws ParseError with 1-based line/column on a non-integer token.
Word parse_word_input(std::string_view text);

// One line, single-space separated; parse_word_input(format_word(w)) == w.
std::string format_word(const Word& w);

Word load_word_file(const std::string& path);

}  // namespace addiword
