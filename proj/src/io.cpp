#include "addiword/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace addiword {

namespace {

bool is_separator(char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Word parse_word_input(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        ++line_no;

        std::size_t first = 0;
        while (first < line.size() && is_separator(line[first])) ++first;
        const bool comment = first < line.size() && line[first] == '#';

        if (!comment) {
            std::size_t i = 0;
            while (i < line.size()) {
                if (is_separator(line[i])) {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < line.size() && !is_separator(line[j])) ++j;
                const std::string_view token = line.substr(i, j - i);
                Letter value = 0;
                const auto [ptr, ec] =
                    std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc() || ptr != token.data() + token.size()) {
                    throw ParseError("expected an integer, got \"" + std::string(token) + "\"",
                                     line_no, i + 1);
                }
                letters.push_back(value);
                i = j;
            }
        }
        pos = eol + 1;
    }
    if (letters.size() > kMaxWordLength) throw RangeError("word exceeds the supported length");
    return Word(std::move(letters));
}

std::string format_word(const Word& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out << ' ';
        out << w.letters[i];
    }
    return out.str();
}

Word load_word_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RangeError("cannot open word file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_word_input(buf.str());
}

}  // namespace addiword
