// presentation.hpp -- group presentations, the shared text format, and the
// symmetrized closure.
//
// Text format (UTF-8, line oriented):
//   # comment
//   alphabet: a b c
//   t-alphabet: s t          (optional)
//   morse-letter: a          (optional)
//   <relator>                one per line, juxtaposed letters, X' = inverse
//
// Serialization writes canonical relator forms sorted by (length, lex), so
// parse -> serialize -> parse is the identity on canonical forms.

#pragma once

#include "scforge/cyclic_word.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace scforge::words {

struct Presentation {
    Alphabet alphabet;
    std::vector<CyclicWord> relators;  // sorted by (length, canonical lex), distinct as cyclic words

    int max_relator_length() const {
        return relators.empty() ? 0 : relators.back().length();
    }
};

/// Builds a presentation from raw relator words: validates letters, requires
/// each relator cyclically reduced and nonempty, deduplicates cyclic equals.
Presentation make_presentation(Alphabet alphabet, const std::vector<Word>& relators);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};

Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_text(const std::string& text);
Presentation load_presentation(const std::string& path);

std::string serialize_presentation(const Presentation& p);

/// \bar{R}: all rotations of all relators and of their inverses, as plain
/// words, deduplicated and sorted lexicographically.
std::vector<Word> symmetrize(const Presentation& p);

}  // namespace scforge::words
