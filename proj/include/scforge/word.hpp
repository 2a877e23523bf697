// word.hpp -- free words over a symmetrized alphabet and the basic
// rewriting primitives: free reduction, inversion, rotation, subword
// queries against cyclic words.

#pragma once

#include "scforge/alphabet.hpp"

#include <string>
#include <vector>

namespace scforge::words {

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);

bool is_reduced(const Word& w);

/// The unique reduced word freely equal to w; idempotent.
/// Throws std::invalid_argument if a letter is outside the alphabet.
Word free_reduce(const Word& w, const Alphabet& alphabet);

/// Free reduction without an alphabet membership check (letters already
/// validated by the caller).
Word free_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

Word rotate(const Word& w, int offset);

/// Lexicographic comparison under the alphabet letter order (order_key).
bool lex_less(const Word& a, const Word& b);

/// Index of the lexicographically least rotation of w.
int least_rotation_index(const Word& w);

std::string format_word(const Word& w, const Alphabet& alphabet);

/// Parses juxtaposed letters, X' denoting the inverse of X.
/// `column_base` only shapes error messages.
Word parse_word(const std::string& text, const Alphabet& alphabet, int line = 0);

struct CyclicOccurrence {
    bool inverted;  // occurrence inside a rotation of r^{-1}
    int rotation;   // rotation index of the element of \bar{r}
    int offset;     // start offset inside that element
};

}  // namespace scforge::words
