// t_words.hpp -- the ordered stream u_1, u_2, ... of positive words over the
// two-letter T alphabet: ordered by length, lexicographically within a
// length, empty word excluded. With this order |u_i| <= log2(i) + 1.

#pragma once

#include "scforge/word.hpp"

#include <cstdint>
#include <stdexcept>

namespace scforge::words {

/// The i-th word (1-based): the binary digits of i+1 below the leading bit,
/// 0 -> first T letter, 1 -> second.
Word t_word(std::int64_t index, Letter first, Letter second);

inline int t_word_length(std::int64_t index) {
    if (index < 1) throw std::invalid_argument("t_word_length: index must be >= 1");
    int bits = 0;
    std::uint64_t v = static_cast<std::uint64_t>(index) + 1;
    while (v > 1) { v >>= 1; ++bits; }
    return bits;
}

/// First `count` words of the stream. Requires the alphabet part to consist
/// of exactly two positive letters.
std::vector<Word> enumerate_t_words(const std::vector<Letter>& t_letters, std::int64_t count);

/// Stateful global stream used by the relator construction ("the lowest
/// indexed words which have not yet been used").
class TWordStream {
public:
    TWordStream(Letter first, Letter second) : first_(first), second_(second) {}
    Word next() { return t_word(++consumed_, first_, second_); }
    std::int64_t consumed() const { return consumed_; }

private:
    Letter first_;
    Letter second_;
    std::int64_t consumed_ = 0;
};

}  // namespace scforge::words
