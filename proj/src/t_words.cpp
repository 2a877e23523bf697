#include "scforge/t_words.hpp"

namespace scforge::words {

Word t_word(std::int64_t index, Letter first, Letter second) {
    if (index < 1) throw std::invalid_argument("t_word: index must be >= 1");
    std::uint64_t v = static_cast<std::uint64_t>(index) + 1;
    int bits = t_word_length(index);
    Word out;
    out.reserve(bits);
    for (int b = bits - 1; b >= 0; --b)
        out.push_back((v >> b) & 1 ? second : first);
    return out;
}

std::vector<Word> enumerate_t_words(const std::vector<Letter>& t_letters, std::int64_t count) {
    if (t_letters.size() != 2 || t_letters[0] <= 0 || t_letters[1] <= 0 || t_letters[0] == t_letters[1])
        throw std::invalid_argument("enumerate_t_words: T must consist of exactly two positive letters");
    if (count < 1) throw std::invalid_argument("enumerate_t_words: count must be >= 1");
    Letter a = t_letters[0], b = t_letters[1];
    if (order_key(b) < order_key(a)) std::swap(a, b);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 1; i <= count; ++i) out.push_back(t_word(i, a, b));
    return out;
}

}  // namespace scforge::words
