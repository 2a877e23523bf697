#include "scforge/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace scforge::words {

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

bool is_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == inverse(w[i + 1])) return false;
    return true;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (l == 0) throw std::invalid_argument("free_reduce: zero letter");
        if (!out.empty() && out.back() == inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word free_reduce(const Word& w, const Alphabet& alphabet) {
    for (Letter l : w)
        if (!alphabet.contains(l))
            throw std::invalid_argument("free_reduce: letter outside alphabet");
    return free_reduce(w);
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_reduced(w)) return false;
    if (w.size() >= 2 && w.front() == inverse(w.back())) return false;
    return true;
}

Word rotate(const Word& w, int offset) {
    if (w.empty()) return w;
    int n = static_cast<int>(w.size());
    offset = ((offset % n) + n) % n;
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + offset, w.end());
    out.insert(out.end(), w.begin(), w.begin() + offset);
    return out;
}

bool lex_less(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int ka = order_key(a[i]), kb = order_key(b[i]);
        if (ka != kb) return ka < kb;
    }
    return a.size() < b.size();
}

int least_rotation_index(const Word& w) {
    // Booth's algorithm would do; the words here are short enough that the
    // direct scan is clearer.
    int n = static_cast<int>(w.size());
    int best = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int ki = order_key(w[(i + j) % n]);
            int kb = order_key(w[(best + j) % n]);
            if (ki != kb) {
                if (ki < kb) best = i;
                break;
            }
        }
    }
    return best;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
    std::string out;
    for (Letter l : w) {
        if (!alphabet.contains(l)) throw std::invalid_argument("format_word: letter outside alphabet");
        out += alphabet.name(std::abs(l));
        if (l < 0) out += '\'';
    }
    return out;
}

Word parse_word(const std::string& text, const Alphabet& alphabet, int line) {
    Word out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        auto l = alphabet.find(std::string(1, c));
        if (!l)
            throw std::invalid_argument("line " + std::to_string(line) + ", column " +
                                        std::to_string(i + 1) + ": unknown letter '" +
                                        std::string(1, c) + "'");
        bool inv = (i + 1 < text.size() && text[i + 1] == '\'');
        if (inv) ++i;
        out.push_back(inv ? inverse(*l) : *l);
    }
    return out;
}

}  // namespace scforge::words
