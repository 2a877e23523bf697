// cyclic_word.hpp -- cyclically reduced words up to rotation.
//
// Two CyclicWords are equal iff their representatives are rotations of one
// another; the canonical form is the lexicographically least rotation under
// the alphabet order. Inversion yields a *different* cyclic word in general.

#pragma once

#include "scforge/word.hpp"

#include <stdexcept>

namespace scforge::words {

class CyclicWord {
public:
    CyclicWord() = default;

    /// Requires w cyclically reduced (possibly empty).
    explicit CyclicWord(Word w) : rep_(std::move(w)) {
        if (!is_cyclically_reduced(rep_))
            throw std::invalid_argument("CyclicWord: representative is not cyclically reduced");
        canon_rot_ = rep_.empty() ? 0 : least_rotation_index(rep_);
    }

    bool empty() const { return rep_.empty(); }
    int length() const { return static_cast<int>(rep_.size()); }

    const Word& representative() const { return rep_; }
    int canonical_rotation_index() const { return canon_rot_; }

    Word canonical() const { return rotate(rep_, canon_rot_); }

    CyclicWord inverse() const { return CyclicWord(inverse_word(rep_)); }

    bool operator==(const CyclicWord& other) const { return canonical() == other.canonical(); }
    bool operator!=(const CyclicWord& other) const { return !(*this == other); }

    /// Order by (length, canonical lex) -- the deterministic order used for
    /// relator storage and iteration.
    bool operator<(const CyclicWord& other) const {
        if (length() != other.length()) return length() < other.length();
        return lex_less(canonical(), other.canonical());
    }

private:
    Word rep_;
    int canon_rot_ = 0;
};

struct CyclicReduction {
    CyclicWord core;
    Word conjugator;  // w = conjugator * core * conjugator^{-1} as free words
    bool trivial;     // w freely reduces to the empty word
};

/// Peels matching ends off a reduced word: returns the cyclically reduced
/// core c and u with w = u c u^{-1}. Empty core is flagged `trivial`.
CyclicReduction cyclic_reduce(const Word& w);

/// All (rotation, offset) occurrences of w inside elements of \bar{r}.
/// Empty result means w is not a cyclic subword of r. Words longer than |r|
/// cannot occur (elements of \bar{r} have length |r|); the internal guard
/// rejects |w| > 2|r| outright.
std::vector<CyclicOccurrence> is_cyclic_subword(const Word& w, const CyclicWord& r);

}  // namespace scforge::words
