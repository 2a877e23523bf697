#include "scforge/cyclic_word.hpp"

namespace scforge::words {

CyclicReduction cyclic_reduce(const Word& w) {
    if (!is_reduced(w)) throw std::invalid_argument("cyclic_reduce: input not reduced");
    Word cur = w;
    Word conj;
    while (cur.size() >= 2 && cur.front() == inverse(cur.back())) {
        conj.push_back(cur.front());
        cur.erase(cur.begin());
        cur.pop_back();
    }
    bool trivial = cur.empty();
    return {CyclicWord(cur), conj, trivial};
}

std::vector<CyclicOccurrence> is_cyclic_subword(const Word& w, const CyclicWord& r) {
    std::vector<CyclicOccurrence> out;
    if (w.empty() || !is_reduced(w)) {
        if (w.empty()) return out;  // empty subwords excluded by convention
        throw std::invalid_argument("is_cyclic_subword: w must be reduced");
    }
    int n = r.length();
    int m = static_cast<int>(w.size());
    if (n == 0 || m > 2 * n || m > n) return out;

    const Word rep = r.representative();
    for (int pass = 0; pass < 2; ++pass) {
        const Word base = pass == 0 ? rep : inverse_word(rep);
        Word doubled = base;
        doubled.insert(doubled.end(), base.begin(), base.end());
        for (int rot = 0; rot < n; ++rot) {
            for (int off = 0; off + m <= n; ++off) {
                bool match = true;
                for (int j = 0; j < m; ++j) {
                    if (doubled[rot + off + j] != w[j]) { match = false; break; }
                }
                if (match) out.push_back({pass == 1, rot, off});
            }
        }
    }
    return out;
}

}  // namespace scforge::words
