#include "scforge/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace scforge::words {

namespace {

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

void sort_and_dedup(std::vector<CyclicWord>& relators) {
    std::sort(relators.begin(), relators.end());
    relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
}

}  // namespace

Presentation make_presentation(Alphabet alphabet, const std::vector<Word>& relators) {
    Presentation p;
    p.alphabet = std::move(alphabet);
    for (const Word& w : relators) {
        for (Letter l : w)
            if (!p.alphabet.contains(l))
                throw std::invalid_argument("relator letter outside alphabet");
        if (w.empty()) throw std::invalid_argument("empty relator");
        if (!is_cyclically_reduced(w))
            throw std::invalid_argument("relator is not cyclically reduced");
        p.relators.emplace_back(w);
    }
    sort_and_dedup(p.relators);
    return p;
}

Presentation parse_presentation(std::istream& in) {
    Presentation p;
    bool have_alphabet = false;
    std::vector<Word> relators;
    std::string line;
    int lineno = 0;
    std::vector<std::string> t_names;
    std::string morse_name;
    std::vector<std::string> base_names;
    std::vector<std::pair<int, std::string>> relator_lines;

    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        trimmed = trimmed.substr(first);
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ' || trimmed.back() == '\t'))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;

        auto starts = [&](const char* prefix) { return trimmed.rfind(prefix, 0) == 0; };
        if (starts("alphabet:")) {
            if (have_alphabet) throw ParseError(lineno, 1, "duplicate alphabet header");
            base_names = split_fields(trimmed.substr(9));
            if (base_names.empty()) throw ParseError(lineno, 10, "empty alphabet");
            have_alphabet = true;
        } else if (starts("t-alphabet:")) {
            t_names = split_fields(trimmed.substr(11));
            if (t_names.size() != 2) throw ParseError(lineno, 12, "t-alphabet must list exactly two letters");
        } else if (starts("morse-letter:")) {
            auto fields = split_fields(trimmed.substr(13));
            if (fields.size() != 1) throw ParseError(lineno, 14, "morse-letter must list exactly one letter");
            morse_name = fields[0];
        } else {
            relator_lines.emplace_back(lineno, trimmed);
        }
    }
    if (!have_alphabet) throw ParseError(lineno, 1, "missing alphabet header");

    Alphabet alphabet;
    try {
        for (const auto& n : base_names) alphabet.add_generator(n, Alphabet::Role::base);
        for (const auto& n : t_names) alphabet.add_generator(n, Alphabet::Role::tword);
        if (!morse_name.empty()) alphabet.add_generator(morse_name, Alphabet::Role::morse);
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }

    for (const auto& [ln, text] : relator_lines) {
        Word w;
        try {
            w = parse_word(text, alphabet, ln);
        } catch (const std::invalid_argument& e) {
            throw ParseError(ln, 1, e.what());
        }
        if (w.empty()) throw ParseError(ln, 1, "empty relator");
        if (!is_cyclically_reduced(w)) throw ParseError(ln, 1, "relator is not cyclically reduced");
        relators.push_back(std::move(w));
    }
    try {
        return make_presentation(std::move(alphabet), relators);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 1, e.what());
    }
}

Presentation parse_presentation_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_presentation(iss);
}

Presentation load_presentation(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open presentation file: " + path);
    return parse_presentation(f);
}

std::string serialize_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "alphabet:";
    for (int i = 1; i <= p.alphabet.size(); ++i)
        if (p.alphabet.role(i) == Alphabet::Role::base) out << ' ' << p.alphabet.name(i);
    out << '\n';
    auto t = p.alphabet.generators_with_role(Alphabet::Role::tword);
    if (!t.empty()) {
        out << "t-alphabet:";
        for (Letter l : t) out << ' ' << p.alphabet.name(l);
        out << '\n';
    }
    if (auto m = p.alphabet.morse_letter())
        out << "morse-letter: " << p.alphabet.name(*m) << '\n';
    for (const auto& r : p.relators)
        out << format_word(r.canonical(), p.alphabet) << '\n';
    return out.str();
}

std::vector<Word> symmetrize(const Presentation& p) {
    std::vector<Word> out;
    for (const auto& r : p.relators) {
        const Word rep = r.representative();
        const Word inv = inverse_word(rep);
        for (int i = 0; i < r.length(); ++i) {
            out.push_back(rotate(rep, i));
            out.push_back(rotate(inv, i));
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace scforge::words
