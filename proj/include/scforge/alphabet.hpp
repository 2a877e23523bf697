// alphabet.hpp -- symmetrized alphabets with formal inverses and role tags.
//
// A letter is a nonzero int: +i is the i-th generator (1-based), -i its
// formal inverse. The involution is negation, so no letter can equal its
// own inverse by construction. Generators carry a role (base set S, the
// two-letter T alphabet, or the distinguished morse letter a); roles are
// what make the S / T / {a} disjointness checkable.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scforge::words {

using Letter = std::int32_t;

inline Letter inverse(Letter l) { return -l; }

/// Total order on symmetrized letters following the generator order:
/// a < a' < b < b' < ...
inline int order_key(Letter l) {
    return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0);
}

class Alphabet {
public:
    enum class Role : std::uint8_t { base, tword, morse };

    Alphabet() = default;

    /// Names must be distinct single characters (the relator text format
    /// juxtaposes letters, with X' denoting the inverse of X).
    static Alphabet from_names(const std::vector<std::string>& names) {
        Alphabet a;
        for (const auto& n : names) a.add_generator(n, Role::base);
        return a;
    }

    int add_generator(const std::string& name, Role role) {
        if (name.size() != 1 || name[0] == '#' || name[0] == '\'' || std::isspace(static_cast<unsigned char>(name[0])))
            throw std::invalid_argument("generator name must be a single printable character: '" + name + "'");
        if (by_name_.count(name)) throw std::invalid_argument("duplicate generator name: '" + name + "'");
        if (role == Role::morse && morse_index_) throw std::invalid_argument("morse letter already declared");
        names_.push_back(name);
        roles_.push_back(role);
        by_name_[name] = static_cast<int>(names_.size());
        if (role == Role::morse) morse_index_ = static_cast<int>(names_.size());
        return static_cast<int>(names_.size());
    }

    int size() const { return static_cast<int>(names_.size()); }

    bool contains(Letter l) const {
        int g = std::abs(l);
        return g >= 1 && g <= size();
    }

    const std::string& name(int generator_index) const { return names_.at(generator_index - 1); }

    Role role(int generator_index) const { return roles_.at(generator_index - 1); }
    Role role_of(Letter l) const { return role(std::abs(l)); }

    std::optional<Letter> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return static_cast<Letter>(it->second);
    }

    std::vector<Letter> generators_with_role(Role r) const {
        std::vector<Letter> out;
        for (int i = 1; i <= size(); ++i)
            if (roles_[i - 1] == r) out.push_back(i);
        return out;
    }

    std::optional<Letter> morse_letter() const {
        if (!morse_index_) return std::nullopt;
        return static_cast<Letter>(*morse_index_);
    }

    /// The declared sub-alphabets are disjoint iff every generator carries
    /// exactly one role, which holds by construction; this checks the §4
    /// shape requirements instead (|T| = 2, at most one morse letter).
    bool t_alphabet_well_formed() const {
        return generators_with_role(Role::tword).size() == 2;
    }

    bool operator==(const Alphabet& other) const {
        return names_ == other.names_ && roles_ == other.roles_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Role> roles_;
    std::map<std::string, int> by_name_;
    std::optional<int> morse_index_;
};

}  // namespace scforge::words
