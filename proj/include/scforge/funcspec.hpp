// funcspec.hpp -- growth-function specifications: a fixed catalog of closed
// forms plus explicit tables, all evaluated in exact rational arithmetic.
//
// Logarithmic terms use the certified 1/64-precision enclosures from
// numeric.hpp (lower enclosure inside evaluations, so values are
// deterministic rationals). Each catalog formula carries a certified
// threshold solver: the least T such that eval(t) < t/c for every t >= T.

#pragma once

#include "scforge/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace scforge::pieces {

class FunctionSpec {
public:
    enum class Kind { ceil_sqrt, constant, affine, n_over_log2_sq, log_composite, table };

    static FunctionSpec ceil_sqrt();
    static FunctionSpec constant(Rational c);
    static FunctionSpec affine(Rational slope, Rational offset);
    static FunctionSpec n_over_log2_sq(Rational c);
    static FunctionSpec log_composite(FunctionSpec inner);
    static FunctionSpec table(std::map<std::int64_t, Rational> values,
                              bool sublinear_declared, bool superlog_declared);

    /// "sqrt" | "const:<rat>" | "affine:<rat>,<rat>" | "nlogsq:<rat>" |
    /// "logcomp:<inner>" | "table:<n>=<rat>,..."
    static FunctionSpec parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::int64_t domain_min() const;

    /// Exact value at an integer argument; throws outside the domain and on
    /// missing table entries (naming the argument).
    Rational eval(std::int64_t n) const;

    bool declared_sublinear() const { return sublinear_; }
    bool declared_superlogarithmic() const { return superlog_; }

    /// Viability sample check: eval >= 6 and nondecreasing over `args`.
    /// On failure *why (if given) names the offending argument.
    bool is_viable_on(const std::vector<std::int64_t>& args, std::string* why = nullptr) const;

    /// Least T >= domain_min with eval(t) < t/c for all t >= T (certified;
    /// for tables, for all table arguments >= T). Throws when the condition
    /// cannot be certified (e.g. affine with positive slope, or a table with
    /// no entries at or beyond the candidate threshold).
    std::int64_t certified_threshold(const Rational& c) const;

    std::string describe() const;

    bool operator==(const FunctionSpec& other) const;

private:
    FunctionSpec() = default;

    Kind kind_ = Kind::constant;
    Rational c0_;  // constant value / affine offset / nlogsq multiplier
    Rational c1_;  // affine slope
    std::shared_ptr<const FunctionSpec> inner_;
    std::map<std::int64_t, Rational> table_;
    bool sublinear_ = false;
    bool superlog_ = false;
};

}  // namespace scforge::pieces
