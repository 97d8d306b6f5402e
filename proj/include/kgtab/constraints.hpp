#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kgtab/formula.hpp"
#include "kgtab/rational.hpp"

namespace kgtab {

enum class Rel { Lt, Le, Gt, Ge, Eq };

std::string_view rel_symbol(Rel r);
Rel flip(Rel r);  // a r b  <=>  b flip(r) a
bool is_strict(Rel r);
bool holds(const Rational& a, Rel r, const Rational& b);

// One member of the adjacent pair t^i_0(w) < t^i_1(w) attached to a modal
// subformula at world w; `t_index` selects T_1 or T_2.
struct TTerm {
    std::string world;
    int t_index = 1;
    int instance = 0;
    int bound = 0;  // 0 = lower, 1 = upper
    friend bool operator==(const TTerm&, const TTerm&) = default;
};

struct RelTerm {
    std::string from;
    bool plus = true;
    std::string to;
    friend bool operator==(const RelTerm&, const RelTerm&) = default;
};

struct FreshVar {
    std::string name;
    friend bool operator==(const FreshVar&, const FreshVar&) = default;
};

struct Const {
    Rational value;
    friend bool operator==(const Const&, const Const&) = default;
};

// A value term, possibly under 1 - (.). Constants are kept uncomplemented.
struct Term {
    std::variant<Const, FreshVar, TTerm, RelTerm> base;
    bool complemented = false;

    static Term constant(Rational v) { return Term{Const{v}, false}; }
    static Term var(std::string name) { return Term{FreshVar{std::move(name)}, false}; }
    static Term t(TTerm t) { return Term{std::move(t), false}; }
    static Term rel(RelTerm r) { return Term{std::move(r), false}; }
    Term complement() const;
    friend bool operator==(const Term&, const Term&) = default;
};

struct FormulaValue {
    std::string world;
    int index = 1;
    Formula formula;
    friend bool operator==(const FormulaValue&, const FormulaValue&) = default;
};

using Structure = std::variant<FormulaValue, Term>;

// Constraints are kept oriented: a formula value, when present, is on the left.
struct Constraint {
    Structure lhs;
    Rel rel;
    Structure rhs;

    static Constraint make(Structure lhs, Rel rel, Structure rhs);
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

std::string to_string(const Term& t);
std::string to_string(const Structure& s);
std::string to_string(const Constraint& c);

// Text form, one constraint per line: "w:1:p -> q < c", "w R+ u >= 1/2",
// "t0@w:1 < t1.2@w:1", "1-c <= d". The relation must be its own
// whitespace-separated token; '#' starts a comment. "a ~= b" abbreviates the
// two lines "a <= b" and "a >= b" and is accepted by parse_constraints only.
Constraint parse_constraint(const std::string& line);
std::vector<Constraint> parse_constraints(const std::string& text);

}  // namespace kgtab
