#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgtab/constraints.hpp"
#include "kgtab/rational.hpp"

namespace kgtab {

// x, 1 - x, or a constant.
struct Atom {
    int var = -1;  // -1 for a constant
    bool complemented = false;
    Rational constant;

    static Atom of(int v, bool comp = false) { return Atom{v, comp, Rational(0)}; }
    static Atom value(Rational c) { return Atom{-1, false, c}; }
    bool is_constant() const { return var < 0; }
};

struct LinearConstraint {
    Atom lhs;
    Rel rel;
    Atom rhs;
    std::string origin;  // printed source constraint, empty for pair constraints
};

struct GapGroup {
    std::string world;
    int t_index;
    std::vector<int> members;
};

struct TPair {
    int lower, upper, group;
};

struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<LinearConstraint> constraints;
    std::vector<TPair> pairs;
    std::vector<GapGroup> groups;

    int intern(const std::string& name);
    std::optional<int> lookup(const std::string& name) const;

private:
    std::map<std::string, int> index_;
};

// Variable names used by the translation; also the keys of Witness lookups.
std::string variable_name(const FormulaValue& fv);
std::string variable_name(const Term& t);  // name of the uncomplemented base; not for constants

LinearSystem translate_branch(const std::vector<Constraint>& constraints);

struct Witness {
    std::vector<Rational> values;
    Rational at(const LinearSystem& sys, const std::string& name) const;
    Rational eval(const Atom& a) const {
        if (a.is_constant()) return a.constant;
        return a.complemented ? 1 - values[a.var] : values[a.var];
    }
};

struct SolveResult {
    bool sat = false;
    Witness witness;
    std::size_t splits = 0;
};

struct SolveOptions {
    std::size_t max_splits = 200000;
};

// Exact decision of the system including the gap condition. Throws
// ResourceLimit when more than max_splits gap case-splits are needed.
SolveResult solve(const LinearSystem& sys, const SolveOptions& opts = {});

// Exhaustive search on the grid k / (2(m+1)). Constants must be 0 or 1.
// Throws ResourceLimit when the system has more than max_vars variables.
SolveResult oracle_solve(const LinearSystem& sys, std::size_t max_vars = 8);

// Re-checks bounds, every constraint, every pair and the gap condition.
bool check_witness(const LinearSystem& sys, const Witness& w, std::string* failure = nullptr);

std::string dump_system(const LinearSystem& sys);

}  // namespace kgtab
