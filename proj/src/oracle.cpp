#include <algorithm>
#include <functional>

#include "kgtab/errors.hpp"
#include "kgtab/solver.hpp"

namespace kgtab {

// Any solution orders the atoms {x, 1-x, 0, 1} symmetrically about 1/2, and at
// most m distinct atom values lie strictly between 0 and 1/2. Sending them in
// order to 1/N, 2/N, ... with N = 2(m+1), and mirroring, preserves every
// comparison, so the grid is complete for systems whose constants are 0 and 1.
SolveResult oracle_solve(const LinearSystem& sys, std::size_t max_vars) {
    const std::size_t m = sys.variables.size();
    if (m > max_vars)
        throw ResourceLimit("oracle limited to " + std::to_string(max_vars) + " variables, system has " +
                            std::to_string(m));
    for (const auto& c : sys.constraints)
        for (const Atom* a : {&c.lhs, &c.rhs})
            if (a->is_constant() && a->constant != 0 && a->constant != 1)
                throw std::invalid_argument("oracle_solve handles only the constants 0 and 1");

    const int N = 2 * static_cast<int>(m + 1);
    std::vector<int> grid(m, 0);
    auto units = [&](const Atom& a) {
        if (a.is_constant()) return a.constant == 0 ? 0 : N;
        return a.complemented ? N - grid[a.var] : grid[a.var];
    };
    auto cmp = [](int a, Rel r, int b) {
        switch (r) {
            case Rel::Lt: return a < b;
            case Rel::Le: return a <= b;
            case Rel::Gt: return a > b;
            case Rel::Ge: return a >= b;
            case Rel::Eq: return a == b;
        }
        return false;
    };

    // Every check is attached to the highest variable it mentions.
    std::vector<std::vector<std::function<bool()>>> checks(m + 1);
    auto slot = [&](std::initializer_list<int> vars) {
        int hi = -1;
        for (int v : vars) hi = std::max(hi, v);
        return static_cast<std::size_t>(hi + 1);
    };
    for (const auto& c : sys.constraints)
        checks[slot({c.lhs.var, c.rhs.var})].push_back([&, &c = c] { return cmp(units(c.lhs), c.rel, units(c.rhs)); });
    for (const auto& p : sys.pairs) {
        checks[slot({p.lower, p.upper})].push_back([&, &p = p] { return grid[p.lower] < grid[p.upper]; });
        for (int s : sys.groups[p.group].members) {
            if (s == p.lower || s == p.upper) continue;
            checks[slot({p.lower, p.upper, s})].push_back(
                [&, &p = p, s] { return !(grid[p.lower] < grid[s] && grid[s] < grid[p.upper]); });
        }
    }

    auto passes = [&](std::size_t level) {
        return std::all_of(checks[level].begin(), checks[level].end(), [](const auto& f) { return f(); });
    };
    std::function<bool(std::size_t)> search = [&](std::size_t v) -> bool {
        if (v == m) return true;
        for (int k = 0; k <= N; ++k) {
            grid[v] = k;
            if (passes(v + 1) && search(v + 1)) return true;
        }
        return false;
    };

    SolveResult result;
    result.sat = passes(0) && search(0);
    if (result.sat)
        for (int k : grid) result.witness.values.push_back(Rational(k, N));
    return result;
}

}  // namespace kgtab
