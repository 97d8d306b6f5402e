#pragma once

#include <random>
#include <string>
#include <vector>

#include "kgtab/constraints.hpp"

namespace kgtab::testing {

// Random constraint set over fresh variables, 0/1 and T-terms of world w.
// With `gaps`, two or three pairs share the gap group (w,1); the total number
// of variables stays at most six.
inline std::vector<Constraint> random_constraints(std::mt19937& rng, bool gaps) {
    std::uniform_int_distribution<int> coin(0, 1);
    int npairs = gaps ? 2 + (coin(rng) && coin(rng)) : std::uniform_int_distribution<int>(0, 1)(rng);
    int nfree = npairs == 3 ? 0 : std::uniform_int_distribution<int>(1, 6 - 2 * npairs)(rng);
    std::vector<Term> pool;
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < nfree; ++i) pool.push_back(Term::var(names[i]));
    for (int k = 0; k < npairs; ++k)
        for (int bound = 0; bound < 2; ++bound) pool.push_back(Term::t(TTerm{"w", 1, k, bound}));

    auto pick = [&]() {
        std::uniform_int_distribution<int> d(0, static_cast<int>(pool.size()) + 1);
        int k = d(rng);
        if (k == static_cast<int>(pool.size())) return Term::constant(0);
        if (k > static_cast<int>(pool.size())) return Term::constant(1);
        Term t = pool[k];
        return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? t.complement() : t;
    };
    std::vector<Constraint> out;
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    static const Rel rels[] = {Rel::Lt, Rel::Le, Rel::Gt, Rel::Ge, Rel::Eq};
    for (int i = 0; i < n; ++i) {
        Rel r = rels[std::uniform_int_distribution<int>(0, 4)(rng)];
        out.push_back(Constraint::make(pick(), r, pick()));
    }
    // every pair member appears on the branch
    for (int k = 0; k < npairs; ++k)
        out.push_back(Constraint::make(Term::t(TTerm{"w", 1, k, 0}), Rel::Ge, Term::constant(0)));
    return out;
}

}  // namespace kgtab::testing
