#include <algorithm>
#include <functional>
#include <set>

#include "kgtab/errors.hpp"
#include "kgtab/solver.hpp"

namespace kgtab {

namespace {

// Order graph over the atoms x, 1-x and the constants. An edge a -> b means
// value(a) <= value(b), or < when strict. Every edge is stored together with
// its mirror image 1-b -> 1-a, so the graph is closed under complement.
class OrderGraph {
public:
    explicit OrderGraph(const LinearSystem& sys) : n_(static_cast<int>(sys.variables.size())) {
        std::set<Rational> cs{Rational(0), Rational(1, 2), Rational(1)};
        for (const auto& c : sys.constraints)
            for (const Atom* a : {&c.lhs, &c.rhs})
                if (a->is_constant()) {
                    cs.insert(a->constant);
                    cs.insert(1 - a->constant);
                }
        consts_.assign(cs.begin(), cs.end());
        adj_.resize(num_nodes());

        for (std::size_t k = 0; k + 1 < consts_.size(); ++k) add(const_node(k), const_node(k + 1), true);
        for (int v = 0; v < n_; ++v) {
            add(const_node(0), 2 * v, false);
            add(2 * v, const_node(consts_.size() - 1), false);
        }
        for (const auto& c : sys.constraints) add_constraint(node(c.lhs), c.rel, node(c.rhs));
        for (const auto& p : sys.pairs) add(2 * p.lower, 2 * p.upper, true);
    }

    int num_nodes() const { return 2 * n_ + static_cast<int>(consts_.size()); }
    int var_node(int v) const { return 2 * v; }
    int half() const { return const_node(std::lower_bound(consts_.begin(), consts_.end(), Rational(1, 2)) - consts_.begin()); }

    void add(int a, int b, bool strict) {
        adj_[a].push_back({b, strict});
        adj_[mirror(b)].push_back({mirror(a), strict});
    }

    // Decides the conjunctive order system; on success fills one value per variable.
    bool solve_leaf(std::vector<Rational>& values) {
        std::vector<int> comp;
        int ncomp = 0;
        for (;;) {
            ncomp = scc(comp);
            for (int u = 0; u < num_nodes(); ++u)
                for (auto [v, strict] : adj_[u])
                    if (strict && comp[u] == comp[v]) return false;
            bool merged = false;
            int h = half();
            for (int v = 0; v < n_; ++v) {
                if (comp[2 * v] == comp[2 * v + 1] && comp[2 * v] != comp[h]) {
                    add(2 * v, h, false);
                    add(h, 2 * v, false);
                    merged = true;
                }
            }
            if (!merged) break;
        }

        std::vector<std::vector<int>> succ(ncomp);
        std::vector<int> indeg(ncomp, 0), mirror_of(ncomp), constant_at(ncomp, -1);
        for (int u = 0; u < num_nodes(); ++u) {
            mirror_of[comp[u]] = comp[mirror(u)];
            if (u >= 2 * n_) constant_at[comp[u]] = u - 2 * n_;
            for (auto [v, strict] : adj_[u]) {
                if (comp[u] == comp[v]) continue;
                succ[comp[u]].push_back(comp[v]);
                ++indeg[comp[v]];
            }
        }

        std::vector<int> bottom, top;
        int middle = -1;
        std::vector<bool> placed(ncomp, false);
        std::set<int> ready;
        for (int c = 0; c < ncomp; ++c)
            if (indeg[c] == 0) ready.insert(c);
        std::size_t count = 0;
        auto release = [&](int c) {
            for (int d : succ[c])
                if (--indeg[d] == 0 && !placed[d]) ready.insert(d);
        };
        while (count < static_cast<std::size_t>(ncomp)) {
            auto it = std::find_if(ready.begin(), ready.end(), [&](int c) { return mirror_of[c] != c; });
            if (it == ready.end()) {
                if (ready.size() != 1 || middle != -1) throw std::logic_error("order graph lost its symmetry");
                middle = *ready.begin();
                ready.clear();
                placed[middle] = true;
                ++count;
                release(middle);
                continue;
            }
            int c = *it, m = mirror_of[c];
            ready.erase(it);
            ready.erase(m);
            placed[c] = placed[m] = true;
            count += 2;
            bottom.push_back(c);
            top.push_back(m);
            release(c);
            release(m);
        }
        std::vector<int> seq = bottom;
        if (middle != -1) seq.push_back(middle);
        seq.insert(seq.end(), top.rbegin(), top.rend());

        std::vector<Rational> class_value(ncomp);
        std::size_t last = 0;
        for (std::size_t i = 1; i < seq.size(); ++i) {
            if (constant_at[seq[i]] < 0) continue;
            Rational a = consts_[constant_at[seq[last]]], b = consts_[constant_at[seq[i]]];
            std::int64_t gap = static_cast<std::int64_t>(i - last);
            for (std::size_t j = last; j <= i; ++j) class_value[seq[j]] = a + (b - a) * Rational(static_cast<std::int64_t>(j - last), gap);
            last = i;
        }
        values.assign(n_, Rational(0));
        for (int v = 0; v < n_; ++v) values[v] = class_value[comp[2 * v]];
        return true;
    }

    // 1 if a strict path leads from a to b, 0 if only a non-strict one, -1 if none.
    int reach(int a, int b) const {
        std::vector<char> seen(2 * num_nodes(), 0);
        std::vector<std::pair<int, int>> todo = {{a, 0}};
        seen[2 * a] = 1;
        int best = -1;
        while (!todo.empty()) {
            auto [u, s] = todo.back();
            todo.pop_back();
            if (u == b) best = std::max(best, s);
            if (best == 1) break;
            for (auto [v, strict] : adj_[u]) {
                int t = s | (strict ? 1 : 0);
                if (!seen[2 * v + t]) {
                    seen[2 * v + t] = 1;
                    todo.push_back({v, t});
                }
            }
        }
        return best;
    }

    int node(const Atom& a) const {
        if (a.is_constant())
            return const_node(std::lower_bound(consts_.begin(), consts_.end(), a.constant) - consts_.begin());
        return 2 * a.var + (a.complemented ? 1 : 0);
    }

private:
    int const_node(std::size_t k) const { return 2 * n_ + static_cast<int>(k); }
    int mirror(int u) const {
        if (u < 2 * n_) return u ^ 1;
        return 2 * n_ + (static_cast<int>(consts_.size()) - 1 - (u - 2 * n_));
    }

    void add_constraint(int a, Rel rel, int b) {
        switch (rel) {
            case Rel::Lt: add(a, b, true); break;
            case Rel::Le: add(a, b, false); break;
            case Rel::Gt: add(b, a, true); break;
            case Rel::Ge: add(b, a, false); break;
            case Rel::Eq:
                add(a, b, false);
                add(b, a, false);
                break;
        }
    }

    // Iterative Tarjan; returns the number of components.
    int scc(std::vector<int>& comp) const {
        int n = num_nodes();
        comp.assign(n, -1);
        std::vector<int> index(n, -1), low(n, 0), stack;
        std::vector<bool> on_stack(n, false);
        std::vector<std::pair<int, std::size_t>> call;
        int counter = 0, ncomp = 0;
        for (int root = 0; root < n; ++root) {
            if (index[root] != -1) continue;
            call.push_back({root, 0});
            while (!call.empty()) {
                auto& [u, i] = call.back();
                if (i == 0 && index[u] == -1) {
                    index[u] = low[u] = counter++;
                    stack.push_back(u);
                    on_stack[u] = true;
                }
                if (i < adj_[u].size()) {
                    int v = adj_[u][i++].first;
                    if (index[v] == -1) {
                        call.push_back({v, 0});
                    } else if (on_stack[v]) {
                        low[u] = std::min(low[u], index[v]);
                    }
                    continue;
                }
                if (low[u] == index[u]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if (w == u) break;
                    }
                    ++ncomp;
                }
                int done = u;
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            }
        }
        return ncomp;
    }

    int n_;
    std::vector<Rational> consts_;
    std::vector<std::vector<std::pair<int, bool>>> adj_;
};

struct GapViolation {
    int lower, upper, inner;
};

// Applies every gap disjunction "s <= lower or upper <= s" whose other side is
// already refuted by a strict path. Returns false when both sides are refuted.
bool propagate_gaps(const LinearSystem& sys, OrderGraph& g) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : sys.pairs)
            for (int m : sys.groups[p.group].members) {
                if (m == p.lower || m == p.upper) continue;
                int l = g.var_node(p.lower), u = g.var_node(p.upper), s = g.var_node(m);
                bool below = g.reach(l, s) != 1, above = g.reach(s, u) != 1;
                if (!below && !above) return false;
                if (below && above) continue;
                if (below && g.reach(s, l) == -1) {
                    g.add(s, l, false);
                    changed = true;
                } else if (above && g.reach(u, s) == -1) {
                    g.add(u, s, false);
                    changed = true;
                }
            }
    }
    return true;
}

std::optional<GapViolation> find_gap_violation(const LinearSystem& sys, const std::vector<Rational>& val) {
    for (const auto& p : sys.pairs)
        for (int s : sys.groups[p.group].members) {
            if (s == p.lower || s == p.upper) continue;
            if (val[p.lower] < val[s] && val[s] < val[p.upper]) return GapViolation{p.lower, p.upper, s};
        }
    return std::nullopt;
}

}  // namespace

SolveResult solve(const LinearSystem& sys, const SolveOptions& opts) {
    SolveResult result;
    const OrderGraph base(sys);
    std::vector<std::pair<int, int>> decisions;  // (a, b): value(a) <= value(b)

    std::function<bool()> search = [&]() -> bool {
        OrderGraph g = base;
        for (auto [a, b] : decisions) g.add(g.var_node(a), g.var_node(b), false);
        if (!propagate_gaps(sys, g)) return false;
        std::vector<Rational> values;
        if (!g.solve_leaf(values)) return false;
        auto violation = find_gap_violation(sys, values);
        if (!violation) {
            result.witness.values = std::move(values);
            return true;
        }
        if (++result.splits > opts.max_splits)
            throw ResourceLimit("gap case-split limit of " + std::to_string(opts.max_splits) + " exceeded");
        decisions.push_back({violation->inner, violation->lower});
        if (search()) return true;
        decisions.back() = {violation->upper, violation->inner};
        bool ok = search();
        decisions.pop_back();
        return ok;
    };
    result.sat = search();
    return result;
}

bool check_witness(const LinearSystem& sys, const Witness& w, std::string* failure) {
    auto fail = [&](const std::string& why) {
        if (failure) *failure = why;
        return false;
    };
    if (w.values.size() != sys.variables.size()) return fail("witness has the wrong number of values");
    for (std::size_t v = 0; v < w.values.size(); ++v)
        if (!in_unit_interval(w.values[v])) return fail(sys.variables[v] + " outside [0,1]");
    for (const auto& c : sys.constraints)
        if (!holds(w.eval(c.lhs), c.rel, w.eval(c.rhs))) return fail("violated: " + c.origin);
    for (const auto& p : sys.pairs)
        if (!(w.values[p.lower] < w.values[p.upper]))
            return fail("pair not ordered: " + sys.variables[p.lower] + " < " + sys.variables[p.upper]);
    if (auto g = find_gap_violation(sys, w.values))
        return fail(sys.variables[g->inner] + " lies strictly between " + sys.variables[g->lower] + " and " +
                    sys.variables[g->upper]);
    return true;
}

}  // namespace kgtab
