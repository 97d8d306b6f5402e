#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kgtab/kripke.hpp"

namespace kgtab::testing {

// Exhaustive countermodel search for KGINV / KGINV2 formulas over F-models
// whose degrees all lie on the grid {0, 1/N, ..., 1}. Values are kept as
// integers k standing for k/N; the connectives are evaluated straight from
// their truth functions on the sugared formula, so nothing here goes through
// the library evaluator or the desugaring.
class GridSearch {
public:
    GridSearch(Formula f, Logic logic) : logic_(logic) {
        if (logic == Logic::KGBL) throw std::invalid_argument("GridSearch covers the single-valuation logics");
        compile(f);
        for (const auto& n : nodes_) {
            if (n.op == Op::Box2 || n.op == Op::Dia2) uses_minus_ = uses_t2_ = true;
            if (n.op == Op::Box || n.op == Op::Dia || n.op == Op::Box1 || n.op == Op::Dia1) uses_plus_ = true;
        }
    }

    struct Options {
        int worlds = 1;
        int N = 6;
        std::uint64_t max_models = 50'000'000;  // beyond this the space is sampled
        unsigned seed = 1;
    };

    // Number of models in the grid space for the options (saturating).
    std::uint64_t space(const Options& o) const {
        std::uint64_t total = 1;
        for (int r : radices(o)) {
            if (total > (UINT64_MAX / static_cast<std::uint64_t>(r))) return UINT64_MAX;
            total *= static_cast<std::uint64_t>(r);
        }
        return total;
    }

    bool exhaustive(const Options& o) const { return space(o) <= o.max_models; }

    // A model in which the formula has value < 1 at some world, if the search
    // finds one. `visited` receives the number of models examined.
    std::optional<FModel> find(const Options& o, std::uint64_t* visited = nullptr) {
        setup(o);
        std::vector<int> rad = radices(o);
        std::vector<int> digit(rad.size(), 0);
        std::uint64_t count = 0;
        auto report = [&](bool found) {
            if (visited) *visited = count;
            return found ? std::optional<FModel>(to_fmodel(digit, o)) : std::nullopt;
        };
        if (exhaustive(o)) {
            while (true) {
                ++count;
                if (refutes(digit)) return report(true);
                std::size_t k = 0;
                while (k < rad.size() && ++digit[k] == rad[k]) digit[k++] = 0;
                if (k == rad.size()) return report(false);
            }
        }
        std::mt19937_64 rng(o.seed);
        for (; count < o.max_models;) {
            for (std::size_t k = 0; k < rad.size(); ++k)
                digit[k] = std::uniform_int_distribution<int>(0, rad[k] - 1)(rng);
            ++count;
            if (refutes(digit)) return report(true);
        }
        return report(false);
    }

private:
    struct Node {
        Op op;
        int a = -1, b = -1;
        int var = -1;
    };

    int compile(Formula g) {
        Node n{g.op()};
        if (g.op() == Op::Var) {
            auto it = std::find(vars_.begin(), vars_.end(), g.name());
            n.var = static_cast<int>(it - vars_.begin());
            if (it == vars_.end()) vars_.push_back(g.name());
        }
        if (g.num_children() > 0) n.a = compile(g.child(0));
        if (g.num_children() > 1) n.b = compile(g.child(1));
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size()) - 1;
    }

    // Digit layout: valuations, R+, R-, T1 masks, T2 masks.
    std::vector<int> radices(const Options& o) const {
        const int n = o.worlds, N = o.N;
        std::vector<int> r;
        r.insert(r.end(), vars_.size() * n, N + 1);
        if (uses_plus_) r.insert(r.end(), n * n, N + 1);
        if (uses_minus_) r.insert(r.end(), n * n, N + 1);
        int masks = 1 << (N - 1);
        if (uses_plus_) r.insert(r.end(), n, masks);
        if (uses_t2_) r.insert(r.end(), n, masks);
        return r;
    }

    void setup(const Options& o) {
        n_ = o.worlds;
        N_ = o.N;
        vals_.assign(nodes_.size() * n_, 0);
        down1_.assign(n_ * (N_ + 1), 0);
        up1_ = down1_;
        down2_ = down1_;
        up2_ = down1_;
    }

    void snaps(int mask, int w, std::vector<int>& down, std::vector<int>& up) const {
        auto in_t = [&](int k) { return k == 0 || k == N_ || ((mask >> (k - 1)) & 1); };
        int last = 0;
        for (int k = 0; k <= N_; ++k) {
            if (in_t(k)) last = k;
            down[w * (N_ + 1) + k] = last;
        }
        last = N_;
        for (int k = N_; k >= 0; --k) {
            if (in_t(k)) last = k;
            up[w * (N_ + 1) + k] = last;
        }
    }

    bool refutes(const std::vector<int>& d) {
        const int n = n_, N = N_;
        std::size_t pos = 0;
        const int* val = d.data();
        pos += vars_.size() * n;
        const int* rp = uses_plus_ ? d.data() + pos : nullptr;
        if (uses_plus_) pos += n * n;
        const int* rm = uses_minus_ ? d.data() + pos : nullptr;
        if (uses_minus_) pos += n * n;
        if (uses_plus_) {
            for (int w = 0; w < n; ++w) snaps(d[pos + w], w, down1_, up1_);
            pos += n;
        }
        if (uses_t2_)
            for (int w = 0; w < n; ++w) snaps(d[pos + w], w, down2_, up2_);

        for (std::size_t k = 0; k < nodes_.size(); ++k) {
            const Node& nd = nodes_[k];
            int* out = &vals_[k * n];
            const int* A = nd.a >= 0 ? &vals_[nd.a * n] : nullptr;
            const int* B = nd.b >= 0 ? &vals_[nd.b * n] : nullptr;
            for (int w = 0; w < n; ++w) {
                int v = 0;
                switch (nd.op) {
                    case Op::Var: v = val[nd.var * n + w]; break;
                    case Op::One: v = N; break;
                    case Op::Zero: v = 0; break;
                    case Op::Inv: v = N - A[w]; break;
                    case Op::SNot: v = A[w] == 0 ? N : 0; break;
                    case Op::Delta: v = A[w] == N ? N : 0; break;
                    case Op::And: v = std::min(A[w], B[w]); break;
                    case Op::Or: v = std::max(A[w], B[w]); break;
                    case Op::Impl: v = A[w] <= B[w] ? N : B[w]; break;
                    case Op::Coimpl: v = A[w] > B[w] ? A[w] : 0; break;
                    case Op::Box: case Op::Box1: case Op::Box2: {
                        const int* R = nd.op == Op::Box2 ? rm : rp;
                        int m = N;
                        for (int u = 0; u < n; ++u) m = std::min(m, R[w * n + u] <= A[u] ? N : A[u]);
                        v = (nd.op == Op::Box2 ? down2_ : down1_)[w * (N + 1) + m];
                        break;
                    }
                    case Op::Dia: case Op::Dia1: case Op::Dia2: {
                        const int* R = nd.op == Op::Dia2 ? rm : rp;
                        int m = 0;
                        for (int u = 0; u < n; ++u) m = std::max(m, std::min(R[w * n + u], A[u]));
                        v = (nd.op == Op::Dia2 ? up2_ : up1_)[w * (N + 1) + m];
                        break;
                    }
                    default: throw std::invalid_argument("GridSearch: unexpected connective");
                }
                out[w] = v;
            }
        }
        const int* root = &vals_[(nodes_.size() - 1) * n];
        for (int w = 0; w < n; ++w)
            if (root[w] < N) return true;
        return false;
    }

    FModel to_fmodel(const std::vector<int>& d, const Options& o) const {
        const int n = o.worlds, N = o.N;
        Model m;
        for (int w = 0; w < n; ++w) m.add_world("w" + std::to_string(w));
        std::size_t pos = 0;
        for (std::size_t v = 0; v < vars_.size(); ++v)
            for (int w = 0; w < n; ++w) m.set_val(1, vars_[v], w, Rational(d[pos++], N));
        for (bool plus : {true, false}) {
            if (plus ? !uses_plus_ : !uses_minus_) continue;
            for (int w = 0; w < n; ++w)
                for (int u = 0; u < n; ++u) m.set_rel(plus, w, u, Rational(d[pos++], N));
        }
        FModel fm(m);
        for (int idx : {1, 2}) {
            if (idx == 1 ? !uses_plus_ : !uses_t2_) continue;
            for (int w = 0; w < n; ++w, ++pos)
                for (int k = 1; k < N; ++k)
                    if ((d[pos] >> (k - 1)) & 1) fm.add_t(idx, w, Rational(k, N));
        }
        return fm;
    }

    Logic logic_;
    std::vector<Node> nodes_;
    std::vector<std::string> vars_;
    bool uses_plus_ = false, uses_minus_ = false, uses_t2_ = false;
    int n_ = 1, N_ = 6;
    std::vector<int> vals_, down1_, up1_, down2_, up2_;
};

// The standard battery: one world at N = 6 and two worlds at N = 4, both
// exhaustive, then two worlds at N = 6 (exhaustive when small enough,
// otherwise sampled). Returns the first countermodel found.
inline std::optional<FModel> grid_countermodel(Formula f, Logic logic, std::uint64_t sample = 2'000'000) {
    GridSearch gs(f, logic);
    GridSearch::Options o1{1, 6, 100'000'000, 1}, o2{2, 4, 100'000'000, 2}, o3{2, 6, sample, 3};
    for (const auto& o : {o1, o2, o3})
        if (auto m = gs.find(o)) return m;
    return std::nullopt;
}

}  // namespace kgtab::testing
