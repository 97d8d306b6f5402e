#include "kgtab/kripke.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "kgtab/errors.hpp"

namespace kgtab {

Model::Model(std::vector<std::string> worlds) {
    for (auto& w : worlds) add_world(w);
}

std::size_t Model::add_world(const std::string& name) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    std::size_t i = worlds_.size();
    worlds_.push_back(name);
    index_[name] = i;
    for (auto* rel : {&plus_, &minus_}) {
        for (auto& row : *rel) row.push_back(0);
        rel->emplace_back(i + 1, Rational(0));
    }
    for (auto* v : {&v1_, &v2_})
        for (auto& [_, vals] : *v) vals.push_back(0);
    return i;
}

std::size_t Model::index_of(const std::string& world) const {
    auto it = index_.find(world);
    if (it == index_.end()) throw UnknownWorld(world);
    return it->second;
}

Rational Model::rel(bool plus, std::size_t from, std::size_t to) const {
    return (plus ? plus_ : minus_).at(from).at(to);
}

void Model::set_rel(bool plus, std::size_t from, std::size_t to, Rational value) {
    (plus ? plus_ : minus_).at(from).at(to) = value;
}

Rational Model::val(int index, const std::string& var, std::size_t world) const {
    const auto& v = index == 1 ? v1_ : v2_;
    auto it = v.find(var);
    if (it == v.end()) return 0;
    return it->second.at(world);
}

void Model::set_val(int index, const std::string& var, std::size_t world, Rational value) {
    auto& v = index == 1 ? v1_ : v2_;
    auto it = v.find(var);
    if (it == v.end()) it = v.emplace(var, std::vector<Rational>(worlds_.size(), Rational(0))).first;
    it->second.at(world) = value;
}

std::set<std::string> Model::variables() const {
    std::set<std::string> out;
    for (auto& [k, _] : v1_) out.insert(k);
    for (auto& [k, _] : v2_) out.insert(k);
    return out;
}

FModel::FModel(Model m) : base(std::move(m)) {
    std::set<Rational> bounds{Rational(0), Rational(1)};
    T1.assign(base.num_worlds(), bounds);
    T2.assign(base.num_worlds(), bounds);
}

void FModel::add_t(int index, std::size_t world, Rational value) {
    (index == 1 ? T1 : T2).at(world).insert(value);
}

ModalSemantics modal_semantics(Op op, int index, Logic logic) {
    if (logic == Logic::KGBL) {
        bool box = op == Op::Box || op == Op::IBox;
        if (index == 1) return {box, true, 1, 1};
        bool box_like = op == Op::Dia || op == Op::IBox;
        return {box_like, false, 2, 2};
    }
    switch (op) {
        case Op::Box: case Op::Box1: return {true, true, 1, 1};
        case Op::Dia: case Op::Dia1: return {false, true, 1, 1};
        case Op::Box2: return {true, false, 1, 2};
        case Op::Dia2: return {false, false, 1, 2};
        default: throw IllegalConnective("not a modality");
    }
}

namespace {

using Vec = std::vector<Rational>;
struct Pair {
    Vec v1, v2;
};

Rational godel_impl(const Rational& a, const Rational& b) { return a <= b ? Rational(1) : b; }
Rational co_impl(const Rational& a, const Rational& b) { return a <= b ? Rational(0) : a; }

using Snap = std::function<Rational(std::size_t world, int t_index, const Rational& raw, bool box_like)>;

class Evaluator {
public:
    Evaluator(const Model& m, Logic logic, Snap snap) : m_(m), logic_(logic), snap_(std::move(snap)) {}

    std::vector<ValuePair> run(Formula g) {
        check_language(g, logic_);
        const Pair& p = eval(g);
        std::vector<ValuePair> out;
        for (std::size_t w = 0; w < m_.num_worlds(); ++w) out.push_back({p.v1[w], p.v2[w]});
        return out;
    }

private:
    bool bl() const { return logic_ == Logic::KGBL; }

    const Pair& eval(Formula g) {
        if (auto it = memo_.find(g.id()); it != memo_.end()) return it->second;
        Pair p = compute(g);
        if (!bl())
            for (std::size_t w = 0; w < p.v1.size(); ++w) p.v2[w] = 1 - p.v1[w];
        return memo_.emplace(g.id(), std::move(p)).first->second;
    }

    Pair constant(Rational a, Rational b) const { return {Vec(m_.num_worlds(), a), Vec(m_.num_worlds(), b)}; }

    template <class F>
    Pair map1(Formula g, F fn) {
        const Pair& a = eval(g.child(0));
        Pair out{Vec(a.v1.size()), Vec(a.v1.size())};
        for (std::size_t w = 0; w < a.v1.size(); ++w) {
            auto [x, y] = fn(a.v1[w], a.v2[w]);
            out.v1[w] = x;
            out.v2[w] = y;
        }
        return out;
    }

    template <class F>
    Pair map2(Formula g, F fn) {
        const Pair& a = eval(g.child(0));
        const Pair& b = eval(g.child(1));
        Pair out{Vec(a.v1.size()), Vec(a.v1.size())};
        for (std::size_t w = 0; w < a.v1.size(); ++w) {
            auto [x, y] = fn(a.v1[w], a.v2[w], b.v1[w], b.v2[w]);
            out.v1[w] = x;
            out.v2[w] = y;
        }
        return out;
    }

    Vec modal(Formula g, int index) {
        ModalSemantics s = modal_semantics(g.op(), index, logic_);
        const Pair& a = eval(g.child(0));
        const Vec& phi = s.child_index == 1 ? a.v1 : a.v2;
        std::size_t n = m_.num_worlds();
        Vec out(n);
        for (std::size_t w = 0; w < n; ++w) {
            Rational acc = s.box_like ? 1 : 0;
            for (std::size_t u = 0; u < n; ++u) {
                Rational r = m_.rel(s.plus, w, u);
                if (s.box_like)
                    acc = std::min(acc, godel_impl(r, phi[u]));
                else
                    acc = std::max(acc, std::min(r, phi[u]));
            }
            out[w] = snap_ ? snap_(w, s.t_index, acc, s.box_like) : acc;
        }
        return out;
    }

    Pair compute(Formula g) {
        using R = Rational;
        using P = std::pair<R, R>;
        switch (g.op()) {
            case Op::Var: {
                Pair p{Vec(m_.num_worlds()), Vec(m_.num_worlds())};
                for (std::size_t w = 0; w < m_.num_worlds(); ++w) {
                    p.v1[w] = m_.val(1, g.name(), w);
                    p.v2[w] = m_.val(2, g.name(), w);
                }
                return p;
            }
            case Op::One: return constant(1, 0);
            case Op::Zero: return constant(0, 1);
            case Op::B: return constant(1, 1);
            case Op::N: return constant(0, 0);
            case Op::Inv: return map1(g, [](R x, R y) { return P{1 - x, 1 - y}; });
            case Op::Neg: return map1(g, [](R x, R y) { return P{y, x}; });
            case Op::Conf: return map1(g, [](R x, R y) { return P{1 - y, 1 - x}; });
            case Op::Delta: return map1(g, [](R x, R y) { return P{R(x == 1), R(y != 0)}; });
            case Op::SNot: return map1(g, [](R x, R y) { return P{R(x == 0), R(y != 1)}; });
            case Op::IDelta: return map1(g, [](R x, R y) { return P{R(x == 1), R(y == 1)}; });
            case Op::ISNot: return map1(g, [](R x, R y) { return P{R(x == 0), R(y == 0)}; });
            case Op::And:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{std::min(a1, b1), std::max(a2, b2)}; });
            case Op::Or:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{std::max(a1, b1), std::min(a2, b2)}; });
            case Op::IAnd:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{std::min(a1, b1), std::min(a2, b2)}; });
            case Op::IOr:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{std::max(a1, b1), std::max(a2, b2)}; });
            case Op::Impl:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{godel_impl(a1, b1), co_impl(b2, a2)}; });
            case Op::IImpl:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{godel_impl(a1, b1), godel_impl(a2, b2)}; });
            case Op::Coimpl:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{co_impl(a1, b1), godel_impl(b2, a2)}; });
            case Op::ICoimpl:
                return map2(g, [](R a1, R a2, R b1, R b2) { return P{co_impl(a1, b1), co_impl(a2, b2)}; });
            default: {
                Pair p;
                p.v1 = modal(g, 1);
                p.v2 = bl() ? modal(g, 2) : Vec(m_.num_worlds());
                return p;
            }
        }
    }

    const Model& m_;
    Logic logic_;
    Snap snap_;
    std::unordered_map<std::uint32_t, Pair> memo_;
};

}  // namespace

std::vector<ValuePair> eval_standard_all(const Model& m, Formula g, Logic logic) {
    return Evaluator(m, logic, nullptr).run(g);
}

std::vector<ValuePair> eval_fmodel_all(const FModel& m, Formula g, Logic logic) {
    Snap snap = [&m](std::size_t w, int t_index, const Rational& raw, bool box_like) {
        const auto& t = m.t_set(t_index, w);
        if (box_like) {
            auto it = t.upper_bound(raw);
            return *std::prev(it);
        }
        return *t.lower_bound(raw);
    };
    return Evaluator(m.base, logic, snap).run(g);
}

ValuePair eval_standard(const Model& m, Formula g, const std::string& world, Logic logic) {
    std::size_t w = m.index_of(world);
    return eval_standard_all(m, g, logic)[w];
}

ValuePair eval_fmodel(const FModel& m, Formula g, const std::string& world, Logic logic) {
    std::size_t w = m.base.index_of(world);
    return eval_fmodel_all(m, g, logic)[w];
}

namespace {

std::vector<std::size_t> reachable(const Model& m, const std::set<std::string>& roots) {
    std::vector<bool> seen(m.num_worlds(), false);
    std::deque<std::size_t> queue;
    for (auto& r : roots) {
        std::size_t i = m.index_of(r);
        if (!seen[i]) {
            seen[i] = true;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        std::size_t w = queue.front();
        queue.pop_front();
        for (std::size_t u = 0; u < m.num_worlds(); ++u) {
            if (!seen[u] && (m.rel(true, w, u) > 0 || m.rel(false, w, u) > 0)) {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) keep.push_back(i);
    return keep;
}

Model restrict(const Model& m, const std::vector<std::size_t>& keep) {
    Model out;
    for (auto i : keep) out.add_world(m.worlds()[i]);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < keep.size(); ++b) {
            out.set_rel(true, a, b, m.rel(true, keep[a], keep[b]));
            out.set_rel(false, a, b, m.rel(false, keep[a], keep[b]));
        }
    }
    for (int idx : {1, 2})
        for (auto& [var, vals] : m.valuation(idx))
            for (std::size_t a = 0; a < keep.size(); ++a) out.set_val(idx, var, a, vals[keep[a]]);
    return out;
}

}  // namespace

Model generated_submodel(const Model& m, const std::set<std::string>& roots) {
    return restrict(m, reachable(m, roots));
}

FModel generated_submodel(const FModel& m, const std::set<std::string>& roots) {
    auto keep = reachable(m.base, roots);
    FModel out(restrict(m.base, keep));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        out.T1[a] = m.T1[keep[a]];
        out.T2[a] = m.T2[keep[a]];
    }
    return out;
}

bool is_crisp(const Model& m) {
    for (std::size_t a = 0; a < m.num_worlds(); ++a)
        for (std::size_t b = 0; b < m.num_worlds(); ++b)
            for (bool plus : {true, false}) {
                Rational r = m.rel(plus, a, b);
                if (r != 0 && r != 1) return false;
            }
    return true;
}

}  // namespace kgtab
