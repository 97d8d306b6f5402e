#include <algorithm>

#include "kgtab/errors.hpp"
#include "kgtab/tableau.hpp"

namespace kgtab {

namespace {

bool is_up(Rel r) { return r == Rel::Gt || r == Rel::Ge; }
bool is_down(Rel r) { return r == Rel::Lt || r == Rel::Le; }

const FormulaValue* formula_side(const Constraint& c) { return std::get_if<FormulaValue>(&c.lhs); }
const Term* term_side(const Constraint& c) { return std::get_if<Term>(&c.rhs); }

Constraint at(const std::string& w, int i, Formula f, Rel r, Term x) {
    return Constraint::make(FormulaValue{w, i, f}, r, std::move(x));
}
Constraint terms(Term a, Rel r, Term b) { return Constraint::make(std::move(a), r, std::move(b)); }
Term one() { return Term::constant(1); }
Term zero() { return Term::constant(0); }
Term rel_term(const std::string& from, bool plus, const std::string& to) { return Term::rel(RelTerm{from, plus, to}); }

std::string symbol(Op op) {
    switch (op) {
        case Op::And: return "&";
        case Op::IAnd: return "iand";
        case Op::Impl: return "->";
        case Op::IImpl: return "iimpl";
        default: return std::string(op_keyword(op));
    }
}

enum class Shape { Min, Max, Godel, Co };

Shape shape(Op op, int index) {
    switch (op) {
        case Op::And: return index == 1 ? Shape::Min : Shape::Max;
        case Op::IAnd: return Shape::Min;
        case Op::Impl: return index == 1 ? Shape::Godel : Shape::Co;
        case Op::IImpl: return Shape::Godel;
        default: throw IllegalConnective(std::string(op_keyword(op)) + " is not a core connective");
    }
}

bool branching(Shape s, Rel r) {
    switch (s) {
        case Shape::Min: return is_down(r);
        case Shape::Max: return is_up(r);
        case Shape::Godel: return true;
        case Shape::Co: return r != Rel::Gt;
    }
    return true;
}

std::pair<Rational, Rational> constant_value(Op op) {
    switch (op) {
        case Op::One: return {1, 0};
        case Op::Zero: return {0, 1};
        case Op::B: return {1, 1};
        default: return {0, 0};
    }
}

using Column = std::vector<Constraint>;

}  // namespace

std::vector<std::string> rule_ids(Logic logic) {
    std::vector<std::string> ids = {"inv", "const", "split="};
    std::vector<int> indices = {1};
    std::vector<Op> binary = {Op::And, Op::Impl};
    std::vector<Op> modal = {Op::Box, Op::Dia};
    if (logic == Logic::KGINV2) modal = {Op::Box, Op::Dia, Op::Box1, Op::Dia1, Op::Box2, Op::Dia2};
    if (logic == Logic::KGBL) {
        ids.insert(ids.end(), {"neg", "conf"});
        indices = {1, 2};
        binary = {Op::And, Op::IAnd, Op::Impl, Op::IImpl};
        modal = {Op::Box, Op::Dia, Op::IBox, Op::IDia};
    }
    for (int i : indices) {
        for (Op op : binary) {
            if (shape(op, i) == Shape::Co) {
                for (const char* c : {"_>", "_>=", "_<"}) ids.push_back(symbol(op) + "^" + std::to_string(i) + c);
            } else {
                for (const char* c : {"_>", "_<"}) ids.push_back(symbol(op) + "^" + std::to_string(i) + c);
            }
        }
        for (Op op : modal)
            for (const char* c : {"_>", "_<", "_~", "_="}) ids.push_back(symbol(op) + "^" + std::to_string(i) + c);
    }
    return ids;
}

std::vector<RuleInstance> applicable_rules(const Branch& b, Logic logic) {
    std::vector<RuleInstance> plain, split, modal, eq;
    std::map<std::string, const Constraint*> lower_halves;  // "w:i:M|X" -> the <= constraint
    for (const Constraint& c : b.constraints()) {
        const FormulaValue* fv = formula_side(c);
        const Term* x = term_side(c);
        if (fv && x && is_modal(fv->formula.op()) && c.rel == Rel::Le) {
            lower_halves[to_string(FormulaValue(*fv)) + "|" + to_string(*x)] = &c;
        }
    }
    for (const Constraint& c : b.constraints()) {
        const FormulaValue* fv = formula_side(c);
        const Term* x = term_side(c);
        if (!fv || !x) continue;
        Formula f = fv->formula;
        Op op = f.op();
        std::string key = to_string(c);
        auto push = [&](std::vector<RuleInstance>& into, std::string id, std::string k,
                        std::optional<Constraint> partner = std::nullopt, std::optional<std::string> target = std::nullopt) {
            if (b.applied(k)) return;
            into.push_back(RuleInstance{std::move(id), c, std::move(partner), std::move(target), std::move(k)});
        };
        if (op == Op::Var) continue;
        if (is_constant(op)) {
            push(plain, "const", key);
        } else if (op == Op::Inv || op == Op::Neg || op == Op::Conf) {
            push(plain, std::string(op_keyword(op)), key);
        } else if (!is_modal(op)) {
            if (c.rel == Rel::Eq) {
                push(plain, "split=", key);
                continue;
            }
            Shape s = shape(op, fv->index);
            std::string cls = is_up(c.rel) ? "_>" : "_<";
            if (s == Shape::Co && c.rel == Rel::Ge) cls = "_>=";
            push(branching(s, c.rel) ? split : plain, symbol(op) + "^" + std::to_string(fv->index) + cls, key);
        } else {
            std::string id = symbol(op) + "^" + std::to_string(fv->index);
            std::string pair_key = to_string(FormulaValue(*fv)) + "|" + to_string(*x);
            if (c.rel == Rel::Eq) {
                ModalSemantics ms = modal_semantics(op, fv->index, logic);
                for (const std::string& u : b.successors(fv->world, ms.plus))
                    push(eq, id + "_=", key + "@" + u, std::nullopt, u);
                continue;
            }
            if (c.rel == Rel::Ge && lower_halves.count(pair_key)) {
                const Constraint& lower = *lower_halves.at(pair_key);
                RuleInstance r{id + "_~", lower, c, std::nullopt, "~" + to_string(lower)};
                if (!b.applied(r.key)) modal.push_back(std::move(r));
                continue;
            }
            if (c.rel == Rel::Le) {
                Constraint upper = c;
                upper.rel = Rel::Ge;
                if (b.contains(upper)) continue;
            }
            push(modal, id + (is_up(c.rel) ? "_>" : "_<"), key);
        }
    }
    std::vector<RuleInstance> out = std::move(plain);
    for (auto* group : {&split, &modal, &eq})
        for (auto& r : *group) out.push_back(std::move(r));
    return out;
}

std::vector<Branch> apply_rule(const Branch& b, const RuleInstance& r, Logic logic) {
    const FormulaValue* fv = formula_side(r.principal);
    const Term* xp = term_side(r.principal);
    auto available = applicable_rules(b, logic);
    bool listed = std::any_of(available.begin(), available.end(),
                              [&](const RuleInstance& a) { return a.key == r.key && a.rule_id == r.rule_id; });
    if (!fv || !xp || !listed)
        throw NotApplicable("rule " + r.rule_id + " does not apply to " + to_string(r.principal));
    const std::string& w = fv->world;
    const int i = fv->index;
    const Formula f = fv->formula;
    const Term X = *xp;
    const Rel rel = r.principal.rel;
    const Op op = f.op();

    Branch base = b;
    base.mark_applied(r.key);
    std::vector<Column> cols;

    if (is_constant(op)) {
        auto [v1, v2] = constant_value(op);
        cols = {{terms(Term::constant(i == 1 ? v1 : v2), rel, X)}};
    } else if (op == Op::Inv) {
        cols = {{at(w, i, f.child(0), flip(rel), X.complement())}};
    } else if (op == Op::Neg) {
        cols = {{at(w, 3 - i, f.child(0), rel, X)}};
    } else if (op == Op::Conf) {
        cols = {{at(w, 3 - i, f.child(0), flip(rel), X.complement())}};
    } else if (!is_modal(op) && rel == Rel::Eq) {
        cols = {{at(w, i, f, Rel::Le, X), at(w, i, f, Rel::Ge, X)}};
    } else if (!is_modal(op)) {
        Formula a = f.child(0), bb = f.child(1);
        auto A = [&](Rel q, Term t) { return at(w, i, a, q, std::move(t)); };
        auto B = [&](Rel q, Term t) { return at(w, i, bb, q, std::move(t)); };
        switch (shape(op, i)) {
            case Shape::Min:
                if (is_up(rel)) cols = {{A(rel, X), B(rel, X)}};
                else cols = {{A(rel, X)}, {B(rel, X)}};
                break;
            case Shape::Max:
                if (is_up(rel)) cols = {{A(rel, X)}, {B(rel, X)}};
                else cols = {{A(rel, X), B(rel, X)}};
                break;
            case Shape::Godel: {
                Term c = Term::var(base.fresh_var());
                if (is_up(rel))
                    cols = {{B(rel, X)}, {terms(one(), rel, X), B(Rel::Le, c), B(Rel::Ge, c), A(Rel::Le, c)}};
                else
                    cols = {{terms(one(), rel, X)}, {B(rel, X), A(Rel::Le, c), A(Rel::Ge, c), B(Rel::Lt, c)}};
                break;
            }
            case Shape::Co: {
                // value is b when b > a, otherwise 0
                Term c = Term::var(base.fresh_var());
                if (rel == Rel::Gt)
                    cols = {{B(rel, X), A(Rel::Le, c), A(Rel::Ge, c), B(Rel::Gt, c)}};
                else if (rel == Rel::Ge)
                    cols = {{terms(X, Rel::Le, zero())}, {B(rel, X), A(Rel::Le, c), A(Rel::Ge, c), B(Rel::Gt, c)}};
                else
                    cols = {{B(rel, X)}, {terms(zero(), rel, X), A(Rel::Ge, c), B(Rel::Le, c), B(Rel::Ge, c)}};
                break;
            }
        }
    } else {
        // Box-like modalities take the largest T element below the infimum of
        // S -> phi, diamond-like ones the smallest T element above the
        // supremum of S & phi; the same scheme covers every modality and index.
        ModalSemantics ms = modal_semantics(op, i, logic);
        Formula phi = f.child(0);
        const int ci = ms.child_index;
        auto M = [&](Term t) { return at(w, i, f, Rel::Eq, std::move(t)); };
        char cls = r.rule_id.back();
        if (cls == '=') {
            const std::string& u = *r.target;
            Term s = rel_term(w, ms.plus, u);
            if (ms.box_like)
                cols = {{at(u, ci, phi, Rel::Ge, X)}, {at(u, ci, phi, Rel::Lt, X), at(u, ci, phi, Rel::Ge, s)}};
            else
                cols = {{terms(s, Rel::Le, X)}, {at(u, ci, phi, Rel::Le, X), terms(s, Rel::Gt, X)}};
        } else {
            if (cls == '~') {
                base.mark_applied(to_string(r.principal));
                base.mark_applied(to_string(*r.partner));
            }
            std::string v = base.fresh_world(w);
            int k = base.fresh_instance(w, ms.t_index);
            Term t0 = Term::t(TTerm{w, ms.t_index, k, 0}), t1 = Term::t(TTerm{w, ms.t_index, k, 1});
            Term s = rel_term(w, ms.plus, v);
            if (ms.box_like) {
                Column witness = {at(v, ci, phi, Rel::Lt, s), at(v, ci, phi, Rel::Lt, t1)};
                Column right;
                if (cls == '>') {
                    cols.push_back({M(one()), terms(one(), rel, X)});
                    right = {M(t0), terms(t0, rel, X)};
                } else if (cls == '<') {
                    cols.push_back({terms(one(), rel, X)});
                    right = {terms(t0, rel, X)};
                } else {
                    cols.push_back({M(one()), terms(X, Rel::Eq, one())});
                    right = {M(t0), terms(X, Rel::Eq, t0)};
                }
                right.insert(right.end(), witness.begin(), witness.end());
                cols.push_back(std::move(right));
            } else {
                Column witness = {terms(s, Rel::Gt, t0), at(v, ci, phi, Rel::Gt, t0)};
                Column right;
                if (cls == '>') {
                    cols.push_back({terms(zero(), rel, X)});
                    right = {terms(t1, rel, X)};
                } else if (cls == '<') {
                    cols.push_back({M(zero()), terms(zero(), rel, X)});
                    right = {M(t1), terms(t1, rel, X)};
                } else {
                    cols.push_back({M(zero()), terms(X, Rel::Eq, zero())});
                    right = {M(t1), terms(X, Rel::Eq, t1)};
                }
                right.insert(right.end(), witness.begin(), witness.end());
                cols.push_back(std::move(right));
            }
        }
    }

    std::vector<Branch> out;
    for (const Column& col : cols) {
        Branch child = base;
        for (const Constraint& c : col) child.add(c);
        out.push_back(std::move(child));
    }
    return out;
}

}  // namespace kgtab
