#include "kgtab/translate.hpp"

#include "kgtab/errors.hpp"

namespace kgtab {

StarMap::StarMap(Formula source) {
    auto vars = props(source);
    std::set<std::string> taken = vars;
    for (const auto& v : vars) {
        std::string s = v + "_star";
        while (taken.count(s)) s += "_";
        taken.insert(s);
        map_[v] = s;
    }
}

const std::string& StarMap::star(const std::string& var) const {
    auto it = map_.find(var);
    if (it == map_.end()) throw std::out_of_range("variable '" + var + "' has no starred copy");
    return it->second;
}

namespace {

Formula translate(Formula g, bool positive, const StarMap& stars);

Formula plus_rec(Formula g, const StarMap& stars) {
    using namespace f;
    switch (g.op()) {
        case Op::Var: return g;
        case Op::One: case Op::B: return one();
        case Op::Zero: case Op::N: return zero();
        case Op::Neg: return translate(g.child(0), false, stars);
        case Op::Conf: return inv(translate(g.child(0), false, stars));
        case Op::Inv: return inv(plus_rec(g.child(0), stars));
        case Op::And: case Op::IAnd:
            return land(plus_rec(g.child(0), stars), plus_rec(g.child(1), stars));
        case Op::Impl: case Op::IImpl:
            return impl(plus_rec(g.child(0), stars), plus_rec(g.child(1), stars));
        case Op::Box: case Op::IBox: return un(Op::Box1, plus_rec(g.child(0), stars));
        case Op::Dia: case Op::IDia: return un(Op::Dia1, plus_rec(g.child(0), stars));
        default: throw IllegalConnective("no translation for '" + std::string(op_keyword(g.op())) + "'");
    }
}

Formula minus_rec(Formula g, const StarMap& stars) {
    using namespace f;
    switch (g.op()) {
        case Op::Var: return var(stars.star(g.name()));
        case Op::One: case Op::N: return zero();
        case Op::Zero: case Op::B: return one();
        case Op::Neg: return translate(g.child(0), true, stars);
        case Op::Conf: return inv(translate(g.child(0), true, stars));
        case Op::Inv: return inv(minus_rec(g.child(0), stars));
        case Op::And: return lor(minus_rec(g.child(0), stars), minus_rec(g.child(1), stars));
        case Op::IAnd: return land(minus_rec(g.child(0), stars), minus_rec(g.child(1), stars));
        case Op::Impl: return coimpl(minus_rec(g.child(1), stars), minus_rec(g.child(0), stars));
        case Op::IImpl: return impl(minus_rec(g.child(0), stars), minus_rec(g.child(1), stars));
        case Op::Box: case Op::IDia: return un(Op::Dia2, minus_rec(g.child(0), stars));
        case Op::Dia: case Op::IBox: return un(Op::Box2, minus_rec(g.child(0), stars));
        default: throw IllegalConnective("no translation for '" + std::string(op_keyword(g.op())) + "'");
    }
}

Formula translate(Formula g, bool positive, const StarMap& stars) {
    return positive ? plus_rec(g, stars) : minus_rec(g, stars);
}

Formula join_rec(Formula g) {
    using namespace f;
    Op op = g.op();
    if (arity(op) == 0) return g;
    if (arity(op) == 2) return bin(op, join_rec(g.child(0)), join_rec(g.child(1)));
    Formula a = join_rec(g.child(0));
    switch (op) {
        case Op::Box1: return box(a);
        case Op::Dia1: return dia(a);
        case Op::Box2: return neg(dia(neg(a)));
        case Op::Dia2: return neg(box(neg(a)));
        default: return un(op, a);
    }
}

}  // namespace

Formula oplus(Formula g, const StarMap& stars) { return plus_rec(desugar(g, Logic::KGBL), stars); }

Formula ominus(Formula g, const StarMap& stars) { return minus_rec(desugar(g, Logic::KGBL), stars); }

Formula join(Formula g) {
    check_language(g, Logic::KGINV2);
    return join_rec(g);
}

Formula embed_inv_to_bl(Formula g) { return f::impl(f::bconst(), join(g)); }

Formula embed_bl_to_inv(Formula g) {
    StarMap stars(g);
    return f::land(oplus(g, stars), f::un(Op::SNot, ominus(g, stars)));
}

}  // namespace kgtab
