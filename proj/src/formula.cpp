#include "kgtab/formula.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "kgtab/errors.hpp"

namespace kgtab {

struct Node {
    Op op;
    std::string name;
    std::vector<Formula> kids;
    std::uint32_t id;
};

namespace {

using Key = std::tuple<Op, std::string, std::vector<std::uint32_t>>;

struct Store {
    std::mutex mu;
    std::deque<Node> nodes;
    std::map<Key, const Node*> index;
};

Store& store() {
    static Store s;
    return s;
}

}  // namespace

std::string_view logic_name(Logic l) {
    switch (l) {
        case Logic::KGINV: return "kginv";
        case Logic::KGINV2: return "kginv2";
        case Logic::KGBL: return "kgbl";
    }
    return "?";
}

Logic parse_logic(std::string_view name) {
    if (name == "kginv") return Logic::KGINV;
    if (name == "kginv2") return Logic::KGINV2;
    if (name == "kgbl") return Logic::KGBL;
    throw std::invalid_argument("unknown logic '" + std::string(name) + "'");
}

int arity(Op op) {
    switch (op) {
        case Op::Var: case Op::One: case Op::Zero: case Op::B: case Op::N:
            return 0;
        case Op::And: case Op::Or: case Op::Impl: case Op::Coimpl:
        case Op::IAnd: case Op::IOr: case Op::IImpl: case Op::ICoimpl:
            return 2;
        default:
            return 1;
    }
}

bool is_modal(Op op) { return op >= Op::Box; }

bool is_constant(Op op) { return op == Op::One || op == Op::Zero || op == Op::B || op == Op::N; }

std::string_view op_keyword(Op op) {
    switch (op) {
        case Op::Var: return "";
        case Op::One: return "1";
        case Op::Zero: return "0";
        case Op::B: return "B";
        case Op::N: return "N";
        case Op::Inv: return "inv";
        case Op::Neg: return "neg";
        case Op::Conf: return "conf";
        case Op::Delta: return "delta";
        case Op::SNot: return "snot";
        case Op::IDelta: return "idelta";
        case Op::ISNot: return "isnot";
        case Op::And: return "&";
        case Op::Or: return "or";
        case Op::Impl: return "->";
        case Op::Coimpl: return "-<";
        case Op::IAnd: return "iand";
        case Op::IOr: return "ior";
        case Op::IImpl: return "iimpl";
        case Op::ICoimpl: return "icoimpl";
        case Op::Box: return "box";
        case Op::Dia: return "dia";
        case Op::IBox: return "ibox";
        case Op::IDia: return "idia";
        case Op::Box1: return "box1";
        case Op::Dia1: return "dia1";
        case Op::Box2: return "box2";
        case Op::Dia2: return "dia2";
    }
    return "?";
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::child(std::size_t i) const { return node_->kids.at(i); }
std::size_t Formula::num_children() const { return node_->kids.size(); }
std::uint32_t Formula::id() const { return node_ ? node_->id : 0xffffffffu; }

Formula Formula::make(Op op, std::vector<Formula> kids) {
    if (op == Op::Var) throw std::invalid_argument("use Formula::var for variables");
    if (static_cast<int>(kids.size()) != arity(op)) throw std::invalid_argument("wrong number of operands");
    std::vector<std::uint32_t> ids;
    for (auto k : kids) {
        if (!k.valid()) throw std::invalid_argument("null operand");
        ids.push_back(k.id());
    }
    Store& s = store();
    std::lock_guard lock(s.mu);
    Key key{op, std::string(), ids};
    auto it = s.index.find(key);
    if (it != s.index.end()) return Formula(it->second);
    auto id = static_cast<std::uint32_t>(s.nodes.size());
    s.nodes.push_back(Node{op, {}, std::move(kids), id});
    const Node* n = &s.nodes.back();
    s.index.emplace(std::move(key), n);
    return Formula(n);
}

Formula Formula::var(const std::string& name) {
    Store& s = store();
    std::lock_guard lock(s.mu);
    Key key{Op::Var, name, {}};
    auto it = s.index.find(key);
    if (it != s.index.end()) return Formula(it->second);
    auto id = static_cast<std::uint32_t>(s.nodes.size());
    s.nodes.push_back(Node{Op::Var, name, {}, id});
    const Node* n = &s.nodes.back();
    s.index.emplace(std::move(key), n);
    return Formula(n);
}

namespace f {
Formula var(const std::string& name) { return Formula::var(name); }
Formula one() { return Formula::make(Op::One); }
Formula zero() { return Formula::make(Op::Zero); }
Formula bconst() { return Formula::make(Op::B); }
Formula nconst() { return Formula::make(Op::N); }
Formula un(Op op, Formula a) { return Formula::make(op, {a}); }
Formula bin(Op op, Formula a, Formula b) { return Formula::make(op, {a, b}); }
}  // namespace f

// ---------------------------------------------------------------- printing

namespace {

int precedence(Op op) {
    switch (op) {
        case Op::And: case Op::IAnd: return 4;
        case Op::Or: case Op::IOr: return 3;
        case Op::Impl: case Op::IImpl: return 2;
        case Op::Coimpl: case Op::ICoimpl: return 1;
        default: return arity(op) == 2 ? 0 : 5;
    }
}

bool right_assoc(Op op) { return op == Op::Impl || op == Op::IImpl; }

void print_into(Formula g, std::string& out);

void print_operand(Formula g, bool parens, std::string& out) {
    if (parens) out += '(';
    print_into(g, out);
    if (parens) out += ')';
}

void print_into(Formula g, std::string& out) {
    Op op = g.op();
    if (op == Op::Var) {
        out += g.name();
        return;
    }
    if (arity(op) == 0) {
        out += op_keyword(op);
        return;
    }
    if (arity(op) == 1) {
        Formula a = g.child(0);
        out += op_keyword(op);
        bool wrap = arity(a.op()) == 2 || ((op == Op::IBox || op == Op::IDia) && arity(a.op()) == 1);
        if (wrap) {
            print_operand(a, true, out);
        } else {
            out += ' ';
            print_into(a, out);
        }
        return;
    }
    int p = precedence(op);
    Formula l = g.child(0), r = g.child(1);
    bool lp = arity(l.op()) == 2 && (precedence(l.op()) < p || (right_assoc(op) && precedence(l.op()) == p));
    bool rp = arity(r.op()) == 2 && (precedence(r.op()) < p || (!right_assoc(op) && precedence(r.op()) == p));
    print_operand(l, lp, out);
    out += ' ';
    out += op_keyword(op);
    out += ' ';
    print_operand(r, rp, out);
}

}  // namespace

std::string print(Formula g) {
    std::string out;
    print_into(g, out);
    return out;
}

// ---------------------------------------------------------------- languages

namespace {

bool op_allowed(Op op, Logic logic) {
    switch (op) {
        case Op::Var: case Op::One: case Op::Zero:
        case Op::Inv: case Op::SNot: case Op::Delta:
        case Op::And: case Op::Or: case Op::Impl: case Op::Coimpl:
        case Op::Box: case Op::Dia:
            return true;
        case Op::Box1: case Op::Dia1: case Op::Box2: case Op::Dia2:
            return logic == Logic::KGINV2;
        default:
            return logic == Logic::KGBL;
    }
}

bool op_core(Op op, Logic logic) {
    switch (op) {
        case Op::Var: case Op::One: case Op::Zero:
        case Op::Inv: case Op::And: case Op::Impl: case Op::Box: case Op::Dia:
            return true;
        case Op::Box1: case Op::Dia1: case Op::Box2: case Op::Dia2:
            return logic == Logic::KGINV2;
        case Op::B: case Op::N: case Op::Neg: case Op::Conf:
        case Op::IAnd: case Op::IImpl: case Op::IBox: case Op::IDia:
            return logic == Logic::KGBL;
        default:
            return false;
    }
}

bool all_ops(Formula g, const std::function<bool(Op)>& ok) {
    if (!ok(g.op())) return false;
    for (std::size_t i = 0; i < g.num_children(); ++i)
        if (!all_ops(g.child(i), ok)) return false;
    return true;
}

}  // namespace

void check_language(Formula g, Logic logic) {
    if (!op_allowed(g.op(), logic)) {
        std::string kw = g.op() == Op::Var ? g.name() : std::string(op_keyword(g.op()));
        throw IllegalConnective("connective '" + kw + "' is not part of " + std::string(logic_name(logic)));
    }
    for (std::size_t i = 0; i < g.num_children(); ++i) check_language(g.child(i), logic);
}

bool in_language(Formula g, Logic logic) {
    return all_ops(g, [logic](Op op) { return op_allowed(op, logic); });
}

bool is_core(Formula g, Logic logic) {
    return all_ops(g, [logic](Op op) { return op_core(op, logic); });
}

// ---------------------------------------------------------------- desugaring

namespace {

Formula co_inv(Formula a, Formula b) { return f::inv(f::impl(f::inv(b), f::inv(a))); }
Formula co_bl(Formula a, Formula b) { return f::neg(f::impl(f::neg(b), f::neg(a))); }
Formula ico_bl(Formula a, Formula b) {
    return f::conf(f::bin(Op::IImpl, f::conf(b), f::conf(a)));
}

Formula desugar_rec(Formula g, Logic logic) {
    using namespace f;
    Op op = g.op();
    if (arity(op) == 0) return g;
    bool bl = logic == Logic::KGBL;
    if (arity(op) == 1) {
        Formula a = desugar_rec(g.child(0), logic);
        switch (op) {
            case Op::SNot: return impl(a, zero());
            case Op::Delta: return bl ? co_bl(one(), co_bl(one(), a)) : co_inv(one(), co_inv(one(), a));
            case Op::ISNot: return bin(Op::IImpl, a, nconst());
            case Op::IDelta: return ico_bl(bconst(), ico_bl(bconst(), a));
            default: return un(op, a);
        }
    }
    Formula a = desugar_rec(g.child(0), logic), b = desugar_rec(g.child(1), logic);
    switch (op) {
        case Op::Or: return bl ? neg(land(neg(a), neg(b))) : inv(land(inv(a), inv(b)));
        case Op::Coimpl: return bl ? co_bl(a, b) : co_inv(a, b);
        case Op::IOr: return conf(bin(Op::IAnd, conf(a), conf(b)));
        case Op::ICoimpl: return ico_bl(a, b);
        default: return bin(op, a, b);
    }
}

}  // namespace

Formula desugar(Formula g, Logic logic) {
    check_language(g, logic);
    return desugar_rec(g, logic);
}

// ---------------------------------------------------------------- measures

std::size_t size(Formula g) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < g.num_children(); ++i) n += size(g.child(i));
    return n;
}

namespace {
void collect_props(Formula g, std::set<std::string>& out) {
    if (g.op() == Op::Var) out.insert(g.name());
    for (std::size_t i = 0; i < g.num_children(); ++i) collect_props(g.child(i), out);
}
}  // namespace

std::set<std::string> props(Formula g) {
    std::set<std::string> out;
    collect_props(g, out);
    return out;
}

int modal_depth(Formula g) {
    int d = 0;
    for (std::size_t i = 0; i < g.num_children(); ++i) d = std::max(d, modal_depth(g.child(i)));
    return d + (is_modal(g.op()) ? 1 : 0);
}

}  // namespace kgtab
