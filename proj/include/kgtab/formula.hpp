#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kgtab {

enum class Logic { KGINV, KGINV2, KGBL };

std::string_view logic_name(Logic l);
Logic parse_logic(std::string_view name);  // "kginv", "kginv2", "kgbl"

enum class Op : std::uint8_t {
    Var,
    One, Zero, B, N,
    Inv, Neg, Conf, Delta, SNot, IDelta, ISNot,
    And, Or, Impl, Coimpl, IAnd, IOr, IImpl, ICoimpl,
    Box, Dia, IBox, IDia, Box1, Dia1, Box2, Dia2,
};

int arity(Op op);
bool is_modal(Op op);
bool is_constant(Op op);
std::string_view op_keyword(Op op);

struct Node;

// Hash-consed formula handle: structurally equal formulas share one node, so
// equality and ordering are pointer/identifier comparisons.
class Formula {
public:
    Formula() = default;

    Op op() const;
    const std::string& name() const;  // only for Var
    Formula child(std::size_t i) const;
    std::size_t num_children() const;
    std::uint32_t id() const;
    bool valid() const { return node_ != nullptr; }

    friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }
    friend bool operator!=(Formula a, Formula b) { return a.node_ != b.node_; }
    friend bool operator<(Formula a, Formula b) { return a.id() < b.id(); }

    static Formula make(Op op, std::vector<Formula> kids = {});
    static Formula var(const std::string& name);

private:
    explicit Formula(const Node* n) : node_(n) {}
    const Node* node_ = nullptr;
};

namespace f {
Formula var(const std::string& name);
Formula one();
Formula zero();
Formula bconst();
Formula nconst();
Formula un(Op op, Formula a);
Formula bin(Op op, Formula a, Formula b);
inline Formula inv(Formula a) { return un(Op::Inv, a); }
inline Formula neg(Formula a) { return un(Op::Neg, a); }
inline Formula conf(Formula a) { return un(Op::Conf, a); }
inline Formula land(Formula a, Formula b) { return bin(Op::And, a, b); }
inline Formula lor(Formula a, Formula b) { return bin(Op::Or, a, b); }
inline Formula impl(Formula a, Formula b) { return bin(Op::Impl, a, b); }
inline Formula coimpl(Formula a, Formula b) { return bin(Op::Coimpl, a, b); }
inline Formula box(Formula a) { return un(Op::Box, a); }
inline Formula dia(Formula a) { return un(Op::Dia, a); }
}  // namespace f

Formula parse(std::string_view text);
std::string print(Formula f);

// Throws IllegalConnective when f uses a node outside the language.
void check_language(Formula f, Logic logic);
bool in_language(Formula f, Logic logic);
bool is_core(Formula f, Logic logic);

Formula desugar(Formula f, Logic logic);

std::size_t size(Formula f);
std::set<std::string> props(Formula f);
int modal_depth(Formula f);

}  // namespace kgtab

template <>
struct std::hash<kgtab::Formula> {
    std::size_t operator()(kgtab::Formula f) const noexcept { return f.id(); }
};
