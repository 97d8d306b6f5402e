#include <sstream>

#include "kgtab/errors.hpp"
#include "kgtab/solver.hpp"

namespace kgtab {

int LinearSystem::intern(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, static_cast<int>(variables.size()));
    if (inserted) variables.push_back(name);
    return it->second;
}

std::optional<int> LinearSystem::lookup(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string variable_name(const FormulaValue& fv) {
    return "x[" + fv.world + "," + std::to_string(fv.index) + "," + print(fv.formula) + "]";
}

std::string variable_name(const Term& t) {
    Term base = t;
    base.complemented = false;
    if (std::holds_alternative<RelTerm>(base.base)) return "x[" + to_string(base) + "]";
    return to_string(base);
}

Rational Witness::at(const LinearSystem& sys, const std::string& name) const {
    auto v = sys.lookup(name);
    if (!v) throw std::out_of_range("no variable named " + name);
    return values[*v];
}

namespace {

struct Translator {
    LinearSystem sys;
    std::map<std::pair<std::string, int>, int> group_of;
    std::map<std::tuple<std::string, int, int>, bool> pair_seen;

    int group(const std::string& world, int t_index) {
        auto [it, inserted] = group_of.try_emplace({world, t_index}, static_cast<int>(sys.groups.size()));
        if (inserted) sys.groups.push_back(GapGroup{world, t_index, {}});
        return it->second;
    }

    void register_pair(const TTerm& t) {
        if (!pair_seen.emplace(std::make_tuple(t.world, t.t_index, t.instance), true).second) return;
        TTerm lo = t, hi = t;
        lo.bound = 0;
        hi.bound = 1;
        int l = sys.intern(variable_name(Term::t(lo)));
        int h = sys.intern(variable_name(Term::t(hi)));
        int g = group(t.world, t.t_index);
        sys.groups[g].members.push_back(l);
        sys.groups[g].members.push_back(h);
        sys.pairs.push_back(TPair{l, h, g});
    }

    Atom atom(const Structure& s) {
        if (auto* fv = std::get_if<FormulaValue>(&s)) return Atom::of(sys.intern(variable_name(*fv)));
        const Term& t = std::get<Term>(s);
        if (auto* c = std::get_if<Const>(&t.base)) return Atom::value(c->value);
        if (auto* tt = std::get_if<TTerm>(&t.base)) register_pair(*tt);
        return Atom::of(sys.intern(variable_name(t)), t.complemented);
    }
};

}  // namespace

LinearSystem translate_branch(const std::vector<Constraint>& constraints) {
    Translator tr;
    for (const Constraint& c : constraints) {
        Atom l = tr.atom(c.lhs);
        Atom r = tr.atom(c.rhs);
        tr.sys.constraints.push_back(LinearConstraint{l, c.rel, r, to_string(c)});
    }
    return std::move(tr.sys);
}

namespace {

std::string atom_text(const LinearSystem& sys, const Atom& a) {
    if (a.is_constant()) return to_string(a.constant);
    return a.complemented ? "1-" + sys.variables[a.var] : sys.variables[a.var];
}

}  // namespace

std::string dump_system(const LinearSystem& sys) {
    std::ostringstream out;
    out << "variables " << sys.variables.size() << "\n";
    for (std::size_t i = 0; i < sys.variables.size(); ++i) out << "  v" << i << " " << sys.variables[i] << "\n";
    out << "constraints " << sys.constraints.size() << "\n";
    for (const auto& c : sys.constraints)
        out << "  " << atom_text(sys, c.lhs) << " " << rel_symbol(c.rel) << " " << atom_text(sys, c.rhs) << "    # "
            << c.origin << "\n";
    out << "pairs " << sys.pairs.size() << "\n";
    for (const auto& p : sys.pairs)
        out << "  " << sys.variables[p.lower] << " < " << sys.variables[p.upper] << "\n";
    out << "gap groups " << sys.groups.size() << "\n";
    for (const auto& g : sys.groups) {
        out << "  " << g.world << ":" << g.t_index << " {";
        for (std::size_t i = 0; i < g.members.size(); ++i) out << (i ? ", " : "") << sys.variables[g.members[i]];
        out << "}\n";
    }
    return out.str();
}

}  // namespace kgtab
