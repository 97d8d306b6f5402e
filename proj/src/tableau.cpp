#include "kgtab/tableau.hpp"

#include <sstream>

#include "kgtab/errors.hpp"

namespace kgtab {

std::vector<Branch> init_validity(Formula f, Logic logic, RootEncoding enc) {
    Formula core = desugar(f, logic);
    Rel down = enc == RootEncoding::Strict ? Rel::Lt : Rel::Le;
    Rel up = enc == RootEncoding::Strict ? Rel::Gt : Rel::Ge;
    std::vector<Branch> out(1);
    out[0].add(Constraint::make(FormulaValue{"w", 1, core}, down, Term::var("c")));
    out[0].add(Constraint::make(Term::var("c"), Rel::Lt, Term::constant(1)));
    if (logic == Logic::KGBL) {
        Branch second;
        second.add(Constraint::make(FormulaValue{"w", 2, core}, up, Term::var("d")));
        second.add(Constraint::make(Term::var("d"), Rel::Gt, Term::constant(0)));
        out.push_back(std::move(second));
    }
    return out;
}

CountermodelReport extract_countermodel(const Branch& b, const LinearSystem& sys, const Witness& wit, Formula query,
                                        Logic logic, int tableau, const std::string& root) {
    Model m(b.worlds());
    FModel fm(m);
    for (const Constraint& c : b.constraints()) {
        for (const Structure* s : {&c.lhs, &c.rhs}) {
            if (auto* fv = std::get_if<FormulaValue>(s)) {
                if (fv->formula.op() != Op::Var) continue;
                if (logic != Logic::KGBL && fv->index != 1) continue;
                fm.base.set_val(fv->index, fv->formula.name(), fm.base.index_of(fv->world),
                                wit.at(sys, variable_name(*fv)));
                continue;
            }
            const Term& t = std::get<Term>(*s);
            if (auto* r = std::get_if<RelTerm>(&t.base))
                fm.base.set_rel(r->plus, fm.base.index_of(r->from), fm.base.index_of(r->to),
                                wit.at(sys, variable_name(t)));
        }
    }
    for (const GapGroup& g : sys.groups)
        for (int v : g.members) fm.add_t(g.t_index, fm.base.index_of(g.world), wit.values[v]);

    CountermodelReport rep{fm, root, eval_fmodel(fm, query, root, logic), tableau};
    bool refuted = tableau == 1 ? rep.achieved.pos < 1 : rep.achieved.negv > 0;
    if (!refuted)
        throw VerificationFailure("extracted model gives " + print(query) + " the value (" +
                                  to_string(rep.achieved.pos) + ", " + to_string(rep.achieved.negv) + ") at " + root);
    return rep;
}

namespace {

class Search {
public:
    Search(Formula query, Logic logic, int tableau, const SearchOptions& opts)
        : query_(query), logic_(logic), tableau_(tableau), opts_(opts), bound_(modal_depth(desugar(query, logic))) {
        result_.tableau = tableau;
    }

    ProofResult run(const Branch& root) {
        explore(root, next_id_++);
        result_.closed = !result_.open.has_value();
        return std::move(result_);
    }

private:
    // Returns true when the search should stop.
    bool explore(const Branch& b, int id) {
        if (b.max_depth() > bound_)
            throw std::logic_error("world depth " + std::to_string(b.max_depth()) + " exceeds modal depth " +
                                   std::to_string(bound_));
        result_.stats.max_world_depth = std::max(result_.stats.max_world_depth, b.max_depth());
        LinearSystem sys = translate_branch(b.constraints());
        ++result_.stats.solver_calls;
        SolveResult sr = solve(sys, opts_.solver);
        if (!sr.sat) {
            ++result_.stats.closed_branches;
            return false;
        }
        auto rules = applicable_rules(b, logic_);
        if (rules.empty()) {
            ++result_.stats.open_branches;
            if (!result_.open) {
                CountermodelReport rep = extract_countermodel(b, sys, sr.witness, query_, logic_, tableau_);
                result_.open = OpenBranch{b, std::move(sys), std::move(sr.witness), std::move(rep)};
            }
            return !opts_.explore_all;
        }
        if (++result_.stats.expansions > opts_.max_expansions)
            throw ResourceLimit("more than " + std::to_string(opts_.max_expansions) + " rule applications");
        const RuleInstance& r = rules.front();
        std::vector<Branch> children = apply_rule(b, r, logic_);
        TraceEntry entry{id, r.rule_id, to_string(r.principal), {}};
        for (std::size_t k = 0; k < children.size(); ++k) entry.children.push_back(next_id_++);
        result_.trace.push_back(entry);
        for (std::size_t k = 0; k < children.size(); ++k)
            if (explore(children[k], entry.children[k])) return true;
        return false;
    }

    Formula query_;
    Logic logic_;
    int tableau_;
    SearchOptions opts_;
    int bound_;
    int next_id_ = 0;
    ProofResult result_;
};

}  // namespace

ProofResult search_tableau(const Branch& root, Formula query, Logic logic, int tableau, const SearchOptions& opts) {
    return Search(query, logic, tableau, opts).run(root);
}

ProveResult prove(Formula f, Logic logic, const SearchOptions& opts) {
    ProveResult out;
    auto roots = init_validity(f, logic, opts.root);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        out.tableaux.push_back(search_tableau(roots[k], f, logic, static_cast<int>(k + 1), opts));
        if (!out.tableaux.back().closed) return out;
    }
    out.valid = true;
    return out;
}

std::string format_trace(const ProofResult& r) {
    std::ostringstream out;
    out << "tableau " << r.tableau << "\n";
    for (const auto& e : r.trace) {
        out << e.branch << " " << e.rule << " [" << e.principal << "] ->";
        for (int c : e.children) out << " " << c;
        out << "\n";
    }
    out << (r.closed ? "closed" : "open") << " expansions=" << r.stats.expansions
        << " closed_branches=" << r.stats.closed_branches << " open_branches=" << r.stats.open_branches << "\n";
    return out.str();
}

}  // namespace kgtab
