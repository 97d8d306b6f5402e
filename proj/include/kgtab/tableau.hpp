#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgtab/constraints.hpp"
#include "kgtab/kripke.hpp"
#include "kgtab/solver.hpp"

namespace kgtab {

class Branch {
public:
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::vector<std::string>& worlds() const { return worlds_; }
    int depth(const std::string& world) const;
    bool contains(const Constraint& c) const { return keys_.count(to_string(c)) != 0; }
    bool applied(const std::string& key) const { return applied_.count(key) != 0; }

    // Returns false when the constraint is already present.
    bool add(const Constraint& c);
    void mark_applied(const std::string& key) { applied_.insert(key); }

    std::string fresh_world(const std::string& parent);
    std::string fresh_var();
    int fresh_instance(const std::string& world, int t_index);

    // Relational terms w S u occurring on the branch, as (from, plus) -> targets.
    std::vector<std::string> successors(const std::string& from, bool plus) const;
    int max_depth() const { return max_depth_; }

private:
    void note_world(const std::string& w, int depth);

    std::vector<Constraint> constraints_;
    std::set<std::string> keys_;
    std::set<std::string> applied_;
    std::set<std::string> vars_;
    std::vector<std::string> worlds_;
    std::map<std::string, int> depth_;
    std::map<std::string, int> reserved_;  // fresh worlds not yet on the branch
    std::map<std::pair<std::string, bool>, std::vector<std::string>> successors_;
    std::map<std::pair<std::string, int>, int> instances_;
    int next_world_ = 1;
    int next_var_ = 1;
    int max_depth_ = 0;
};

struct RuleInstance {
    std::string rule_id;   // e.g. "&^1_>", "->^2_>=", "inv", "box^1_~", "dia^2_="
    Constraint principal;  // for ~ rules the <= half of the pair
    std::optional<Constraint> partner;  // the >= half for ~ rules
    std::optional<std::string> target;  // u for =-rules
    std::string key;
};

enum class RootEncoding { Strict, NonStrict };

// Initial branches of a validity proof; the formula is desugared first.
// KGINV/KGINV2 give one branch, KGBL two (positive, then negative support).
std::vector<Branch> init_validity(Formula f, Logic logic, RootEncoding enc = RootEncoding::Strict);

std::vector<RuleInstance> applicable_rules(const Branch& b, Logic logic);
std::vector<Branch> apply_rule(const Branch& b, const RuleInstance& r, Logic logic);

// Every rule identifier the calculus can produce for the logic.
std::vector<std::string> rule_ids(Logic logic);

struct CountermodelReport {
    FModel model;
    std::string root;
    ValuePair achieved;
    int tableau = 1;
};

// Builds the model read off an open branch and its witness and re-evaluates
// the query; throws VerificationFailure if the query bound is not violated.
CountermodelReport extract_countermodel(const Branch& b, const LinearSystem& sys, const Witness& w, Formula query,
                                        Logic logic, int tableau, const std::string& root = "w");

struct TraceEntry {
    int branch;
    std::string rule;
    std::string principal;
    std::vector<int> children;
};

struct SearchOptions {
    std::size_t max_expansions = 100000;
    RootEncoding root = RootEncoding::Strict;
    bool explore_all = false;  // keep searching after the first open branch
    SolveOptions solver;
};

struct SearchStats {
    std::size_t expansions = 0;
    std::size_t closed_branches = 0;
    std::size_t open_branches = 0;
    std::size_t solver_calls = 0;
    int max_world_depth = 0;
};

struct OpenBranch {
    Branch branch;
    LinearSystem system;
    Witness witness;
    CountermodelReport report;
};

struct ProofResult {
    int tableau = 1;
    bool closed = false;
    std::vector<TraceEntry> trace;
    std::optional<OpenBranch> open;
    SearchStats stats;
};

// Runs one tableau from an initial branch. Throws ResourceLimit when more than
// max_expansions rule applications are needed.
ProofResult search_tableau(const Branch& root, Formula query, Logic logic, int tableau, const SearchOptions& opts = {});

struct ProveResult {
    bool valid = false;
    std::vector<ProofResult> tableaux;
};

// All tableaux for the logic; for KGBL the negative-support tableau runs only
// if the first one closes.
ProveResult prove(Formula f, Logic logic, const SearchOptions& opts = {});

std::string format_trace(const ProofResult& r);

}  // namespace kgtab
