#include <algorithm>

#include "kgtab/tableau.hpp"

namespace kgtab {

int Branch::depth(const std::string& world) const {
    auto it = depth_.find(world);
    return it == depth_.end() ? 0 : it->second;
}

void Branch::note_world(const std::string& w, int depth) {
    if (auto it = reserved_.find(w); it != reserved_.end()) depth = it->second;
    if (depth_.emplace(w, depth).second) {
        worlds_.push_back(w);
        max_depth_ = std::max(max_depth_, depth);
    }
}

bool Branch::add(const Constraint& c) {
    if (!keys_.insert(to_string(c)).second) return false;
    constraints_.push_back(c);
    for (const Structure* s : {&c.lhs, &c.rhs}) {
        if (auto* fv = std::get_if<FormulaValue>(s)) {
            note_world(fv->world, 0);
            continue;
        }
        const Term& t = std::get<Term>(*s);
        if (auto* v = std::get_if<FreshVar>(&t.base)) vars_.insert(v->name);
        if (auto* tt = std::get_if<TTerm>(&t.base)) {
            note_world(tt->world, 0);
            int& next = instances_[{tt->world, tt->t_index}];
            next = std::max(next, tt->instance + 1);
        }
        if (auto* r = std::get_if<RelTerm>(&t.base)) {
            note_world(r->from, 0);
            note_world(r->to, depth(r->from) + 1);
            auto& succ = successors_[{r->from, r->plus}];
            if (std::find(succ.begin(), succ.end(), r->to) == succ.end()) succ.push_back(r->to);
        }
    }
    return true;
}

std::string Branch::fresh_world(const std::string& parent) {
    std::string name;
    do {
        name = "w" + std::to_string(next_world_++);
    } while (depth_.count(name) || reserved_.count(name));
    reserved_[name] = depth(parent) + 1;
    return name;
}

std::string Branch::fresh_var() {
    std::string name;
    do {
        name = "c" + std::to_string(next_var_++);
    } while (vars_.count(name));
    vars_.insert(name);
    return name;
}

int Branch::fresh_instance(const std::string& world, int t_index) { return instances_[{world, t_index}]++; }

std::vector<std::string> Branch::successors(const std::string& from, bool plus) const {
    auto it = successors_.find({from, plus});
    return it == successors_.end() ? std::vector<std::string>{} : it->second;
}

}  // namespace kgtab
