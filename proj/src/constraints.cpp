#include "kgtab/constraints.hpp"

#include <regex>
#include <sstream>

#include "kgtab/errors.hpp"

namespace kgtab {

std::string_view rel_symbol(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Gt: return ">";
        case Rel::Ge: return ">=";
        case Rel::Eq: return "=";
    }
    return "?";
}

Rel flip(Rel r) {
    switch (r) {
        case Rel::Lt: return Rel::Gt;
        case Rel::Le: return Rel::Ge;
        case Rel::Gt: return Rel::Lt;
        case Rel::Ge: return Rel::Le;
        case Rel::Eq: return Rel::Eq;
    }
    return r;
}

bool is_strict(Rel r) { return r == Rel::Lt || r == Rel::Gt; }

bool holds(const Rational& a, Rel r, const Rational& b) {
    switch (r) {
        case Rel::Lt: return a < b;
        case Rel::Le: return a <= b;
        case Rel::Gt: return a > b;
        case Rel::Ge: return a >= b;
        case Rel::Eq: return a == b;
    }
    return false;
}

Term Term::complement() const {
    if (auto* c = std::get_if<Const>(&base)) return constant(1 - c->value);
    Term t = *this;
    t.complemented = !t.complemented;
    return t;
}

Constraint Constraint::make(Structure lhs, Rel rel, Structure rhs) {
    if (std::holds_alternative<Term>(lhs) && std::holds_alternative<FormulaValue>(rhs))
        return Constraint{std::move(rhs), flip(rel), std::move(lhs)};
    return Constraint{std::move(lhs), rel, std::move(rhs)};
}

std::string to_string(const Term& t) {
    std::string inner;
    bool compound = false;
    std::visit(
        [&](const auto& b) {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, Const>) {
                inner = to_string(b.value);
            } else if constexpr (std::is_same_v<B, FreshVar>) {
                inner = b.name;
            } else if constexpr (std::is_same_v<B, TTerm>) {
                inner = "t" + std::to_string(b.bound) + "." + std::to_string(b.instance) + "@" + b.world + ":" +
                        std::to_string(b.t_index);
            } else {
                inner = b.from + (b.plus ? " R+ " : " R- ") + b.to;
                compound = true;
            }
        },
        t.base);
    if (!t.complemented) return inner;
    return compound ? "1-(" + inner + ")" : "1-" + inner;
}

std::string to_string(const Structure& s) {
    if (auto* fv = std::get_if<FormulaValue>(&s))
        return fv->world + ":" + std::to_string(fv->index) + ":" + print(fv->formula);
    return to_string(std::get<Term>(s));
}

std::string to_string(const Constraint& c) {
    return to_string(c.lhs) + " " + std::string(rel_symbol(c.rel)) + " " + to_string(c.rhs);
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Structure parse_structure(const std::string& raw) {
    static const std::regex fv_re(R"(^([A-Za-z][A-Za-z0-9_']*):([12]):(.+)$)");
    static const std::regex t_re(R"(^t([01])(?:\.(\d+))?@([A-Za-z][A-Za-z0-9_']*):([12])$)");
    static const std::regex rel_re(R"(^([A-Za-z][A-Za-z0-9_']*) R([+-]) ([A-Za-z][A-Za-z0-9_']*)$)");
    static const std::regex num_re(R"(^\d+(/\d+)?$)");
    static const std::regex id_re(R"(^[A-Za-z][A-Za-z0-9_']*$)");
    std::string s = trim(raw);
    std::smatch m;
    if (s.size() > 2 && s.compare(0, 2, "1-") == 0) {
        std::string rest = trim(s.substr(2));
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        Structure inner = parse_structure(rest);
        if (!std::holds_alternative<Term>(inner)) throw FormatError("", "1-(.) applies to value terms only");
        return std::get<Term>(inner).complement();
    }
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return parse_structure(s.substr(1, s.size() - 2));
    if (std::regex_match(s, m, fv_re)) {
        try {
            return FormulaValue{m[1].str(), std::stoi(m[2].str()), parse(m[3].str())};
        } catch (const SyntaxError& e) {
            throw FormatError("", std::string("in formula: ") + e.what());
        }
    }
    if (std::regex_match(s, m, t_re))
        return Term::t(TTerm{m[3].str(), std::stoi(m[4].str()), m[2].matched ? std::stoi(m[2].str()) : 0,
                             std::stoi(m[1].str())});
    if (std::regex_match(s, m, rel_re)) return Term::rel(RelTerm{m[1].str(), m[2].str() == "+", m[3].str()});
    if (std::regex_match(s, num_re)) {
        Rational v = parse_rational(s);
        if (!in_unit_interval(v)) throw FormatError("", "constant " + s + " outside [0,1]");
        return Term::constant(v);
    }
    if (std::regex_match(s, id_re)) return Term::var(s);
    throw FormatError("", "cannot read structure '" + s + "'");
}

}  // namespace

namespace {

std::vector<Constraint> parse_line(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    std::optional<std::size_t> at;
    Rel rel = Rel::Eq;
    bool approx = false;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        static const std::pair<const char*, Rel> rels[] = {{"<", Rel::Lt}, {"<=", Rel::Le}, {">", Rel::Gt},
                                                           {">=", Rel::Ge}, {"=", Rel::Eq}, {"~=", Rel::Eq}};
        for (auto& [sym, r] : rels) {
            if (toks[i] == sym) {
                if (at) throw FormatError("", "more than one relation symbol");
                at = i;
                rel = r;
                approx = toks[i] == "~=";
            }
        }
    }
    if (!at || *at == 0 || *at + 1 == toks.size())
        throw FormatError("", "expected '<lhs> <relation> <rhs>' with relation among < <= > >= = ~=");
    auto join = [&](std::size_t b, std::size_t e) {
        std::string s;
        for (std::size_t i = b; i < e; ++i) s += (i > b ? " " : "") + toks[i];
        return s;
    };
    Structure lhs = parse_structure(join(0, *at)), rhs = parse_structure(join(*at + 1, toks.size()));
    if (approx) return {Constraint::make(lhs, Rel::Le, rhs), Constraint::make(lhs, Rel::Ge, rhs)};
    return {Constraint::make(lhs, rel, rhs)};
}

}  // namespace

Constraint parse_constraint(const std::string& line) {
    auto cs = parse_line(line);
    if (cs.size() != 1) throw FormatError("", "'~=' stands for two constraints");
    return cs.front();
}

std::vector<Constraint> parse_constraints(const std::string& text) {
    std::vector<Constraint> out;
    std::istringstream in(text);
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (trim(line).empty()) continue;
        try {
            for (auto& c : parse_line(line)) out.push_back(std::move(c));
        } catch (const FormatError& e) {
            throw FormatError("line " + std::to_string(n), e.what());
        }
    }
    return out;
}

}  // namespace kgtab
