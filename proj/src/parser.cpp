#include <cctype>
#include <map>

#include "kgtab/errors.hpp"
#include "kgtab/formula.hpp"

namespace kgtab {

namespace {

enum class Tok { Ident, Const, Prefix, Infix, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
    Op op{};
};

const std::map<std::string, Op, std::less<>>& prefix_words() {
    static const std::map<std::string, Op, std::less<>> m = {
        {"inv", Op::Inv},     {"neg", Op::Neg},       {"conf", Op::Conf},   {"snot", Op::SNot},
        {"delta", Op::Delta}, {"isnot", Op::ISNot},   {"idelta", Op::IDelta}, {"box", Op::Box},
        {"dia", Op::Dia},     {"ibox", Op::IBox},     {"idia", Op::IDia},   {"box1", Op::Box1},
        {"dia1", Op::Dia1},   {"box2", Op::Box2},     {"dia2", Op::Dia2},
    };
    return m;
}

const std::map<std::string, Op, std::less<>>& infix_words() {
    static const std::map<std::string, Op, std::less<>> m = {
        {"and", Op::And},   {"or", Op::Or},       {"iand", Op::IAnd},
        {"ior", Op::IOr},   {"iimpl", Op::IImpl}, {"icoimpl", Op::ICoimpl},
    };
    return m;
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::islower(static_cast<unsigned char>(c))) {
            while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                                    std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string w(s.substr(start, i - start));
            if (auto it = prefix_words().find(w); it != prefix_words().end())
                out.push_back({Tok::Prefix, w, start, it->second});
            else if (auto jt = infix_words().find(w); jt != infix_words().end())
                out.push_back({Tok::Infix, w, start, jt->second});
            else
                out.push_back({Tok::Ident, w, start});
            continue;
        }
        auto two = s.substr(i, 2);
        if (s.substr(i, 3) == "<->") {
            out.push_back({Tok::Iff, "<->", start});
            i += 3;
        } else if (two == "->") {
            out.push_back({Tok::Infix, "->", start, Op::Impl});
            i += 2;
        } else if (two == "-<") {
            out.push_back({Tok::Infix, "-<", start, Op::Coimpl});
            i += 2;
        } else if (c == '&') {
            out.push_back({Tok::Infix, "&", start, Op::And});
            ++i;
        } else if (c == '|') {
            out.push_back({Tok::Infix, "|", start, Op::Or});
            ++i;
        } else if (c == '(') {
            out.push_back({Tok::LParen, "(", start});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, ")", start});
            ++i;
        } else if (c == '0' || c == '1' || c == 'B' || c == 'N') {
            Op op = c == '0' ? Op::Zero : c == '1' ? Op::One : c == 'B' ? Op::B : Op::N;
            ++i;
            if (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                throw SyntaxError(start, "formula", "'" + std::string(s.substr(start, i + 1 - start)) + "'");
            out.push_back({Tok::Const, std::string(1, c), start, op});
        } else {
            throw SyntaxError(start, "formula", "'" + std::string(1, c) + "'");
        }
    }
    out.push_back({Tok::End, "end of input", s.size()});
    return out;
}

int level_of(Op op) {
    switch (op) {
        case Op::And: case Op::IAnd: return 4;
        case Op::Or: case Op::IOr: return 3;
        case Op::Impl: case Op::IImpl: return 2;
        default: return 1;
    }
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula parse_all() {
        Formula g = parse_iff();
        if (peek().kind != Tok::End) fail("operator or end of input");
        return g;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw SyntaxError(t.pos, expected, t.kind == Tok::End ? t.text : "'" + t.text + "'");
    }

    bool at_infix(int level) const { return peek().kind == Tok::Infix && level_of(peek().op) == level; }

    Formula parse_iff() {
        Formula l = parse_level(1);
        while (peek().kind == Tok::Iff) {
            next();
            Formula r = parse_level(1);
            l = f::land(f::impl(l, r), f::impl(r, l));
        }
        return l;
    }

    Formula parse_level(int level) {
        if (level > 4) return parse_prefix();
        if (level == 2) {
            Formula l = parse_level(3);
            if (at_infix(2)) {
                Op op = next().op;
                Formula r = parse_level(2);
                return f::bin(op, l, r);
            }
            return l;
        }
        Formula l = parse_level(level + 1);
        while (at_infix(level)) {
            Op op = next().op;
            Formula r = parse_level(level + 1);
            l = f::bin(op, l, r);
        }
        return l;
    }

    Formula parse_prefix() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Prefix: {
                Op op = next().op;
                return f::un(op, parse_prefix());
            }
            case Tok::Ident:
                return f::var(next().text);
            case Tok::Const:
                return Formula::make(next().op);
            case Tok::LParen: {
                next();
                Formula g = parse_iff();
                if (peek().kind != Tok::RParen) fail("')'");
                next();
                return g;
            }
            default:
                fail("variable, constant, prefix operator or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

}  // namespace kgtab
