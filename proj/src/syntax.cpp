#include "boolgeo/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace boolgeo {

// ---------------------------------------------------------------------------
// Term

Term Term::make(Kind kind, std::string name, std::shared_ptr<const Node> left,
                std::shared_ptr<const Node> right) {
    std::size_t depth = 1;
    std::size_t size = 1;
    if (left) {
        depth = std::max(depth, left->depth + 1);
        size += left->size;
    }
    if (right) {
        depth = std::max(depth, right->depth + 1);
        size += right->size;
    }
    return Term(std::make_shared<const Node>(
        Node{kind, std::move(name), std::move(left), std::move(right), depth, size}));
}

Term Term::variable(std::string name) {
    if (name.empty()) throw std::invalid_argument("variable name must not be empty");
    return make(Kind::variable, std::move(name), nullptr, nullptr);
}

Term Term::zero() {
    static const Term t = make(Kind::zero, {}, nullptr, nullptr);
    return t;
}

Term Term::one() {
    static const Term t = make(Kind::one, {}, nullptr, nullptr);
    return t;
}

Term Term::join(Term lhs, Term rhs) {
    return make(Kind::join, {}, std::move(lhs.node_), std::move(rhs.node_));
}

Term Term::meet(Term lhs, Term rhs) {
    return make(Kind::meet, {}, std::move(lhs.node_), std::move(rhs.node_));
}

Term Term::complement(Term operand) { return make(Kind::complement, {}, std::move(operand.node_), nullptr); }

const std::string& Term::name() const {
    if (kind() != Kind::variable) throw std::logic_error("Term::name on a non-variable");
    return node_->name;
}

Term Term::lhs() const {
    if (!is_binary()) throw std::logic_error("Term::lhs on a non-binary term");
    return Term(node_->left);
}

Term Term::rhs() const {
    if (!is_binary()) throw std::logic_error("Term::rhs on a non-binary term");
    return Term(node_->right);
}

Term Term::operand() const {
    if (kind() != Kind::complement) throw std::logic_error("Term::operand on a non-complement");
    return Term(node_->left);
}

void Term::collect_variables(std::vector<std::string>& out) const {
    switch (kind()) {
        case Kind::variable:
            if (std::find(out.begin(), out.end(), node_->name) == out.end()) out.push_back(node_->name);
            return;
        case Kind::zero:
        case Kind::one:
            return;
        case Kind::complement:
            operand().collect_variables(out);
            return;
        case Kind::join:
        case Kind::meet:
            lhs().collect_variables(out);
            rhs().collect_variables(out);
            return;
    }
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
        case Term::Kind::variable:
            return a.node_->name == b.node_->name;
        case Term::Kind::zero:
        case Term::Kind::one:
            return true;
        case Term::Kind::complement:
            return a.operand() == b.operand();
        case Term::Kind::join:
        case Term::Kind::meet:
            return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

// ---------------------------------------------------------------------------
// System

System::System(std::vector<std::string> variables, std::vector<Equation> equations)
    : variables_(std::move(variables)), equations_(std::move(equations)) {
    if (variables_.empty()) throw std::invalid_argument("a system needs at least one variable");
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (std::find(variables_.begin(), variables_.begin() + static_cast<std::ptrdiff_t>(i),
                      variables_[i]) != variables_.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw std::invalid_argument("duplicate variable '" + variables_[i] + "'");
        }
    }
    std::vector<std::string> used;
    for (const auto& eq : equations_) {
        eq.lhs.collect_variables(used);
        eq.rhs.collect_variables(used);
    }
    for (const auto& name : used) {
        if (index_of(name) == npos) throw std::invalid_argument("undeclared variable '" + name + "'");
    }
}

std::size_t System::index_of(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) return i;
    }
    return npos;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { name, zero, one, join, meet, bang, quote, lparen, rparen, equals, comma, semi, newline, end };

const char* describe(Tok t) {
    switch (t) {
        case Tok::name: return "identifier";
        case Tok::zero: return "'0'";
        case Tok::one: return "'1'";
        case Tok::join: return "join operator";
        case Tok::meet: return "meet operator";
        case Tok::bang: return "'!'";
        case Tok::quote: return "\"'\"";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::equals: return "'='";
        case Tok::comma: return "','";
        case Tok::semi: return "';'";
        case Tok::newline: return "end of line";
        case Tok::end: return "end of input";
    }
    return "token";
}

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(src.substr(i, len)), line, col});
        i += len;
        col += len;
    };
    auto is_name_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };

    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            push(Tok::newline, 1);
            ++line;
            col = 1;
        } else if (c == '\r' || c == ' ' || c == '\t') {
            ++i;
            ++col;
        } else if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                ++i;
                ++col;
            }
        } else if (is_name_start(c)) {
            std::size_t len = 1;
            while (i + len < src.size() && is_name_char(src[i + len])) ++len;
            push(Tok::name, len);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (i + len < src.size() && is_name_char(src[i + len])) ++len;
            if (len != 1 || (c != '0' && c != '1')) {
                throw parse_error("invalid constant '" + std::string(src.substr(i, len)) +
                                      "' (only 0 and 1 are constants)",
                                  line, col);
            }
            push(c == '0' ? Tok::zero : Tok::one, 1);
        } else if (c == '\\' && i + 1 < src.size() && src[i + 1] == '/') {
            push(Tok::join, 2);
        } else {
            switch (c) {
                case '+': push(Tok::join, 1); break;
                case '*':
                case '&': push(Tok::meet, 1); break;
                case '!': push(Tok::bang, 1); break;
                case '\'': push(Tok::quote, 1); break;
                case '(': push(Tok::lparen, 1); break;
                case ')': push(Tok::rparen, 1); break;
                case '=': push(Tok::equals, 1); break;
                case ',': push(Tok::comma, 1); break;
                case ';': push(Tok::semi, 1); break;
                default:
                    throw parse_error("unexpected character '" + std::string(1, c) + "'", line, col);
            }
        }
    }
    out.push_back({Tok::end, {}, line, col});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    System system() {
        skip_separators();
        std::optional<std::vector<std::string>> declared;
        if (peek().kind == Tok::name && peek().text == "vars" && lookahead_is_declaration()) {
            declared = vars_header();
        }
        std::vector<Equation> equations;
        std::vector<std::string> seen;
        skip_separators();
        while (peek().kind != Tok::end) {
            equations.push_back(equation(declared ? &*declared : nullptr, seen));
            if (peek().kind != Tok::end && !is_separator(peek().kind)) {
                fail_expected("';' or end of line after equation");
            }
            skip_separators();
        }
        std::vector<std::string> variables = declared ? *declared : seen;
        if (variables.empty()) {
            throw parse_error("system has no variables", tokens_.front().line, tokens_.front().column);
        }
        return System(std::move(variables), std::move(equations));
    }

    Term lone_term() {
        skip_separators();
        Term t = term();
        skip_separators();
        expect(Tok::end);
        return t;
    }

    Equation lone_equation() {
        skip_separators();
        std::vector<std::string> seen;
        Equation e = equation(nullptr, seen);
        skip_separators();
        expect(Tok::end);
        return e;
    }

private:
    static bool is_separator(Tok k) { return k == Tok::semi || k == Tok::newline; }

    const Token& peek() {
        // Inside parentheses a line break is plain whitespace.
        while (depth_ > 0 && tokens_[pos_].kind == Tok::newline) ++pos_;
        return tokens_[pos_];
    }

    Token advance() {
        Token t = peek();
        if (t.kind != Tok::end) ++pos_;
        return t;
    }

    [[noreturn]] void fail_expected(const std::string& what) {
        const Token& t = peek();
        throw parse_error("expected " + what + ", found " +
                              (t.kind == Tok::name ? "'" + t.text + "'" : std::string(describe(t.kind))),
                          t.line, t.column);
    }

    Token expect(Tok k) {
        if (peek().kind != k) fail_expected(describe(k));
        return advance();
    }

    void skip_separators() {
        while (is_separator(peek().kind)) advance();
    }

    // `vars` followed by a name and then ',' or a separator; anything else
    // (e.g. `vars = 1`) treats `vars` as an ordinary variable.
    bool lookahead_is_declaration() const {
        if (pos_ + 1 >= tokens_.size() || tokens_[pos_ + 1].kind != Tok::name) return false;
        if (pos_ + 2 >= tokens_.size()) return true;
        const Tok after = tokens_[pos_ + 2].kind;
        return after == Tok::comma || after == Tok::semi || after == Tok::newline || after == Tok::end;
    }

    std::vector<std::string> vars_header() {
        advance();  // vars
        std::vector<std::string> names;
        while (true) {
            Token name = expect(Tok::name);
            if (std::find(names.begin(), names.end(), name.text) != names.end()) {
                throw parse_error("duplicate variable declaration '" + name.text + "'", name.line,
                                  name.column);
            }
            names.push_back(name.text);
            if (peek().kind == Tok::comma) {
                advance();
                continue;
            }
            break;
        }
        if (peek().kind != Tok::end && !is_separator(peek().kind)) {
            fail_expected("',' or ';' in variable declaration");
        }
        return names;
    }

    Equation equation(const std::vector<std::string>* declared, std::vector<std::string>& seen) {
        declared_ = declared;
        seen_ = &seen;
        Term lhs = term();
        expect(Tok::equals);
        Term rhs = term();
        return Equation{std::move(lhs), std::move(rhs)};
    }

    Term term() {
        Term t = factor();
        while (peek().kind == Tok::join) {
            advance();
            t = Term::join(std::move(t), factor());
        }
        return t;
    }

    Term factor() {
        Term t = unary();
        while (peek().kind == Tok::meet) {
            advance();
            t = Term::meet(std::move(t), unary());
        }
        return t;
    }

    Term unary() {
        if (peek().kind == Tok::bang) {
            advance();
            return Term::complement(unary());
        }
        Term t = atom();
        if (peek().kind == Tok::quote) {
            advance();
            t = Term::complement(std::move(t));
        }
        return t;
    }

    Term atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::zero:
                advance();
                return Term::zero();
            case Tok::one:
                advance();
                return Term::one();
            case Tok::name: {
                Token name = advance();
                note_variable(name);
                return Term::variable(name.text);
            }
            case Tok::lparen: {
                Token open = advance();
                ++depth_;
                Term inner = term();
                if (peek().kind != Tok::rparen) {
                    if (peek().kind == Tok::end) {
                        throw parse_error("unbalanced '(' opened here", open.line, open.column);
                    }
                    fail_expected("')'");
                }
                --depth_;
                advance();
                return inner;
            }
            case Tok::rparen:
                throw parse_error("unbalanced ')'", t.line, t.column);
            default:
                fail_expected("a variable, 0, 1, '!' or '('");
        }
    }

    void note_variable(const Token& name) {
        if (declared_ != nullptr) {
            if (std::find(declared_->begin(), declared_->end(), name.text) == declared_->end()) {
                throw parse_error("undeclared variable '" + name.text + "'", name.line, name.column);
            }
            return;
        }
        if (seen_ != nullptr && std::find(seen_->begin(), seen_->end(), name.text) == seen_->end()) {
            seen_->push_back(name.text);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    const std::vector<std::string>* declared_ = nullptr;
    std::vector<std::string>* seen_ = nullptr;
};

void format_into(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::variable: out += t.name(); return;
        case Term::Kind::zero: out += '0'; return;
        case Term::Kind::one: out += '1'; return;
        case Term::Kind::complement:
            out += "!(";
            format_into(t.operand(), out);
            out += ')';
            return;
        case Term::Kind::join:
        case Term::Kind::meet:
            out += '(';
            format_into(t.lhs(), out);
            out += t.kind() == Term::Kind::join ? " + " : " * ";
            format_into(t.rhs(), out);
            out += ')';
            return;
    }
}

}  // namespace

System parse_system(std::string_view text) { return Parser(text).system(); }
Term parse_term(std::string_view text) { return Parser(text).lone_term(); }
Equation parse_equation(std::string_view text) { return Parser(text).lone_equation(); }

std::string format_term(const Term& t) {
    std::string out;
    format_into(t, out);
    return out;
}

std::string format_equation(const Equation& e) { return format_term(e.lhs) + " = " + format_term(e.rhs); }

std::string format_system(const System& s) {
    std::string out = "vars ";
    for (std::size_t i = 0; i < s.variables().size(); ++i) {
        if (i != 0) out += ", ";
        out += s.variables()[i];
    }
    out += ";\n";
    for (const auto& eq : s.equations()) {
        out += format_equation(eq);
        out += '\n';
    }
    return out;
}

}  // namespace boolgeo
