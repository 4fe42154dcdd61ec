#pragma once

// Terms, equations and systems over the signature {+, *, !, 0, 1}, plus a
// recursive-descent reader and a fully parenthesised printer.
//
// Concrete syntax (one equation per line or separated by ';'):
//
//   vars x1, x2, x3;          optional header fixing variable order
//   x1 * x2 = x2              '*' or '&' is meet
//   !x1 + x2 = (x3 & x4)'     '+' or '\/' is join, '!' prefix or "'" postfix is complement
//
// Precedence is complement > meet > join. Juxtaposition is not meet.
// '#' starts a comment running to the end of the line.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "boolgeo/errors.hpp"

namespace boolgeo {

class Term {
public:
    enum class Kind { variable, zero, one, join, meet, complement };

    static Term variable(std::string name);
    static Term zero();
    static Term one();
    static Term join(Term lhs, Term rhs);
    static Term meet(Term lhs, Term rhs);
    static Term complement(Term operand);

    Kind kind() const noexcept { return node_->kind; }
    bool is_binary() const noexcept { return kind() == Kind::join || kind() == Kind::meet; }

    // Only valid for Kind::variable.
    const std::string& name() const;
    // Only valid for binary kinds.
    Term lhs() const;
    Term rhs() const;
    // Only valid for Kind::complement.
    Term operand() const;

    std::size_t depth() const noexcept { return node_->depth; }
    std::size_t size() const noexcept { return node_->size; }

    // Appends variables not already present, in left-to-right order.
    void collect_variables(std::vector<std::string>& out) const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        std::size_t depth;
        std::size_t size;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Term make(Kind kind, std::string name, std::shared_ptr<const Node> left,
                     std::shared_ptr<const Node> right);

    std::shared_ptr<const Node> node_;
};

struct Equation {
    Term lhs;
    Term rhs;

    friend bool operator==(const Equation&, const Equation&) = default;
};

// An ordered variable list X = (x1, ..., xn) together with equations over it.
// Declared variables may be unused; they still count towards n.
class System {
public:
    // Throws std::invalid_argument if variables are empty or repeated, or if an
    // equation mentions an undeclared variable.
    System(std::vector<std::string> variables, std::vector<Equation> equations);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<Equation>& equations() const noexcept { return equations_; }
    std::size_t variable_count() const noexcept { return variables_.size(); }

    // Index of a variable in the declared order, or npos.
    std::size_t index_of(std::string_view name) const noexcept;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const System&, const System&) = default;

private:
    std::vector<std::string> variables_;
    std::vector<Equation> equations_;
};

// Variable order is the `vars` header if present, otherwise first occurrence.
System parse_system(std::string_view text);
Term parse_term(std::string_view text);
Equation parse_equation(std::string_view text);

std::string format_term(const Term& t);
std::string format_equation(const Equation& e);
// Always emits a `vars` header so that unused variables survive a round trip.
std::string format_system(const System& s);

}  // namespace boolgeo
