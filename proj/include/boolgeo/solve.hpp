#pragma once

// Solution sets over the boolean algebra of rank r.
//
// A solution of an orthogonal system is a partition of the r atoms among the
// surviving minterms: each atom lands in exactly one z_alpha with alpha not in A.
// Hence there are exactly (m - a)^r solutions, enumerated here lazily.

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "boolgeo/algebra.hpp"
#include "boolgeo/ortho.hpp"
#include "boolgeo/syntax.hpp"

namespace boolgeo {

// Throws std::invalid_argument if p lacks a variable of t.
Element eval_term(const Term& t, const XPoint& p);

// eval(lhs) == eval(rhs) for every equation.
bool satisfies(const System& s, const XPoint& p);

// cells[k] is the minterm receiving atom k.
struct AtomAssignment {
    std::vector<MintermIndex> cells;

    friend bool operator==(const AtomAssignment&, const AtomAssignment&) = default;
};

ZPoint to_zpoint(const AtomAssignment& assignment, const OrthogonalSystem& o, Rank rank);

// Lexicographic over atom assignments: atom 0 varies slowest, and each atom
// runs over the surviving minterms in ascending order.
class ZSolutionStream {
public:
    ZSolutionStream(OrthogonalSystem system, Rank rank);

    std::optional<ZPoint> next();
    std::optional<AtomAssignment> next_assignment();

    const OrthogonalSystem& system() const noexcept { return system_; }
    Rank rank() const noexcept { return rank_; }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ZPoint;
        using difference_type = std::ptrdiff_t;
        using pointer = const ZPoint*;
        using reference = const ZPoint&;

        iterator() = default;
        explicit iterator(ZSolutionStream* stream) : stream_(stream) { ++*this; }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = stream_->next();
            if (!current_) stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        ZSolutionStream* stream_ = nullptr;
        std::optional<ZPoint> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    OrthogonalSystem system_;
    Rank rank_;
    std::vector<MintermIndex> live_;
    std::vector<std::size_t> digits_;
    bool started_ = false;
    bool done_ = false;
};

ZSolutionStream solutions_z(const OrthogonalSystem& o, Rank rank);

// (m - a)^r, exactly.
mpz_class count_solutions(const OrthogonalSystem& o, Rank rank);

// Solutions of a source system, produced through its orthogonal form and x_from_z.
class XSolutionStream {
public:
    XSolutionStream(const System& s, Rank rank, const Limits& limits = {});

    std::optional<XPoint> next();

    const OrthogonalSystem& orthogonal() const noexcept { return z_.system(); }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = XPoint;
        using difference_type = std::ptrdiff_t;
        using pointer = const XPoint*;
        using reference = const XPoint&;

        iterator() = default;
        explicit iterator(XSolutionStream* stream) : stream_(stream) { ++*this; }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = stream_->next();
            if (!current_) stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        XSolutionStream* stream_ = nullptr;
        std::optional<XPoint> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    std::vector<std::string> variables_;
    ZSolutionStream z_;
};

XSolutionStream solutions_x(const System& s, Rank rank, const Limits& limits = {});

// |A| < 2^n; the answer does not depend on the rank.
bool is_consistent(const OrthogonalSystem& o) noexcept;

}  // namespace boolgeo
