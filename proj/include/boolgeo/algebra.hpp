#pragma once

// Finite boolean algebras of rank r, realised as the power set of r atoms.
// An element is a bitmask over atoms 0..r-1, so r is capped at one machine word.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boolgeo/errors.hpp"

namespace boolgeo {

class Rank {
public:
    static constexpr unsigned max_value = 64;

    // Throws std::invalid_argument for r == 0 and limit_exceeded for r > 64.
    explicit Rank(unsigned r);

    unsigned value() const noexcept { return r_; }

    // Mask with the low r bits set; the top element of the algebra.
    std::uint64_t full_mask() const noexcept {
        return r_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r_) - 1;
    }

    friend bool operator==(Rank, Rank) = default;

private:
    unsigned r_;
};

class Element {
public:
    static Element zero(Rank rank) noexcept { return Element(rank, 0); }
    static Element one(Rank rank) noexcept { return Element(rank, rank.full_mask()); }
    static Element atom(Rank rank, unsigned index);

    // Bits outside the rank are rejected, not truncated.
    static Element from_mask(Rank rank, std::uint64_t mask);

    Rank rank() const noexcept { return rank_; }
    std::uint64_t mask() const noexcept { return mask_; }

    bool is_zero() const noexcept { return mask_ == 0; }
    bool is_one() const noexcept { return mask_ == rank_.full_mask(); }
    bool contains(unsigned atom) const noexcept {
        return atom < 64 && ((mask_ >> atom) & 1U) != 0;
    }
    unsigned popcount() const noexcept;

    // Sorted atom indices.
    std::vector<unsigned> atom_indices() const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    Element(Rank rank, std::uint64_t mask) noexcept : rank_(rank), mask_(mask) {}

    Rank rank_;
    std::uint64_t mask_;
};

Element join(const Element& x, const Element& y);
Element meet(const Element& x, const Element& y);
Element complement(const Element& x) noexcept;

// x <= y in the lattice order, i.e. x * y == x.
bool leq(const Element& x, const Element& y);

// The r singletons {0}, ..., {r-1}, in ascending order.
std::vector<Element> atoms(Rank rank);

// The r co-atoms (complements of the atoms), in the same order.
std::vector<Element> coatoms(Rank rank);

// Every element of the algebra, ordered by mask. Only sensible for small r;
// throws limit_exceeded for r > 20.
std::vector<Element> all_elements(Rank rank);

// Textual notation: sorted atom list such as "{0,2}", with "{}" for zero.
std::string format_element(const Element& x);

// Accepts "{...}" atom lists plus the aliases "0" (empty) and "1" (full).
// Throws parse_error (column relative to the start of text).
Element parse_element(std::string_view text, Rank rank);

}  // namespace boolgeo
