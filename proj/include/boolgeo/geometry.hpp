#pragma once

// Classification of algebraic sets given by orthogonal systems.
//
// The coordinate algebra of a consistent orthogonal system is the boolean
// algebra whose atoms are the surviving minterms, so its rank is m - a. Over
// an algebra of rank r the solution set is irreducible iff m - a <= r; when
// m - a > r its irreducible components are the systems S_B with
// A subset B, |B| = m - r, one per choice of extra zeros.

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "boolgeo/algebra.hpp"
#include "boolgeo/ortho.hpp"

namespace boolgeo {

struct Decomposition {
    std::vector<OrthogonalSystem> components;
};

// m - |A|. Throws inconsistent_system for an empty solution set.
std::size_t coordinate_rank(const OrthogonalSystem& o);

// Minterms outside A, ascending; they are the atoms of the coordinate algebra.
std::vector<MintermIndex> coordinate_atoms(const OrthogonalSystem& o);

bool is_irreducible(const OrthogonalSystem& o, Rank rank);

// Lazily yields the components S_B. Zero sets B are produced by adding
// combinations of surviving minterms in ascending lexicographic order.
class ComponentStream {
public:
    ComponentStream(OrthogonalSystem system, Rank rank);

    std::optional<OrthogonalSystem> next();

private:
    OrthogonalSystem system_;
    std::vector<MintermIndex> live_;
    std::vector<std::size_t> choice_;
    bool whole_ = false;
    bool started_ = false;
    bool done_ = false;
};

// Throws inconsistent_system, and limit_exceeded if the component count
// exceeds limits.max_enumeration.
Decomposition decompose(const OrthogonalSystem& o, Rank rank, const Limits& limits = {});

// 1 if m - a <= r, otherwise C(m - a, r). Inconsistent systems (a = m) count as 1.
mpz_class irr_count(const OrthogonalSystem& o, Rank rank);

// m - a, or 0 for an inconsistent system.
std::size_t irreducibility_rank(const OrthogonalSystem& o) noexcept;

// |A1| == |A2|. Throws std::invalid_argument when the systems have different n.
bool are_isomorphic(const OrthogonalSystem& first, const OrthogonalSystem& second);

}  // namespace boolgeo
