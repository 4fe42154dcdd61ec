#pragma once

// Orthogonal (minterm) form of boolean equation systems.
//
// For variables x1..xn the orthogonal variables are z_alpha, alpha in {0,1}^n,
// with z_alpha = x1^a1 * ... * xn^an (x^1 = x, x^0 = !x) and conversely
// x_i = join of z_alpha over alpha with a_i = 1. Every system is equivalent to
//
//   { z_alpha = 0 : alpha in A }  +  { z_alpha * z_beta = 0 : alpha != beta }  +  { join z_alpha = 1 }
//
// and only A is stored. A minterm index packs alpha LSB-first: bit i holds the
// exponent of variable x_{i+1}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boolgeo/algebra.hpp"
#include "boolgeo/syntax.hpp"

namespace boolgeo {

using MintermIndex = std::uint32_t;

struct Limits {
    // Absolute ceiling on n regardless of configuration (2^26 minterms).
    static constexpr unsigned hard_max_vars = 26;

    unsigned max_vars = 16;
    // Largest number of objects an eager operation may materialise.
    std::uint64_t max_enumeration = 1'000'000;
};

// Fixed-size bit set over minterm indices 0..size-1.
class MintermSet {
public:
    MintermSet() = default;
    explicit MintermSet(std::size_t size);
    static MintermSet full(std::size_t size);
    static MintermSet from_indices(std::size_t size, std::span<const MintermIndex> indices);

    std::size_t size() const noexcept { return size_; }
    bool test(MintermIndex i) const;
    void set(MintermIndex i);
    void reset(MintermIndex i);
    std::size_t count() const noexcept;
    bool none() const noexcept { return count() == 0; }
    bool all() const noexcept { return count() == size_; }
    bool is_subset_of(const MintermSet& other) const;

    // Ascending list of members.
    std::vector<MintermIndex> indices() const;

    MintermSet& operator|=(const MintermSet& o);
    MintermSet& operator&=(const MintermSet& o);
    MintermSet& operator^=(const MintermSet& o);
    MintermSet operator~() const;

    friend bool operator==(const MintermSet&, const MintermSet&) = default;

private:
    void trim() noexcept;
    void require_same_size(const MintermSet& o) const;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class OrthogonalSystem {
public:
    // zeros must have size 2^n. Throws limit_exceeded if n exceeds the hard limit.
    OrthogonalSystem(unsigned n, MintermSet zeros);
    static OrthogonalSystem from_indices(unsigned n, std::span<const MintermIndex> zeros);

    unsigned n() const noexcept { return n_; }
    // m = 2^n, the number of orthogonal variables.
    std::size_t minterm_count() const noexcept { return zeros_.size(); }
    // The set A of minterms forced to zero.
    const MintermSet& zeros() const noexcept { return zeros_; }
    // a = |A|.
    std::size_t zero_count() const noexcept { return zeros_.count(); }
    // Minterms not in A, ascending.
    std::vector<MintermIndex> surviving() const { return (~zeros_).indices(); }

    friend bool operator==(const OrthogonalSystem&, const OrthogonalSystem&) = default;

private:
    unsigned n_;
    MintermSet zeros_;
};

// A point in Z-space: one element per minterm index, all of one rank.
struct ZPoint {
    Rank rank;
    std::vector<Element> values;

    friend bool operator==(const ZPoint&, const ZPoint&) = default;
};

// A point in X-space: values[i] is the value of variables[i].
struct XPoint {
    Rank rank;
    std::vector<std::string> variables;
    std::vector<Element> values;

    // Throws std::out_of_range for an unknown name.
    const Element& at(std::string_view name) const;

    friend bool operator==(const XPoint&, const XPoint&) = default;
};

// Default variable names x1..xn, used when a system is known only in orthogonal form.
std::vector<std::string> default_variable_names(unsigned n);

// Entry alpha is t evaluated in the two-element algebra at the assignment encoded by alpha.
// Throws std::invalid_argument for a variable not in vars and limit_exceeded past the hard limit.
MintermSet truth_table(const Term& t, std::span<const std::string> vars);

// A = { alpha : some equation has lhs(alpha) != rhs(alpha) }.
OrthogonalSystem orthogonalize(const System& s, const Limits& limits = {});

// x_i = join of p[alpha] over alpha with bit i-1 set.
XPoint x_from_z(const ZPoint& p, std::span<const std::string> vars);
XPoint x_from_z(const ZPoint& p, unsigned n);

// z_alpha = meet over i of x_i (bit set) or !x_i (bit clear).
ZPoint z_from_x(const XPoint& p);

// Pairwise disjoint and covering, i.e. satisfies the implicit equations of every orthogonal system.
bool is_partition(const ZPoint& p);

// p satisfies all three equation groups of o.
bool solves(const OrthogonalSystem& o, const ZPoint& p);

// "(a1,...,an)" for a minterm index.
std::string format_minterm(MintermIndex alpha, unsigned n);

// Human-readable rendering, one "z_(0,1) = 0" line per member of A. The implicit
// disjointness and cover equations are summarised in a trailing comment line.
std::string format_orthogonal(const OrthogonalSystem& o);

// {"n":2,"A":[2],"layout":"lsb-first"}
std::string to_json_string(const OrthogonalSystem& o);

// Accepts the object above; "layout" is optional but must be "lsb-first" if present.
// Throws parse_error for malformed input and limit_exceeded if n > limits.max_vars.
OrthogonalSystem orthogonal_from_json(std::string_view text, const Limits& limits = {});

}  // namespace boolgeo
