#include "boolgeo/solve.hpp"

#include <stdexcept>

namespace boolgeo {

Element eval_term(const Term& t, const XPoint& p) {
    switch (t.kind()) {
        case Term::Kind::zero: return Element::zero(p.rank);
        case Term::Kind::one: return Element::one(p.rank);
        case Term::Kind::variable:
            for (std::size_t i = 0; i < p.variables.size(); ++i) {
                if (p.variables[i] == t.name()) return p.values.at(i);
            }
            throw std::invalid_argument("point has no value for variable '" + t.name() + "'");
        case Term::Kind::complement: return complement(eval_term(t.operand(), p));
        case Term::Kind::join: return join(eval_term(t.lhs(), p), eval_term(t.rhs(), p));
        case Term::Kind::meet: return meet(eval_term(t.lhs(), p), eval_term(t.rhs(), p));
    }
    throw std::logic_error("unhandled term kind");
}

bool satisfies(const System& s, const XPoint& p) {
    for (const auto& name : s.variables()) {
        (void)p.at(name);
    }
    for (const auto& eq : s.equations()) {
        if (eval_term(eq.lhs, p) != eval_term(eq.rhs, p)) return false;
    }
    return true;
}

ZPoint to_zpoint(const AtomAssignment& assignment, const OrthogonalSystem& o, Rank rank) {
    if (assignment.cells.size() != rank.value()) {
        throw std::invalid_argument("atom assignment must place every atom");
    }
    std::vector<std::uint64_t> masks(o.minterm_count(), 0);
    for (std::size_t atom = 0; atom < assignment.cells.size(); ++atom) {
        masks.at(assignment.cells[atom]) |= std::uint64_t{1} << atom;
    }
    ZPoint out{rank, {}};
    out.values.reserve(masks.size());
    for (auto m : masks) out.values.push_back(Element::from_mask(rank, m));
    return out;
}

ZSolutionStream::ZSolutionStream(OrthogonalSystem system, Rank rank)
    : system_(std::move(system)), rank_(rank), live_(system_.surviving()), digits_(rank.value(), 0) {
    done_ = live_.empty();
}

std::optional<AtomAssignment> ZSolutionStream::next_assignment() {
    if (done_) return std::nullopt;
    if (started_) {
        // Odometer step: the last atom is the fastest digit.
        std::size_t k = digits_.size();
        while (k > 0) {
            --k;
            if (++digits_[k] < live_.size()) break;
            digits_[k] = 0;
            if (k == 0) {
                done_ = true;
                return std::nullopt;
            }
        }
    }
    started_ = true;
    AtomAssignment out;
    out.cells.reserve(digits_.size());
    for (auto d : digits_) out.cells.push_back(live_[d]);
    return out;
}

std::optional<ZPoint> ZSolutionStream::next() {
    auto a = next_assignment();
    if (!a) return std::nullopt;
    return to_zpoint(*a, system_, rank_);
}

ZSolutionStream solutions_z(const OrthogonalSystem& o, Rank rank) { return ZSolutionStream(o, rank); }

mpz_class count_solutions(const OrthogonalSystem& o, Rank rank) {
    mpz_class out;
    const mpz_class base = static_cast<unsigned long>(o.minterm_count() - o.zero_count());
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), rank.value());
    return out;
}

XSolutionStream::XSolutionStream(const System& s, Rank rank, const Limits& limits)
    : variables_(s.variables()), z_(orthogonalize(s, limits), rank) {}

std::optional<XPoint> XSolutionStream::next() {
    auto z = z_.next();
    if (!z) return std::nullopt;
    return x_from_z(*z, variables_);
}

XSolutionStream solutions_x(const System& s, Rank rank, const Limits& limits) {
    return XSolutionStream(s, rank, limits);
}

bool is_consistent(const OrthogonalSystem& o) noexcept { return o.zero_count() < o.minterm_count(); }

}  // namespace boolgeo
