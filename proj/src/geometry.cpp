#include "boolgeo/geometry.hpp"

#include <stdexcept>

#include "boolgeo/solve.hpp"

namespace boolgeo {

namespace {

void require_consistent(const OrthogonalSystem& o, const char* op) {
    if (!is_consistent(o)) {
        throw inconsistent_system(std::string(op) + ": the system has no solutions");
    }
}

}  // namespace

std::size_t coordinate_rank(const OrthogonalSystem& o) {
    require_consistent(o, "coordinate_rank");
    return o.minterm_count() - o.zero_count();
}

std::vector<MintermIndex> coordinate_atoms(const OrthogonalSystem& o) {
    require_consistent(o, "coordinate_atoms");
    return o.surviving();
}

bool is_irreducible(const OrthogonalSystem& o, Rank rank) {
    return coordinate_rank(o) <= rank.value();
}

ComponentStream::ComponentStream(OrthogonalSystem system, Rank rank)
    : system_(std::move(system)), live_(system_.surviving()) {
    require_consistent(system_, "decompose");
    if (live_.size() <= rank.value()) {
        whole_ = true;
    } else {
        choice_.resize(live_.size() - rank.value());
        for (std::size_t i = 0; i < choice_.size(); ++i) choice_[i] = i;
    }
}

std::optional<OrthogonalSystem> ComponentStream::next() {
    if (done_) return std::nullopt;
    if (whole_) {
        done_ = true;
        return system_;
    }
    if (started_) {
        // Next k-combination of {0..L-1} in lexicographic order.
        const std::size_t k = choice_.size();
        const std::size_t total = live_.size();
        std::size_t i = k;
        while (i > 0 && choice_[i - 1] == total - k + (i - 1)) --i;
        if (i == 0) {
            done_ = true;
            return std::nullopt;
        }
        ++choice_[i - 1];
        for (std::size_t j = i; j < k; ++j) choice_[j] = choice_[j - 1] + 1;
    }
    started_ = true;
    MintermSet zeros = system_.zeros();
    for (auto c : choice_) zeros.set(live_[c]);
    return OrthogonalSystem(system_.n(), std::move(zeros));
}

Decomposition decompose(const OrthogonalSystem& o, Rank rank, const Limits& limits) {
    require_consistent(o, "decompose");
    const mpz_class count = irr_count(o, rank);
    if (count > mpz_class(static_cast<unsigned long>(limits.max_enumeration))) {
        throw limit_exceeded("decomposition has " + count.get_str() + " components, more than the limit of " +
                             std::to_string(limits.max_enumeration));
    }
    Decomposition out;
    out.components.reserve(count.get_ui());
    ComponentStream stream(o, rank);
    while (auto c = stream.next()) out.components.push_back(std::move(*c));
    return out;
}

mpz_class irr_count(const OrthogonalSystem& o, Rank rank) {
    const std::size_t live = o.minterm_count() - o.zero_count();
    if (live <= rank.value()) return 1;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), live, rank.value());
    return out;
}

std::size_t irreducibility_rank(const OrthogonalSystem& o) noexcept {
    return o.minterm_count() - o.zero_count();
}

bool are_isomorphic(const OrthogonalSystem& first, const OrthogonalSystem& second) {
    if (first.n() != second.n()) {
        throw std::invalid_argument("isomorphism test needs systems over the same number of variables (" +
                                    std::to_string(first.n()) + " vs " + std::to_string(second.n()) + ")");
    }
    return first.zero_count() == second.zero_count();
}

}  // namespace boolgeo
