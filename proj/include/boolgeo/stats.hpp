#pragma once

// Averages over the uniform distribution on orthogonal systems in m variables,
// where each of the 2^m zero sets A is equally likely. Exact values use GMP
// rationals; only the asymptotic equivalents are floating point.

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "boolgeo/algebra.hpp"
#include "boolgeo/ortho.hpp"

namespace boolgeo {

// Reduced fraction with positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    explicit ExactRational(mpq_class value);
    ExactRational(const mpz_class& numerator, const mpz_class& denominator);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const noexcept { return value_; }

    double to_double() const { return value_.get_d(); }
    // "29/16", or "2" when the denominator is 1.
    std::string to_string() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }

private:
    mpq_class value_;
};

mpz_class binomial(unsigned long n, unsigned long k);

// (1/2^m) * (sum_{i<r} C(m,i) + 2^(m-r) C(m,r)). Throws std::invalid_argument if r > m.
ExactRational avg_irr_closed(std::uint64_t m, Rank rank);

// (1/2^m) * (sum over a of C(m,a) * Irr), with Irr = 1 for m-a <= r else C(m-a,r).
// The per-size form of the average before the binomial identities are applied.
ExactRational avg_irr_by_size(std::uint64_t m, Rank rank);

// Direct average of irr_count over all 2^m zero sets, m = 2^m_pow.
// Throws limit_exceeded for m_pow > 4.
ExactRational avg_irr_exhaustive(unsigned m_pow, Rank rank);

// C(m,r) / 2^r, the large-m equivalent of the average component count.
double asymptotic_irr(std::uint64_t m, Rank rank);

// avg_irr_closed(m, r) / (C(m,r) / 2^r), computed exactly and then rounded.
double avg_irr_asymptotic_ratio(std::uint64_t m, Rank rank);

// m / 2.
ExactRational avg_ir_rank(std::uint64_t m);
// 2^-m * sum_a (m-a) C(m,a).
ExactRational avg_ir_rank_sum(std::uint64_t m);
// Mean irreducibility_rank over all zero sets, m = 2^m_pow. Throws limit_exceeded for m_pow > 4.
ExactRational avg_ir_rank_exhaustive(unsigned m_pow);

// C(2m,m) / 4^m. Throws std::logic_error if the sum-of-squares route disagrees.
ExactRational iso_pair_probability(std::uint64_t m);
// sum_i C(m,i)^2 / 4^m.
ExactRational iso_pair_probability_sum(std::uint64_t m);
// Fraction of the 4^m pairs (A1, A2) of subsets of an m-set that give isomorphic
// algebraic sets, counted pair by pair. Throws limit_exceeded for m > 12.
ExactRational iso_pair_enumerated(unsigned m);

// 1 / sqrt(pi m).
double iso_pair_asymptotic(std::uint64_t m);

// Uniform sampler over zero sets of orthogonal systems in 2^m_pow variables.
// Bits are drawn from std::mt19937_64, so sequences are reproducible across platforms.
class OrthoSampler {
public:
    static constexpr unsigned max_m_pow = 16;
    static constexpr const char* generator_name = "mt19937_64";

    OrthoSampler(unsigned m_pow, std::uint64_t seed);

    OrthogonalSystem next();

private:
    unsigned m_pow_;
    std::mt19937_64 engine_;
};

OrthogonalSystem sample_ortho(unsigned m_pow, std::uint64_t seed);

struct MonteCarloSummary {
    std::uint64_t samples = 0;
    double mean_zero_count = 0;
    double mean_irr_count = 0;
    double mean_ir_rank = 0;
    // Fraction of consecutive sample pairs that are isomorphic.
    double iso_rate = 0;
};

// Draws 2 * samples systems: each pair contributes two systems to the means and one
// isomorphism trial.
MonteCarloSummary monte_carlo(unsigned m_pow, Rank rank, std::uint64_t samples, std::uint64_t seed);

}  // namespace boolgeo
