#include "boolgeo/stats.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boolgeo/geometry.hpp"

namespace boolgeo {

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

std::string ExactRational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace {

mpz_class pow2(std::uint64_t e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

void require_rank_le_m(std::uint64_t m, Rank rank) {
    if (rank.value() > m) {
        throw std::invalid_argument("rank " + std::to_string(rank.value()) + " exceeds m = " + std::to_string(m));
    }
}

unsigned long to_ulong(std::uint64_t m) {
    if (m > static_cast<std::uint64_t>(static_cast<unsigned long>(-1))) throw limit_exceeded("m too large");
    return static_cast<unsigned long>(m);
}

void require_exhaustive_size(unsigned m_pow) {
    if (m_pow > 4) {
        throw limit_exceeded("exhaustive enumeration needs m = 2^" + std::to_string(m_pow) +
                             " <= 16 (2^m zero sets)");
    }
}

}  // namespace

ExactRational avg_irr_closed(std::uint64_t m, Rank rank) {
    require_rank_le_m(m, rank);
    const auto mm = to_ulong(m);
    const unsigned long r = rank.value();
    mpz_class total = 0;
    for (unsigned long i = 0; i < r; ++i) total += binomial(mm, i);
    total += pow2(m - r) * binomial(mm, r);
    return ExactRational(total, pow2(m));
}

ExactRational avg_irr_by_size(std::uint64_t m, Rank rank) {
    require_rank_le_m(m, rank);
    const auto mm = to_ulong(m);
    const unsigned long r = rank.value();
    mpz_class total = 0;
    for (unsigned long a = 0; a <= mm; ++a) {
        const unsigned long live = mm - a;
        total += binomial(mm, a) * (live <= r ? mpz_class(1) : binomial(live, r));
    }
    return ExactRational(total, pow2(m));
}

ExactRational avg_irr_exhaustive(unsigned m_pow, Rank rank) {
    require_exhaustive_size(m_pow);
    const std::size_t m = std::size_t{1} << m_pow;
    mpz_class total = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        MintermSet zeros(m);
        for (std::size_t i = 0; i < m; ++i) {
            if ((subset >> i) & 1U) zeros.set(static_cast<MintermIndex>(i));
        }
        total += irr_count(OrthogonalSystem(m_pow, std::move(zeros)), rank);
    }
    return ExactRational(total, pow2(m));
}

double asymptotic_irr(std::uint64_t m, Rank rank) {
    require_rank_le_m(m, rank);
    const mpq_class v(binomial(to_ulong(m), rank.value()), pow2(rank.value()));
    return v.get_d();
}

double avg_irr_asymptotic_ratio(std::uint64_t m, Rank rank) {
    const mpq_class asym(binomial(to_ulong(m), rank.value()), pow2(rank.value()));
    mpq_class ratio = avg_irr_closed(m, rank).value() / asym;
    return ratio.get_d();
}

ExactRational avg_ir_rank(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("m must be at least 1");
    return ExactRational(mpz_class(to_ulong(m)), mpz_class(2));
}

ExactRational avg_ir_rank_sum(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("m must be at least 1");
    const auto mm = to_ulong(m);
    mpz_class total = 0;
    for (unsigned long a = 0; a <= mm; ++a) total += (mm - a) * binomial(mm, a);
    return ExactRational(total, pow2(m));
}

ExactRational avg_ir_rank_exhaustive(unsigned m_pow) {
    require_exhaustive_size(m_pow);
    const std::size_t m = std::size_t{1} << m_pow;
    mpz_class total = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        MintermSet zeros(m);
        for (std::size_t i = 0; i < m; ++i) {
            if ((subset >> i) & 1U) zeros.set(static_cast<MintermIndex>(i));
        }
        total += static_cast<unsigned long>(irreducibility_rank(OrthogonalSystem(m_pow, std::move(zeros))));
    }
    return ExactRational(total, pow2(m));
}

ExactRational iso_pair_probability(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("m must be at least 1");
    ExactRational closed(binomial(to_ulong(2 * m), to_ulong(m)), pow2(2 * m));
    if (!(closed == iso_pair_probability_sum(m))) {
        throw std::logic_error("sum of squared binomials disagrees with C(2m,m)");
    }
    return closed;
}

ExactRational iso_pair_probability_sum(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("m must be at least 1");
    const auto mm = to_ulong(m);
    mpz_class total = 0;
    for (unsigned long i = 0; i <= mm; ++i) {
        const mpz_class c = binomial(mm, i);
        total += c * c;
    }
    return ExactRational(total, pow2(2 * m));
}

ExactRational iso_pair_enumerated(unsigned m) {
    if (m == 0) throw std::invalid_argument("m must be at least 1");
    if (m > 12) throw limit_exceeded("pair enumeration needs m <= 12 (4^m pairs)");
    const std::uint64_t subsets = std::uint64_t{1} << m;
    std::uint64_t matches = 0;
    for (std::uint64_t a1 = 0; a1 < subsets; ++a1) {
        for (std::uint64_t a2 = 0; a2 < subsets; ++a2) {
            if (std::popcount(a1) == std::popcount(a2)) ++matches;
        }
    }
    return ExactRational(mpz_class(static_cast<unsigned long>(matches)), pow2(2 * m));
}

double iso_pair_asymptotic(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("m must be at least 1");
    return 1.0 / std::sqrt(std::numbers::pi * static_cast<double>(m));
}

OrthoSampler::OrthoSampler(unsigned m_pow, std::uint64_t seed) : m_pow_(m_pow), engine_(seed) {
    if (m_pow > max_m_pow) {
        throw limit_exceeded("sampling supports m = 2^k with k <= " + std::to_string(max_m_pow));
    }
}

OrthogonalSystem OrthoSampler::next() {
    const std::size_t m = std::size_t{1} << m_pow_;
    MintermSet zeros(m);
    for (std::size_t base = 0; base < m; base += 64) {
        const std::uint64_t word = engine_();
        for (std::size_t i = 0; i < 64 && base + i < m; ++i) {
            if ((word >> i) & 1U) zeros.set(static_cast<MintermIndex>(base + i));
        }
    }
    return OrthogonalSystem(m_pow_, std::move(zeros));
}

OrthogonalSystem sample_ortho(unsigned m_pow, std::uint64_t seed) { return OrthoSampler(m_pow, seed).next(); }

MonteCarloSummary monte_carlo(unsigned m_pow, Rank rank, std::uint64_t samples, std::uint64_t seed) {
    OrthoSampler sampler(m_pow, seed);
    MonteCarloSummary out;
    out.samples = samples;
    if (samples == 0) return out;
    double zeros = 0;
    double irr = 0;
    double ir = 0;
    std::uint64_t iso = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const OrthogonalSystem first = sampler.next();
        const OrthogonalSystem second = sampler.next();
        for (const auto* o : {&first, &second}) {
            zeros += static_cast<double>(o->zero_count());
            irr += irr_count(*o, rank).get_d();
            ir += static_cast<double>(irreducibility_rank(*o));
        }
        if (are_isomorphic(first, second)) ++iso;
    }
    const double draws = 2.0 * static_cast<double>(samples);
    out.mean_zero_count = zeros / draws;
    out.mean_irr_count = irr / draws;
    out.mean_ir_rank = ir / draws;
    out.iso_rate = static_cast<double>(iso) / static_cast<double>(samples);
    return out;
}

}  // namespace boolgeo
