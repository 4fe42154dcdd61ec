#include "boolgeo/ortho.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "boolgeo/json_io.hpp"

namespace boolgeo {

// ---------------------------------------------------------------------------
// MintermSet

MintermSet::MintermSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

MintermSet MintermSet::full(std::size_t size) { return ~MintermSet(size); }

MintermSet MintermSet::from_indices(std::size_t size, std::span<const MintermIndex> indices) {
    MintermSet s(size);
    for (MintermIndex i : indices) s.set(i);
    return s;
}

bool MintermSet::test(MintermIndex i) const {
    if (i >= size_) throw std::out_of_range("minterm index " + std::to_string(i) + " out of range");
    return ((words_[i / 64] >> (i % 64)) & 1U) != 0;
}

void MintermSet::set(MintermIndex i) {
    if (i >= size_) throw std::out_of_range("minterm index " + std::to_string(i) + " out of range");
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void MintermSet::reset(MintermIndex i) {
    if (i >= size_) throw std::out_of_range("minterm index " + std::to_string(i) + " out of range");
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t MintermSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool MintermSet::is_subset_of(const MintermSet& other) const {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

std::vector<MintermIndex> MintermSet::indices() const {
    std::vector<MintermIndex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
            out.push_back(static_cast<MintermIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        }
    }
    return out;
}

MintermSet& MintermSet::operator|=(const MintermSet& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

MintermSet& MintermSet::operator&=(const MintermSet& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

MintermSet& MintermSet::operator^=(const MintermSet& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

MintermSet MintermSet::operator~() const {
    MintermSet out = *this;
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
}

void MintermSet::trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
}

void MintermSet::require_same_size(const MintermSet& o) const {
    if (size_ != o.size_) throw std::invalid_argument("minterm sets of different sizes");
}

// ---------------------------------------------------------------------------
// OrthogonalSystem

namespace {

void check_hard_limit(std::size_t n) {
    if (n > Limits::hard_max_vars) {
        throw limit_exceeded(std::to_string(n) + " variables exceed the hard limit of " +
                             std::to_string(Limits::hard_max_vars));
    }
}

}  // namespace

OrthogonalSystem::OrthogonalSystem(unsigned n, MintermSet zeros) : n_(n), zeros_(std::move(zeros)) {
    check_hard_limit(n);
    if (zeros_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("zero set must have 2^n entries");
    }
}

OrthogonalSystem OrthogonalSystem::from_indices(unsigned n, std::span<const MintermIndex> zeros) {
    check_hard_limit(n);
    return OrthogonalSystem(n, MintermSet::from_indices(std::size_t{1} << n, zeros));
}

const Element& XPoint::at(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i] == name) return values.at(i);
    }
    throw std::out_of_range("point has no variable '" + std::string(name) + "'");
}

std::vector<std::string> default_variable_names(unsigned n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (unsigned i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

// ---------------------------------------------------------------------------
// Truth tables

namespace {

class TableEvaluator {
public:
    explicit TableEvaluator(std::span<const std::string> vars) : vars_(vars), size_(std::size_t{1} << vars.size()) {}

    MintermSet eval(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::zero: return MintermSet(size_);
            case Term::Kind::one: return MintermSet::full(size_);
            case Term::Kind::variable: return variable_pattern(t.name());
            case Term::Kind::complement: return ~eval(t.operand());
            case Term::Kind::join: {
                MintermSet out = eval(t.lhs());
                out |= eval(t.rhs());
                return out;
            }
            case Term::Kind::meet: {
                MintermSet out = eval(t.lhs());
                out &= eval(t.rhs());
                return out;
            }
        }
        throw std::logic_error("unhandled term kind");
    }

private:
    MintermSet variable_pattern(const std::string& name) {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
        const auto bit = static_cast<std::size_t>(it - vars_.begin());
        MintermSet s(size_);
        for (std::size_t alpha = 0; alpha < size_; ++alpha) {
            if ((alpha >> bit) & 1U) s.set(static_cast<MintermIndex>(alpha));
        }
        return s;
    }

    std::span<const std::string> vars_;
    std::size_t size_;
};

}  // namespace

MintermSet truth_table(const Term& t, std::span<const std::string> vars) {
    check_hard_limit(vars.size());
    return TableEvaluator(vars).eval(t);
}

OrthogonalSystem orthogonalize(const System& s, const Limits& limits) {
    const std::size_t n = s.variable_count();
    if (n > limits.max_vars) {
        throw limit_exceeded(std::to_string(n) + " variables exceed the configured limit of " +
                             std::to_string(limits.max_vars));
    }
    check_hard_limit(n);
    TableEvaluator eval(s.variables());
    MintermSet zeros(std::size_t{1} << n);
    for (const auto& eq : s.equations()) {
        MintermSet diff = eval.eval(eq.lhs);
        diff ^= eval.eval(eq.rhs);
        zeros |= diff;
    }
    return OrthogonalSystem(static_cast<unsigned>(n), std::move(zeros));
}

// ---------------------------------------------------------------------------
// Point maps

XPoint x_from_z(const ZPoint& p, std::span<const std::string> vars) {
    const std::size_t n = vars.size();
    check_hard_limit(n);
    if (p.values.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("Z-point must have 2^n coordinates");
    }
    XPoint out{p.rank, {vars.begin(), vars.end()}, {}};
    out.values.assign(n, Element::zero(p.rank));
    for (std::size_t alpha = 0; alpha < p.values.size(); ++alpha) {
        for (std::size_t i = 0; i < n; ++i) {
            if ((alpha >> i) & 1U) out.values[i] = join(out.values[i], p.values[alpha]);
        }
    }
    return out;
}

XPoint x_from_z(const ZPoint& p, unsigned n) {
    const auto names = default_variable_names(n);
    return x_from_z(p, names);
}

ZPoint z_from_x(const XPoint& p) {
    const std::size_t n = p.values.size();
    check_hard_limit(n);
    if (p.variables.size() != n) throw std::invalid_argument("X-point names and values differ in length");
    ZPoint out{p.rank, {}};
    out.values.reserve(std::size_t{1} << n);
    for (std::size_t alpha = 0; alpha < (std::size_t{1} << n); ++alpha) {
        Element z = Element::one(p.rank);
        for (std::size_t i = 0; i < n; ++i) {
            z = meet(z, ((alpha >> i) & 1U) ? p.values[i] : complement(p.values[i]));
        }
        out.values.push_back(z);
    }
    return out;
}

bool is_partition(const ZPoint& p) {
    std::uint64_t seen = 0;
    for (const auto& v : p.values) {
        if (v.rank() != p.rank) throw rank_mismatch("Z-point coordinates of mixed rank");
        if ((seen & v.mask()) != 0) return false;
        seen |= v.mask();
    }
    return seen == p.rank.full_mask();
}

bool solves(const OrthogonalSystem& o, const ZPoint& p) {
    if (p.values.size() != o.minterm_count()) {
        throw std::invalid_argument("Z-point dimension does not match the system");
    }
    for (MintermIndex alpha : o.zeros().indices()) {
        if (!p.values[alpha].is_zero()) return false;
    }
    return is_partition(p);
}

// ---------------------------------------------------------------------------
// Rendering

std::string format_minterm(MintermIndex alpha, unsigned n) {
    std::string out = "(";
    for (unsigned i = 0; i < n; ++i) {
        if (i != 0) out += ',';
        out += ((alpha >> i) & 1U) ? '1' : '0';
    }
    out += ')';
    return out;
}

std::string format_orthogonal(const OrthogonalSystem& o) {
    std::string out;
    for (MintermIndex alpha : o.zeros().indices()) {
        out += "z_" + format_minterm(alpha, o.n()) + " = 0\n";
    }
    out += "# plus z_a * z_b = 0 for a != b and the join of all " + std::to_string(o.minterm_count()) +
           " z_a = 1\n";
    return out;
}

nlohmann::ordered_json to_json(const OrthogonalSystem& o) {
    return nlohmann::ordered_json{{"n", o.n()}, {"A", o.zeros().indices()}, {"layout", "lsb-first"}};
}

OrthogonalSystem orthogonal_from_json(const nlohmann::ordered_json& j, const Limits& limits) {
    auto fail = [](const std::string& msg) -> OrthogonalSystem { throw parse_error(msg, 1, 1); };
    if (!j.is_object()) return fail("orthogonal system must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_unsigned()) return fail("field \"n\" must be a non-negative integer");
    if (!j.contains("A") || !j["A"].is_array()) return fail("field \"A\" must be an array of minterm indices");
    if (j.contains("layout") && j["layout"] != "lsb-first") {
        return fail("unsupported minterm layout " + j["layout"].dump());
    }
    const auto n = j["n"].get<std::uint64_t>();
    if (n > limits.max_vars) {
        throw limit_exceeded(std::to_string(n) + " variables exceed the configured limit of " +
                             std::to_string(limits.max_vars));
    }
    check_hard_limit(n);
    if (n == 0) return fail("field \"n\" must be at least 1");
    const std::size_t m = std::size_t{1} << n;
    MintermSet zeros(m);
    for (const auto& v : j["A"]) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= m) {
            return fail("minterm index " + v.dump() + " is not in [0, " + std::to_string(m) + ")");
        }
        zeros.set(v.get<MintermIndex>());
    }
    return OrthogonalSystem(static_cast<unsigned>(n), std::move(zeros));
}

std::string to_json_string(const OrthogonalSystem& o) { return to_json(o).dump(); }

OrthogonalSystem orthogonal_from_json(std::string_view text, const Limits& limits) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), 1, e.byte);
    }
    return orthogonal_from_json(j, limits);
}

}  // namespace boolgeo
