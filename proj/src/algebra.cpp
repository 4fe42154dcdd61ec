#include "boolgeo/algebra.hpp"

#include <bit>
#include <cctype>
#include <charconv>

namespace boolgeo {

Rank::Rank(unsigned r) : r_(r) {
    if (r == 0) {
        throw std::invalid_argument("rank must be at least 1 (the trivial algebra is excluded)");
    }
    if (r > max_value) {
        throw limit_exceeded("rank " + std::to_string(r) + " exceeds the maximum of " +
                             std::to_string(max_value));
    }
}

Element Element::atom(Rank rank, unsigned index) {
    if (index >= rank.value()) {
        throw std::out_of_range("atom index " + std::to_string(index) + " out of range for rank " +
                                std::to_string(rank.value()));
    }
    return Element(rank, std::uint64_t{1} << index);
}

Element Element::from_mask(Rank rank, std::uint64_t mask) {
    if ((mask & ~rank.full_mask()) != 0) {
        throw std::out_of_range("mask has bits outside rank " + std::to_string(rank.value()));
    }
    return Element(rank, mask);
}

unsigned Element::popcount() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<unsigned> Element::atom_indices() const {
    std::vector<unsigned> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(static_cast<unsigned>(std::countr_zero(m)));
    }
    return out;
}

namespace {

void require_same_rank(const Element& x, const Element& y, const char* op) {
    if (x.rank() != y.rank()) {
        throw rank_mismatch(std::string(op) + ": operands have ranks " +
                            std::to_string(x.rank().value()) + " and " +
                            std::to_string(y.rank().value()));
    }
}

}  // namespace

Element join(const Element& x, const Element& y) {
    require_same_rank(x, y, "join");
    return Element::from_mask(x.rank(), x.mask() | y.mask());
}

Element meet(const Element& x, const Element& y) {
    require_same_rank(x, y, "meet");
    return Element::from_mask(x.rank(), x.mask() & y.mask());
}

Element complement(const Element& x) noexcept {
    return Element::from_mask(x.rank(), ~x.mask() & x.rank().full_mask());
}

bool leq(const Element& x, const Element& y) { return meet(x, y) == x; }

std::vector<Element> atoms(Rank rank) {
    std::vector<Element> out;
    out.reserve(rank.value());
    for (unsigned i = 0; i < rank.value(); ++i) {
        out.push_back(Element::atom(rank, i));
    }
    return out;
}

std::vector<Element> coatoms(Rank rank) {
    std::vector<Element> out;
    out.reserve(rank.value());
    for (unsigned i = 0; i < rank.value(); ++i) {
        out.push_back(complement(Element::atom(rank, i)));
    }
    return out;
}

std::vector<Element> all_elements(Rank rank) {
    if (rank.value() > 20) {
        throw limit_exceeded("refusing to list all 2^" + std::to_string(rank.value()) + " elements");
    }
    std::vector<Element> out;
    const std::uint64_t count = std::uint64_t{1} << rank.value();
    out.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        out.push_back(Element::from_mask(rank, m));
    }
    return out;
}

std::string format_element(const Element& x) {
    std::string out = "{";
    bool first = true;
    for (unsigned a : x.atom_indices()) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
    }
    out += '}';
    return out;
}

Element parse_element(std::string_view text, Rank rank) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> Element { throw parse_error(msg, 1, pos + 1); };

    skip_ws();
    if (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
        const char c = text[pos++];
        skip_ws();
        if (pos != text.size()) return fail("unexpected trailing input after element");
        return c == '0' ? Element::zero(rank) : Element::one(rank);
    }
    if (pos >= text.size() || text[pos] != '{') return fail("expected '{', '0' or '1'");
    ++pos;
    std::uint64_t mask = 0;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            unsigned value = 0;
            const char* begin = text.data() + pos;
            auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
            if (ec != std::errc{} || ptr == begin) return fail("expected atom index");
            if (value >= rank.value()) {
                return fail("atom " + std::to_string(value) + " out of range for rank " +
                            std::to_string(rank.value()));
            }
            pos += static_cast<std::size_t>(ptr - begin);
            mask |= std::uint64_t{1} << value;
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            return fail("expected ',' or '}'");
        }
    }
    skip_ws();
    if (pos != text.size()) return fail("unexpected trailing input after element");
    return Element::from_mask(rank, mask);
}

}  // namespace boolgeo
