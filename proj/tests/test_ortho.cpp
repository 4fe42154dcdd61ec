#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "boolgeo/json_io.hpp"
#include "boolgeo/ortho.hpp"
#include "oracle.hpp"

using namespace boolgeo;

namespace {

const std::vector<std::string> xy{"x1", "x2"};

std::vector<MintermIndex> members(const MintermSet& s) { return s.indices(); }

XPoint xpoint(unsigned r, const std::vector<std::string>& vars, const oracle::Masks& masks) {
    XPoint p{Rank(r), vars, {}};
    for (auto m : masks) p.values.push_back(Element::from_mask(Rank(r), m));
    return p;
}

ZPoint zpoint(unsigned r, const oracle::Masks& masks) {
    ZPoint p{Rank(r), {}};
    for (auto m : masks) p.values.push_back(Element::from_mask(Rank(r), m));
    return p;
}

oracle::Masks masks_of(const std::vector<Element>& values) {
    oracle::Masks out;
    for (const auto& v : values) out.push_back(v.mask());
    return out;
}

// Random system with 1..3 equations over vars.
System random_system(std::mt19937_64& rng, const std::vector<std::string>& vars) {
    std::vector<Equation> eqs;
    const int count = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < count; ++i) {
        eqs.push_back({oracle::random_term(rng, vars, 4), oracle::random_term(rng, vars, 4)});
    }
    return System(vars, std::move(eqs));
}

}  // namespace

TEST_CASE("MintermSet basics") {
    MintermSet s(70);
    s.set(0);
    s.set(69);
    CHECK(s.count() == 2);
    CHECK((~s).count() == 68);
    CHECK(MintermSet::full(70).all());
    CHECK(s.is_subset_of(MintermSet::full(70)));
    CHECK(members(s) == std::vector<MintermIndex>{0, 69});
    CHECK_THROWS_AS(s.set(70), std::out_of_range);
    CHECK_THROWS_AS(s |= MintermSet(4), std::invalid_argument);
}

TEST_CASE("truth_table") {
    CHECK(members(truth_table(parse_term("x1 * x2"), xy)) == std::vector<MintermIndex>{3});
    CHECK(truth_table(Term::one(), xy).all());
    CHECK(truth_table(Term::one(), xy).size() == 4);
    // !x1 * x2 is the minterm (0,1): a1 = 0, a2 = 1, LSB-first index 0b10.
    CHECK(members(truth_table(parse_term("!x1 * x2"), xy)) == std::vector<MintermIndex>{2});
    CHECK_THROWS_AS(truth_table(parse_term("x3"), xy), std::invalid_argument);
}

TEST_CASE("orthogonalize: worked examples") {
    const auto o = orthogonalize(parse_system("x1 * x2 = x2"));
    CHECK(o.n() == 2);
    CHECK(o.minterm_count() == 4);
    CHECK(members(o.zeros()) == std::vector<MintermIndex>{2});
    CHECK(format_minterm(2, 2) == "(0,1)");

    const auto empty = orthogonalize(parse_system("vars x1, x2"));
    CHECK(empty.zeros().none());

    const auto contradiction = orthogonalize(parse_system("x1 = 0; x1 = 1"));
    CHECK(contradiction.zeros().all());
    // Oracle: no rank-1 assignment satisfies both equations.
    CHECK(oracle::x_solutions(parse_system("x1 = 0; x1 = 1"), 1).empty());

    // The substitution example: x1 x2 = x1 kills (1,0).
    CHECK(members(orthogonalize(parse_system("x1 * x2 = x1")).zeros()) == std::vector<MintermIndex>{1});
}

TEST_CASE("orthogonalize respects the variable limit") {
    Limits limits;
    limits.max_vars = 2;
    CHECK_THROWS_AS(orthogonalize(parse_system("a = b; c = 0"), limits), limit_exceeded);
    CHECK_NOTHROW(orthogonalize(parse_system("a = b"), limits));
    limits.max_vars = 100;
    CHECK_THROWS_AS(orthogonalize(parse_system(
                                      "vars a0,a1,a2,a3,a4,a5,a6,a7,a8,a9,b0,b1,b2,b3,b4,b5,b6,b7,b8,b9,"
                                      "c0,c1,c2,c3,c4,c5,c6"),
                                  limits),
                    limit_exceeded);
}

TEST_CASE("orthogonalize handles sixteen variables") {
    std::string text = "vars ";
    for (int i = 1; i <= 16; ++i) text += (i > 1 ? ", x" : "x") + std::to_string(i);
    text += ";\nx1 * x16 = 0";
    const auto o = orthogonalize(parse_system(text));
    CHECK(o.minterm_count() == 65536);
    CHECK(o.zero_count() == 16384);
    CHECK(o.zeros().test((1U << 0) | (1U << 15)));
}

TEST_CASE("x_from_z") {
    const Rank r1(1);
    ZPoint p{r1, {Element::zero(r1), Element::zero(r1), Element::zero(r1), Element::one(r1)}};
    const XPoint x = x_from_z(p, 2);
    CHECK(x.at("x1").is_one());
    CHECK(x.at("x2").is_one());

    const Rank r2(2);
    ZPoint q{r2,
             {Element::zero(r2), Element::atom(r2, 0), Element::atom(r2, 1), Element::zero(r2)}};
    const XPoint y = x_from_z(q, xy);
    CHECK(y.at("x1") == Element::atom(r2, 0));
    CHECK(y.at("x2") == Element::atom(r2, 1));
    CHECK_THROWS_AS(y.at("x3"), std::out_of_range);
}

TEST_CASE("z_from_x") {
    const Rank r1(1);
    const ZPoint z = z_from_x(XPoint{r1, xy, {Element::one(r1), Element::zero(r1)}});
    CHECK(masks_of(z.values) == oracle::Masks{0, 1, 0, 0});

    const Rank r2(2);
    const ZPoint w = z_from_x(XPoint{r2, xy, {Element::atom(r2, 0), Element::atom(r2, 1)}});
    // z_(0,0) = {}, z_(1,0) = {0}, z_(0,1) = {1}, z_(1,1) = {}.
    CHECK(masks_of(w.values) == oracle::Masks{0b00, 0b01, 0b10, 0b00});
}

TEST_CASE("z_from_x after x_from_z is the identity on partitions (n=2, r=2)") {
    // Every tuple satisfying disjointness and cover, found by brute force.
    const auto partitions = oracle::z_solutions(std::vector<bool>(4, false), 2);
    CHECK(partitions.size() == 16);
    for (const auto& t : partitions) {
        const ZPoint p = zpoint(2, t);
        CHECK(is_partition(p));
        CHECK(z_from_x(x_from_z(p, 2)) == p);
    }
}

TEST_CASE("x_from_z after z_from_x is the identity, and images are partitions") {
    std::mt19937_64 rng(7);
    for (unsigned n = 1; n <= 3; ++n) {
        const auto vars = default_variable_names(n);
        for (unsigned r = 1; r <= 3; ++r) {
            std::uniform_int_distribution<std::uint64_t> pick(0, oracle::full(r));
            for (int trial = 0; trial < 200; ++trial) {
                oracle::Masks masks(n);
                for (auto& m : masks) m = pick(rng);
                const XPoint p = xpoint(r, vars, masks);
                const ZPoint z = z_from_x(p);
                CHECK(is_partition(z));
                CHECK(x_from_z(z, vars) == p);
            }
        }
    }
}

TEST_CASE("orthogonal form is canonical over the two-element algebra") {
    std::mt19937_64 rng(99);
    for (unsigned n = 1; n <= 2; ++n) {
        const auto vars = default_variable_names(n);
        std::vector<System> family;
        // One system per possible zero set, written as minterm equations.
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (1U << n)); ++subset) {
            std::vector<Equation> eqs;
            for (std::size_t alpha = 0; alpha < (std::size_t{1} << n); ++alpha) {
                if (!((subset >> alpha) & 1U)) continue;
                Term minterm = Term::one();
                for (unsigned i = 0; i < n; ++i) {
                    Term lit = Term::variable(vars[i]);
                    minterm = Term::meet(minterm, ((alpha >> i) & 1U) ? lit : Term::complement(lit));
                }
                eqs.push_back({minterm, Term::zero()});
            }
            System s(vars, eqs);
            CHECK(orthogonalize(s) == oracle::system_from_subset(n, subset));
            family.push_back(std::move(s));
        }
        for (int i = 0; i < 150; ++i) family.push_back(random_system(rng, vars));

        std::vector<std::set<oracle::Masks>> solution_sets;
        std::vector<OrthogonalSystem> forms;
        for (const auto& s : family) {
            solution_sets.push_back(oracle::x_solutions(s, 1));
            forms.push_back(orthogonalize(s));
        }
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = 0; j < family.size(); ++j) {
                CHECK((forms[i] == forms[j]) == (solution_sets[i] == solution_sets[j]));
            }
        }
    }
}

TEST_CASE("solution sets correspond under z_from_x (n <= 3, r <= 2)") {
    std::mt19937_64 rng(1234);
    for (unsigned n = 1; n <= 3; ++n) {
        const auto vars = default_variable_names(n);
        for (int trial = 0; trial < 12; ++trial) {
            const System s = random_system(rng, vars);
            const auto o = orthogonalize(s);
            std::vector<bool> in_a(o.minterm_count());
            for (MintermIndex a : o.zeros().indices()) in_a[a] = true;
            for (unsigned r = 1; r <= 2; ++r) {
                std::set<oracle::Masks> mapped;
                for (const auto& x : oracle::x_solutions(s, r)) {
                    mapped.insert(masks_of(z_from_x(xpoint(r, vars, x)).values));
                }
                CHECK(mapped == oracle::z_solutions(in_a, r));
            }
        }
    }
}

TEST_CASE("solves checks all three equation groups") {
    const auto o = OrthogonalSystem::from_indices(2, std::vector<MintermIndex>{2});
    CHECK(solves(o, zpoint(2, {0b01, 0b10, 0, 0})));
    CHECK_FALSE(solves(o, zpoint(2, {0b01, 0, 0b10, 0})));    // z_(0,1) must be 0
    CHECK_FALSE(solves(o, zpoint(2, {0b11, 0b10, 0, 0})));    // overlap
    CHECK_FALSE(solves(o, zpoint(2, {0b01, 0, 0, 0})));       // no cover
    CHECK_THROWS_AS(solves(o, zpoint(2, {0b11})), std::invalid_argument);
}

TEST_CASE("JSON and text renderings") {
    const auto o = orthogonalize(parse_system("x1 * x2 = x2"));
    CHECK(to_json_string(o) == R"({"n":2,"A":[2],"layout":"lsb-first"})");
    CHECK(orthogonal_from_json(std::string_view(R"({"n":2,"A":[2]})")) == o);
    CHECK(orthogonal_from_json(to_json(o)) == o);
    CHECK(format_orthogonal(o).starts_with("z_(0,1) = 0\n"));

    CHECK_THROWS_AS(orthogonal_from_json(std::string_view(R"({"n":2,"A":[4]})")), parse_error);
    CHECK_THROWS_AS(orthogonal_from_json(std::string_view(R"({"n":2})")), parse_error);
    CHECK_THROWS_AS(orthogonal_from_json(std::string_view(R"({"n":2,"A":[],"layout":"msb-first"})")),
                    parse_error);
    CHECK_THROWS_AS(orthogonal_from_json(std::string_view("{\"n\":2,")), parse_error);
    CHECK_THROWS_AS(orthogonal_from_json(std::string_view(R"({"n":17,"A":[]})")), limit_exceeded);
}
