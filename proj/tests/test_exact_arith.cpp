#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quartic_forge/number_field.hpp"
#include "quartic_forge/poly_parse.hpp"
#include "quartic_forge/series.hpp"
#include "quartic_forge/unipoly.hpp"

using namespace quartic_forge;

namespace {

UniPoly P(const char* s) { return parse_poly(s); }

UniPoly random_poly(std::mt19937_64& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-bound, bound);
    const int d = deg(rng);
    std::vector<Rat> v;
    for (int i = 0; i <= d; ++i) v.emplace_back(coef(rng));
    if (v.back() == 0) v.back() = 1;
    return UniPoly(std::move(v));
}

}  // namespace

TEST(Rational, CanonicalForm) {
    const Rat r = parse_rat("6/-4");
    EXPECT_EQ(to_canonical(r), "-3/2");
    EXPECT_EQ(to_canonical(Rat(0)), "0/1");
    EXPECT_EQ(to_display(Rat(5)), "5");
    EXPECT_GT(denominator_of(r), 0);
    EXPECT_THROW(parse_rat("1/0"), Error);
    EXPECT_THROW(parse_rat("abc"), Error);
}

TEST(Parse, AcceptsTheUsualNotation) {
    EXPECT_EQ(P("t^7 - t - 1"), UniPoly::from_ints({-1, -1, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(P("x^2 - 1"), P("(x-1)*(x+1)"));
    EXPECT_EQ(P("2t^2 + 3/4 t"), (UniPoly{0, Rat(3, 4), 2}));
    EXPECT_EQ(P("-(t+1)^3"), (UniPoly{-1, -3, -3, -1}));
    EXPECT_THROW(P("t^7 - x"), Error);
    EXPECT_THROW(P("t^"), Error);
    EXPECT_THROW(P("t + + "), Error);
}

TEST(PolyDivmod, Examples) {
    auto [q, r] = poly_divmod(P("t^9"), P("t^7 - t - 1"));
    EXPECT_EQ(q, P("t^2"));
    EXPECT_EQ(r, P("t^3 + t^2"));
    auto [q2, r2] = poly_divmod(P("x"), P("x"));
    EXPECT_EQ(q2, UniPoly::constant(1));
    EXPECT_TRUE(r2.is_zero());
    auto [q3, r3] = poly_divmod(P("t^2 - 1"), P("t - 1"));
    EXPECT_EQ(q3, P("t + 1"));
    EXPECT_TRUE(r3.is_zero());
    EXPECT_THROW(poly_divmod(P("t"), UniPoly()), Error);
}

TEST(PolyDivmod, RandomIdentity) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const UniPoly a = random_poly(rng, 12, 9);
        UniPoly b = random_poly(rng, 12, 9);
        const auto [q, r] = poly_divmod(a, b);
        EXPECT_EQ(a, q * b + r);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(P("t - 2"), P("t - 3")), -1);
    EXPECT_EQ(resultant(P("t^2 - 1"), P("t^2 - 4")), 9);
    EXPECT_THROW(resultant(P("t^7 - t - 1"), UniPoly()), Error);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        UniPoly a = random_poly(rng, 7, 6);
        UniPoly b = random_poly(rng, 7, 6);
        if (a.degree() < 1 || b.degree() < 1) continue;
        EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a, b)) << a.to_string() << " , " << b.to_string();
    }
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(P("t^2 - 1")), 4);
    EXPECT_EQ(discriminant(P("t^2")), 0);
    EXPECT_THROW(discriminant(UniPoly::constant(3)), Error);
}

TEST(Discriminant, SepticTrinomialAgainstSylvester) {
    const UniPoly f = P("t^7 - t - 1");
    const Rat via_sylvester = -oracle::sylvester_resultant(f, f.derivative()) / f.leading();
    EXPECT_EQ(via_sylvester, -776887);
    EXPECT_EQ(discriminant(f), via_sylvester);
}

TEST(Discriminant, ZeroExactlyForPlantedRepeatedRoots) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        UniPoly g = random_poly(rng, 5, 5);
        if (g.degree() < 1) continue;
        const bool plant = i % 2 == 0;
        UniPoly f = plant ? g * P("t - 3") * P("t - 3") : g * P("t - 3");
        const bool gcd_nonconstant = poly_gcd(f, f.derivative()).degree() > 0;
        EXPECT_EQ(discriminant(f) == 0, gcd_nonconstant);
        if (plant) EXPECT_EQ(discriminant(f), 0);
    }
}

TEST(PowerSums, Examples) {
    const auto p = power_sums(P("t^7 - t - 1"), 7);
    EXPECT_EQ(p, (std::vector<Rat>{0, 0, 0, 0, 0, 6, 7}));
    EXPECT_EQ(power_sums(P("t - 5"), 3), (std::vector<Rat>{5, 25, 125}));
    EXPECT_EQ(power_sums(P("t^2 - 2t + 1"), 2), (std::vector<Rat>{2, 2}));
    EXPECT_THROW(power_sums(P("2t - 1"), 2), Error);
}

TEST(PowerSums, AgreeWithExplicitRoots) {
    const std::vector<Rat> roots{1, -2, Rat(1, 3), 4, 4, -1};
    EXPECT_EQ(power_sums(oracle::from_roots(roots), 12), oracle::power_sums_of_roots(roots, 12));
}

TEST(PolyFromPowerSums, Examples) {
    EXPECT_EQ(poly_from_power_sums({0, 0, 0, 0, 0, 6, 7}), P("t^7 - t - 1"));
    EXPECT_EQ(poly_from_power_sums({5}), P("t - 5"));
    EXPECT_EQ(poly_from_power_sums({0, 2}), P("t^2 - 1"));
}

TEST(PolyFromPowerSums, RoundTripsBothWays) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> len(1, 9);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 5);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rat> p(static_cast<std::size_t>(len(rng)));
        for (auto& x : p) x = Rat(num(rng), den(rng));
        EXPECT_EQ(power_sums(poly_from_power_sums(p), p.size()), p);

        UniPoly f = random_poly(rng, 9, 8);
        if (f.degree() < 1) continue;
        f = f.monic();
        EXPECT_EQ(poly_from_power_sums(power_sums(f, static_cast<std::size_t>(f.degree()))), f);
    }
}

TEST(Series, TruncationIsExplicit) {
    Series a(4);
    Series b(3);
    a[1] = 1;
    b[1] = 1;
    const Series c = a * b;
    EXPECT_EQ(c.order(), 3U);
    EXPECT_EQ(c[2], 1);
    EXPECT_EQ((a + b).order(), 3U);
}

TEST(NumberField, Examples) {
    const UniPoly f = P("t^7 - t - 1");
    EXPECT_EQ(nf_reduce(P("t^7"), f).rep(), P("t + 1"));
    EXPECT_TRUE(nf_reduce(f, f).rep().is_zero());
    const auto x = nf_reduce(P("t"), f);
    const auto one = nf_reduce(UniPoly::constant(1), f);
    EXPECT_EQ(nf_mul(one, x), x);
    const auto other = nf_reduce(P("t"), P("t^2 + 1"));
    EXPECT_THROW(nf_add(x, other), Error);
    EXPECT_THROW(nf_reduce(P("t"), P("2t^2 + 1")), Error);
}

TEST(NumberField, CommutativeRingSpotChecks) {
    const auto f = std::make_shared<const UniPoly>(P("t^7 - t - 1"));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        const auto a = nf_reduce(random_poly(rng, 10, 5), f);
        const auto b = nf_reduce(random_poly(rng, 10, 5), f);
        const auto c = nf_reduce(random_poly(rng, 10, 5), f);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
    }
}

TEST(Serialization, JsonRoundTrip) {
    const UniPoly f = P("3/2 t^3 - 7");
    const auto j = to_json(f);
    EXPECT_EQ(j.dump(), R"(["-7/1","0/1","0/1","3/2"])");
    EXPECT_EQ(unipoly_from_json(j), f);
}
