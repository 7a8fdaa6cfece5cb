#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quartic_forge/galois.hpp"
#include "quartic_forge/poly_parse.hpp"
#include "quartic_forge/resolvent.hpp"

using namespace quartic_forge;

namespace {

UniPoly P(const char* s) { return parse_poly(s); }

UniPoly random_septic(std::mt19937_64& rng, int bound, bool monic) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    for (;;) {
        std::vector<Rat> v(8);
        for (auto& c : v) c = coef(rng);
        if (monic) v[7] = 1;
        if (v[7] == 0) continue;
        UniPoly f(std::move(v));
        if (discriminant(f) != 0) return f;
    }
}

// F_2[t] as bitmasks, bit i = coefficient of t^i.
int bit_degree(std::uint64_t a) { return a == 0 ? -1 : 63 - __builtin_clzll(a); }
std::uint64_t bit_mod(std::uint64_t a, std::uint64_t b) {
    while (bit_degree(a) >= bit_degree(b)) a ^= b << (bit_degree(a) - bit_degree(b));
    return a;
}

/// f mod p evaluated at x, straight from the integer coefficients.
std::uint64_t eval_mod(const UniPoly& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = (acc * x + mod_u64(numerator_of(f.coeff(static_cast<std::size_t>(i))), p)) % p;
    return acc;
}

std::uint64_t eval_mod(const ModPoly& g, std::uint64_t x) {
    std::uint64_t acc = 0;
    const auto p = g.prime();
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) acc = (acc * x + *it) % p;
    return acc;
}

}  // namespace

TEST(FactorDegrees, Examples) {
    EXPECT_EQ(factor_degrees_mod_p(P("t^7 - t - 1"), 2), std::vector<int>{7});
    EXPECT_EQ(factor_degrees_mod_p(P("t^2 - 1"), 3), (std::vector<int>{1, 1}));
    try {
        factor_degrees_mod_p(P("t^2 - 1"), 2);
        FAIL() << "expected NOT_USABLE";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUsable);
    }
    EXPECT_THROW(factor_degrees_mod_p(P("3t^7 - t - 1"), 3), Error);
}

TEST(FactorDegrees, TrinomialIrreducibleModTwoByTrialDivision) {
    const std::uint64_t f = (1U << 7) | 0b11;  // t^7 + t + 1
    for (std::uint64_t g = 2; g < 16; ++g) EXPECT_NE(bit_mod(f, g), 0U) << "divisor " << g;
}

TEST(FactorModP, FactorsAreSoundOnRandomInputs) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const UniPoly f = random_septic(rng, 10, false);
        for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 101ULL}) {
            std::vector<ModPoly> factors;
            try {
                factors = factor_mod_p(f, p, 7);
            } catch (const Error& e) {
                ASSERT_EQ(e.code(), ErrorCode::NotUsable);
                continue;
            }
            const std::uint64_t lc = mod_u64(numerator_of(f.leading()), p);
            int linear = 0;
            for (const auto& g : factors) {
                EXPECT_TRUE(is_irreducible_mod_p(g));
                linear += g.degree() == 1;
            }
            int roots = 0;
            for (std::uint64_t x = 0; x < p; ++x) {
                std::uint64_t prod = lc;
                for (const auto& g : factors) prod = prod * eval_mod(g, x) % p;
                EXPECT_EQ(prod, eval_mod(f, x, p));
                roots += eval_mod(f, x, p) == 0;
            }
            EXPECT_EQ(linear, roots);
            EXPECT_EQ(factors, factor_mod_p(f, p, 12345)) << "factorization must not depend on the seed";
        }
    }
}

TEST(IrreducibilityWitness, Examples) {
    EXPECT_EQ(irreducibility_witness(P("t^7 - t - 1"), 100), 2U);

    // t^7 - 2 can only stay irreducible mod p when p ≡ 1 mod 7 (otherwise
    // x ↦ x^7 is a bijection and 2 has a root); 29 is the first such prime
    // where 2 is not a 7th power.
    const auto w = irreducibility_witness(P("t^7 - 2"), 1000);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w % 7, 1U);
    EXPECT_EQ(*w, 29U);
    EXPECT_EQ(factor_degrees_mod_p(P("t^7 - 2"), *w), std::vector<int>{7});

    EXPECT_FALSE(irreducibility_witness(P("(t - 1)*(t^6 + t + 1)"), 2000).has_value());
    EXPECT_THROW(irreducibility_witness(P("(t - 1)^2*(t^5 + 3)"), 100), Error);
}

TEST(Resolvent, DegreeAndVanishingTripleSum) {
    const UniPoly f = P("(t-1)(t-2)(t-3)(t-4)(t-5)(t-6)(t-7)");
    const UniPoly r = triple_sum_resolvent(f);
    EXPECT_EQ(r.degree(), 35);
    EXPECT_EQ(r(Rat(6)), 0);
    EXPECT_EQ(r(Rat(18)), 0);  // 5 + 6 + 7
    EXPECT_NE(r(Rat(5)), 0);
    EXPECT_THROW(triple_sum_resolvent(P("t^5 - 1")), Error);
    EXPECT_THROW(triple_sum_resolvent(P("(t-1)^2 (t^5 + 2)")), Error);
}

TEST(Resolvent, MatchesBruteForceOverExactIntegerRoots) {
    const std::vector<Rat> roots{-3, -1, 0, 2, 5, 9, 11};
    std::vector<Rat> sums;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k) sums.push_back(roots[i] + roots[j] + roots[k]);
    EXPECT_EQ(triple_sum_resolvent(oracle::from_roots(roots)), oracle::from_roots(sums));
}

TEST(Resolvent, IntegerCoefficientsAndSeparabilityOnCorpus) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) {
        const UniPoly f = random_septic(rng, 6, true);
        const UniPoly r = triple_sum_resolvent(f);
        ASSERT_EQ(r.degree(), 35);
        EXPECT_TRUE(r.is_monic());
        EXPECT_TRUE(r.has_integer_coeffs());
        const auto sums = oracle::triple_sums(oracle::durand_kerner(f));
        long double sep = 1e9L;
        for (std::size_t a = 0; a < sums.size(); ++a)
            for (std::size_t b = a + 1; b < sums.size(); ++b) sep = std::min(sep, std::abs(sums[a] - sums[b]));
        if (sep > 1e-6L) EXPECT_EQ(poly_gcd(r, r.derivative()).degree(), 0) << f.to_string();
    }
}

TEST(Resolvent, AgreesWithFloatingPointProduct) {
    // Tolerance per coefficient is 1e-6 times the matching coefficient of
    // ∏ (x + |s|), the a-priori magnitude bound for that coefficient.
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i) {
        const UniPoly f = random_septic(rng, 6, true);
        const UniPoly exact = triple_sum_resolvent(f);
        const auto sums = oracle::triple_sums(oracle::durand_kerner(f));
        const auto approx = oracle::expand_roots(sums);
        std::vector<oracle::cplx> mags;
        for (const auto& s : sums) mags.emplace_back(-std::abs(s));
        const auto bound = oracle::expand_roots(mags);
        for (std::size_t k = 0; k <= 35; ++k) {
            const long double e = exact.coeff(k).convert_to<long double>();
            const long double err = std::abs(approx[k] - oracle::cplx(e));
            EXPECT_LE(err, 1e-6L * std::max<long double>(1, std::abs(bound[k]))) << f.to_string() << " coeff " << k;
        }
    }
}

TEST(Resolvent, ValueAtZeroForTrinomial) {
    const UniPoly f = P("t^7 - t - 1");
    const Rat r0 = triple_sum_resolvent_at_zero(f);
    EXPECT_NE(r0, 0);
    const auto sums = oracle::triple_sums(oracle::durand_kerner(f));
    oracle::cplx prod = -1;  // R3(0) = (-1)^35 ∏ s
    for (const auto& s : sums) prod *= s;
    EXPECT_NEAR(static_cast<double>(prod.real()), r0.convert_to<double>(), 1e-6 * std::abs(r0.convert_to<double>()));
}

TEST(GeneralPosition, CollinearTriples) {
    EXPECT_TRUE(collinear_triple_exists(P("(t+1) t (t-1)(t-2)(t-3)(t-4)(t-5)")));
    EXPECT_FALSE(collinear_triple_exists(P("t^7 - t - 1")));
    EXPECT_FALSE(collinear_triple_exists(P("t^7 - 2")));
    // non-monic inputs are normalized first
    EXPECT_TRUE(collinear_triple_exists(P("3 (t+1) t (t-1)(t-2)(t-3)(t-4)(t-5)")));
}

TEST(GeneralPosition, SixOnConic) {
    EXPECT_FALSE(six_on_conic_exists(P("t^7 - t - 1")));
    EXPECT_TRUE(six_on_conic_exists(P("(t^2 - 1)(t^2 - 4)(t^2 - 9)(t - 5)")));
    EXPECT_TRUE(six_on_conic_exists(P("t^7")));
}

TEST(ClassifyGalois, TrinomialIsS7) {
    const auto v = classify_galois(P("t^7 - t - 1"), {});
    EXPECT_EQ(v.status, GaloisStatus::CertifiedS7);
    ASSERT_TRUE(v.irreducibility && v.five_part);
    EXPECT_EQ(v.irreducibility->prime, 2U);
    EXPECT_EQ(v.irreducibility->degrees, std::vector<int>{7});
    EXPECT_NE(std::find(v.five_part->degrees.begin(), v.five_part->degrees.end(), 5), v.five_part->degrees.end());
    EXPECT_EQ(v.discriminant, -776887);
    EXPECT_FALSE(v.disc_is_square);
    EXPECT_EQ(v.seed, 7U);
}

TEST(ClassifyGalois, KummerSepticStaysInconclusive) {
    for (std::size_t budget : {10U, 200U, 1000U}) {
        const auto v = classify_galois(P("t^7 - 2"), {20000, budget, 7});
        EXPECT_EQ(v.status, GaloisStatus::Inconclusive);
        EXPECT_FALSE(v.five_part.has_value());
        EXPECT_FALSE(v.diagnostic.empty());
    }
}

TEST(ClassifyGalois, RationalRootIsReducible) {
    try {
        classify_galois(P("t^7 + t"), {});
        FAIL() << "expected REDUCIBLE";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Reducible);
    }
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int i = 0; i < 15; ++i) {
        std::vector<Rat> v(7);
        for (auto& c : v) c = coef(rng);
        v[6] = 1;
        const UniPoly f = UniPoly(v) * UniPoly{Rat(-coef(rng)), 2};
        if (discriminant(f) == 0) continue;
        EXPECT_THROW(classify_galois(f, {10000, 1000, 7}), Error);
    }
}

TEST(ClassifyGalois, RejectsBadInput) {
    EXPECT_THROW(classify_galois(P("t^6 - t - 1"), {}), Error);
    EXPECT_THROW(classify_galois(P("t^7 - 1/2"), {}), Error);
    EXPECT_THROW(classify_galois(P("(t^2+1)^2 (t^3 + 5)"), {}), Error);
}

TEST(ClassifyGalois, WitnessesAreSoundAndReproducible) {
    std::mt19937_64 rng(61);
    int certified = 0;
    for (int i = 0; i < 40 && certified < 20; ++i) {
        const UniPoly f = random_septic(rng, 10, false);
        if (find_rational_root(f)) continue;
        const auto v = classify_galois(f, {});
        const auto again = classify_galois(f, {});
        EXPECT_EQ(to_json(v), to_json(again));
        const Int lc_disc = numerator_of(f.leading()) * numerator_of(v.discriminant);
        for (const auto* w : {&v.irreducibility, &v.five_part}) {
            if (!*w) continue;
            EXPECT_NE(lc_disc % (*w)->prime, 0);
            EXPECT_FALSE(check_cycle_type_witness(f, **w).has_value());
            int total = 0;
            for (int d : (*w)->degrees) total += d;
            EXPECT_EQ(total, 7);
        }
        if (v.status != GaloisStatus::Inconclusive) {
            ++certified;
            EXPECT_FALSE(collinear_triple_exists(f)) << f.to_string();
            EXPECT_FALSE(six_on_conic_exists(f)) << f.to_string();
        }
    }
    EXPECT_GE(certified, 20);
}

TEST(ClassifyGalois, MemoReuseGivesIdenticalVerdict) {
    PrimeScanMemo memo;
    const UniPoly f = P("t^7 - t - 1");
    const auto first = classify_galois(f, {}, &memo);
    const auto second = classify_galois(f, {}, &memo);
    EXPECT_EQ(second.memo_misses, 0U);
    EXPECT_GT(second.memo_hits, 0U);
    EXPECT_EQ(to_json(first), to_json(second));
}

TEST(ClassifyGalois, AlternatingExample) {
    // x^7 - 7x + 3 has Galois group PSL(2,7) (order 168): square discriminant
    // but no 5-cycles, so it must never be certified.
    const auto v = classify_galois(P("t^7 - 7t + 3"), {10000, 1000, 7});
    EXPECT_TRUE(v.disc_is_square);
    EXPECT_EQ(v.status, GaloisStatus::Inconclusive);
}

TEST(CheckWitness, DetectsEditedCycleType) {
    const UniPoly f = P("t^7 - t - 1");
    auto v = classify_galois(f, {});
    ASSERT_TRUE(v.five_part);
    auto w = *v.five_part;
    EXPECT_FALSE(check_cycle_type_witness(f, w));
    w.degrees = {5, 1, 1};
    EXPECT_TRUE(check_cycle_type_witness(f, w));
    w = *v.five_part;
    w.factors.pop_back();
    EXPECT_TRUE(check_cycle_type_witness(f, w));
}
