#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "quartic_forge/char_table.hpp"
#include "quartic_forge/cyclotomic.hpp"
#include "quartic_forge/unipoly.hpp"

using namespace quartic_forge;

namespace {

std::filesystem::path data_dir() { return resolve_data_dir(); }

const CharTable& a7() {
    static const CharTable t = load_char_table(table_path(data_dir(), "a7"));
    return t;
}
const CharTable& two_a7() {
    static const CharTable t = load_char_table(table_path(data_dir(), "2a7"));
    return t;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace

TEST(Cyclotomic, PolynomialsMultiplyToXnMinusOne) {
    for (int n : {1, 2, 6, 7, 12, 30, 105, 420}) {
        UniPoly prod = UniPoly::constant(1);
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) prod = prod * CyclotomicField::get(d)->cyclotomic_polynomial();
        }
        EXPECT_EQ(prod, UniPoly::monomial(1, static_cast<std::size_t>(n)) - UniPoly::constant(1)) << n;
        EXPECT_EQ(CyclotomicField::get(n)->dimension(), static_cast<std::size_t>(euler_phi(n)));
    }
    EXPECT_EQ(CyclotomicField::get(840)->dimension(), 192U);
}

TEST(Cyclotomic, Examples) {
    for (int n : {7, 420, 840}) {
        auto k = CyclotomicField::get(n);
        EXPECT_EQ(CycloNum::zeta(k, 1) * CycloNum::zeta(k, n - 1), CycloNum::rational(k, 1));
        for (long e : {1L, 5L, 13L}) EXPECT_EQ(CycloNum::zeta(k, e).conj(), CycloNum::zeta(k, n - e));
    }
    auto k7 = CyclotomicField::get(7);
    const auto a = CycloNum::from_exponents(k7, {{1, 1}, {2, 1}, {4, 1}});
    const auto b = CycloNum::from_exponents(k7, {{3, 1}, {5, 1}, {6, 1}});
    EXPECT_EQ(cyclo_add(a, b), CycloNum::rational(k7, -1));
    EXPECT_EQ(cyclo_conj(a), b);
    EXPECT_EQ(cyclo_mul(a, b), CycloNum::rational(k7, 2));  // b7 · b7** = 2
    // the same identity embedded at conductor 420
    auto k = CyclotomicField::get(420);
    const auto a420 = CycloNum::from_exponents(k, {{60, 1}, {120, 1}, {240, 1}});
    EXPECT_EQ(a420 * a420 + a420 + CycloNum::rational(k, 2), CycloNum(k));
    EXPECT_THROW(a + a420, Error);
    EXPECT_THROW(a * a420, Error);
    EXPECT_THROW(a.rational_value(), Error);
}

TEST(Cyclotomic, RingAxiomsOnRandomElements) {
    auto k = CyclotomicField::get(840);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> e(0, 839);
    std::uniform_int_distribution<long> m(-3, 3);
    auto rnd = [&] {
        return CycloNum::from_exponents(k, {{e(rng), m(rng)}, {e(rng), m(rng)}, {e(rng), m(rng)}});
    };
    for (int i = 0; i < 10; ++i) {
        const auto x = rnd();
        const auto y = rnd();
        const auto z = rnd();
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
        EXPECT_EQ(x.conj().conj(), x);
    }
}

TEST(CharTables, ShippedTablesValidate) {
    for (const CharTable* t : {&a7(), &two_a7()}) {
        const auto rep = validate_table(*t);
        EXPECT_TRUE(rep.ok()) << t->group << ": " << (rep.failures.empty() ? "" : rep.failures.front());
    }
    EXPECT_EQ(a7().order, 2520);
    EXPECT_EQ(two_a7().order, 5040);
    EXPECT_EQ(a7().conductor, 420);
    EXPECT_EQ(two_a7().conductor, 840);
}

TEST(CharTables, DegreeSquaresSumToGroupOrder) {
    std::vector<std::int64_t> da;
    for (const auto& r : a7().irreps) da.push_back(r.degree);
    EXPECT_EQ(da, (std::vector<std::int64_t>{1, 6, 10, 10, 14, 14, 15, 21, 35}));
    std::int64_t s = 0;
    for (auto d : da) s += d * d;
    EXPECT_EQ(s, 2520);

    // faithful irreps of 2.A7 are those with χ(z) = -χ(1) on the central involution
    std::vector<std::int64_t> faithful;
    std::int64_t s2 = 0;
    const auto& t = two_a7();
    for (const auto& r : t.irreps) {
        s2 += r.degree * r.degree;
        if (r.values[1] == CycloNum::rational(t.field(), Rat(-r.degree))) faithful.push_back(r.degree);
    }
    std::sort(faithful.begin(), faithful.end());
    EXPECT_EQ(faithful, (std::vector<std::int64_t>{4, 4, 14, 14, 20, 20, 36}));
    EXPECT_EQ(s2, 5040);
}

TEST(CharTables, FrobeniusSchurIndicators) {
    for (const CharTable* t : {&a7(), &two_a7()}) {
        for (const auto& r : t->irreps) {
            const int nu = frobenius_schur(r, *t);
            EXPECT_TRUE(nu == -1 || nu == 0 || nu == 1);
        }
        EXPECT_EQ(frobenius_schur(t->irreps.front(), *t), 1);
        EXPECT_EQ(indicator_degree_sum(*t), involution_count(*t)) << t->group;
    }
    EXPECT_EQ(involution_count(a7()), 106);   // 1 + 105
    EXPECT_EQ(involution_count(two_a7()), 2); // only ±1
    for (const auto& r : a7().irreps) {
        if (r.degree == 6) {
            EXPECT_EQ(frobenius_schur(r, a7()), 1);
        }
    }
}

TEST(CharTables, NoSymplecticSextics) {
    EXPECT_TRUE(symplectic_irreps_of_degree(a7(), 6).empty());
    EXPECT_TRUE(symplectic_irreps_of_degree(two_a7(), 6).empty());
    EXPECT_TRUE(symplectic_irreps_of_degree(a7(), 1).empty());
    // the test is not vacuous: 2.A7 does have symplectic irreps, in other degrees
    std::set<std::int64_t> degrees;
    for (const auto& r : two_a7().irreps) {
        if (frobenius_schur(r, two_a7()) == -1) degrees.insert(r.degree);
    }
    EXPECT_EQ(degrees, (std::set<std::int64_t>{14, 20, 36}));
    for (const auto& r : two_a7().irreps) {
        if (r.degree == 6) {
            EXPECT_EQ(frobenius_schur(r, two_a7()), 1) << "inflated from A7";
        }
    }
}

TEST(CharTables, ConjugateRowsAreRows) {
    for (const CharTable* t : {&a7(), &two_a7()}) {
        for (const auto& r : t->irreps) {
            std::vector<CycloNum> c;
            for (const auto& v : r.values) c.push_back(v.conj());
            const bool found = std::any_of(t->irreps.begin(), t->irreps.end(), [&](const Irrep& s) { return s.values == c; });
            EXPECT_TRUE(found) << r.label;
        }
    }
}

TEST(CharTables, DeletedPermutationCharacter) {
    std::ifstream in(table_path(data_dir(), "a7"));
    const auto j = nlohmann::json::parse(in);
    const auto& t = a7();
    const Irrep* six = nullptr;
    for (const auto& r : t.irreps) {
        if (r.degree == 6) six = &r;
    }
    ASSERT_NE(six, nullptr);
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        const auto cycle_type = j["classes"][c]["cycle_type"].get<std::vector<int>>();
        const auto fixed = std::count(cycle_type.begin(), cycle_type.end(), 1);
        ASSERT_TRUE(six->values[c].is_rational());
        EXPECT_EQ(six->values[c].rational_value(), Rat(fixed - 1)) << t.classes[c].name;
    }
}

TEST(CharTables, PlantedClassSizeCorruptionIsNamed) {
    CharTable t = a7();
    t.classes[3].size += 1;
    const auto rep = validate_table(t);
    ASSERT_FALSE(rep.ok());
    EXPECT_NE(rep.failures.front().find("3B"), std::string::npos);
}

TEST(CharTables, FrobeniusSchurRejectsCorruptData) {
    CharTable t = a7();
    t.irreps[1].raw[2] = {{0, 5}};
    embed_values(t);
    EXPECT_FALSE(validate_table(t).ok());
    EXPECT_THROW(frobenius_schur(t.irreps[1], t), Error);
}

TEST(CharTables, SingleEntryMutationsAreAlwaysCaught) {
    std::mt19937_64 rng(2024);
    int caught = 0;
    const int total = 120;
    for (int i = 0; i < total; ++i) {
        CharTable t = (i % 2 == 0) ? a7() : two_a7();
        const std::size_t k = t.classes.size();
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        const std::size_t r = pick(rng);
        const std::size_t c = pick(rng);
        std::string what;
        switch (i % 6) {
            case 0:
                t.classes[c].size += (rng() % 2) ? 1 : -1;
                what = "class size";
                break;
            case 1: {
                auto& terms = t.irreps[r].raw[c];
                if (terms.empty()) {
                    terms.push_back({0, 1});
                } else {
                    terms[rng() % terms.size()].second += (rng() % 2) ? 1 : -1;
                }
                what = "multiplicity";
                break;
            }
            case 2:
                t.irreps[r].raw[c].push_back({static_cast<long>(rng() % static_cast<unsigned>(t.conductor)), 1});
                what = "extra root of unity";
                break;
            case 3: {
                std::size_t s = pick(rng);
                while (s == t.classes[c].square_class) s = pick(rng);
                t.classes[c].square_class = s;
                what = "square class";
                break;
            }
            case 4:
                t.irreps[r].degree += (rng() % 2) ? 1 : -1;
                what = "degree";
                break;
            case 5: {
                int o = 1 + static_cast<int>(rng() % 14);
                while (o == t.classes[c].order) o = 1 + static_cast<int>(rng() % 14);
                t.classes[c].order = o;
                what = "element order";
                break;
            }
        }
        embed_values(t);
        const auto rep = validate_table(t);
        EXPECT_FALSE(rep.ok()) << t.group << " mutation " << i << " (" << what << ") at row " << r << " class " << c;
        caught += rep.ok() ? 0 : 1;
    }
    EXPECT_EQ(caught, total);
    EXPECT_GE(total, 100);
}

TEST(CharTables, CharacterSuiteIsCachedAndPasses) {
    const auto& s1 = cached_character_suite(data_dir());
    const auto& s2 = cached_character_suite(data_dir());
    EXPECT_EQ(&s1, &s2);
    EXPECT_TRUE(s1.passed());
    EXPECT_TRUE(s1.a7.symplectic_degree_6.empty());
    EXPECT_TRUE(s1.two_a7.symplectic_degree_6.empty());
}

TEST(CharTables, LoaderErrors) {
    EXPECT_THROW(load_char_table("/nonexistent/a7.json"), Error);
    EXPECT_THROW(char_table_from_json(nlohmann::json::object()), Error);
    EXPECT_THROW(table_path(data_dir(), "s7"), Error);
}
