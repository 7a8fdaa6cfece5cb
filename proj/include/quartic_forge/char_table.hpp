#pragma once

// Character tables with exact cyclotomic values, self-validation by the
// orthogonality relations, and Frobenius–Schur indicators.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "rational.hpp"

#ifndef QUARTIC_FORGE_DEFAULT_DATA_DIR
#define QUARTIC_FORGE_DEFAULT_DATA_DIR "data"
#endif

namespace quartic_forge {

struct ClassInfo {
    std::string name;
    std::int64_t size = 0;
    int order = 0;
    std::size_t square_class = 0;
};

using ExponentTerms = std::vector<std::pair<long, long>>;

struct Irrep {
    std::string label;
    std::int64_t degree = 0;
    std::vector<ExponentTerms> raw;   // as read from the file
    std::vector<CycloNum> values;     // embedded at the table's conductor
};

struct CharTable {
    std::string group;
    std::int64_t order = 0;
    int conductor = 0;
    std::vector<ClassInfo> classes;
    std::vector<Irrep> irreps;

    [[nodiscard]] std::shared_ptr<const CyclotomicField> field() const { return CyclotomicField::get(conductor); }
    [[nodiscard]] const Irrep& irrep(const std::string& label) const {
        for (const auto& r : irreps) {
            if (r.label == label) return r;
        }
        throw Error(ErrorCode::InvalidArgument, "no irrep labelled '" + label + "'");
    }
};

/// Re-embeds every raw value; call after editing raw entries.
inline void embed_values(CharTable& t) {
    auto field = t.field();
    for (auto& r : t.irreps) {
        r.values.clear();
        for (const auto& terms : r.raw) r.values.push_back(CycloNum::from_exponents(field, terms));
    }
}

inline CharTable char_table_from_json(const nlohmann::json& j) {
    try {
        CharTable t;
        t.group = j.at("group").get<std::string>();
        t.order = j.at("order").get<std::int64_t>();
        t.conductor = j.at("conductor").get<int>();
        for (const auto& c : j.at("classes")) {
            t.classes.push_back({c.at("name").get<std::string>(), c.at("size").get<std::int64_t>(), c.at("order").get<int>(),
                                 c.at("square_class").get<std::size_t>()});
        }
        for (const auto& r : j.at("irreps")) {
            Irrep irrep;
            irrep.label = r.at("label").get<std::string>();
            irrep.degree = r.at("degree").get<std::int64_t>();
            for (const auto& v : r.at("values")) irrep.raw.push_back(v.get<ExponentTerms>());
            if (irrep.raw.size() != t.classes.size()) {
                throw Error(ErrorCode::DataError, "irrep " + irrep.label + " has " + std::to_string(irrep.raw.size()) +
                                                      " values for " + std::to_string(t.classes.size()) + " classes");
            }
            t.irreps.push_back(std::move(irrep));
        }
        embed_values(t);
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::DataError, std::string("malformed character table: ") + e.what());
    }
}

inline CharTable load_char_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::DataError, path.string() + ": " + e.what());
    }
    return char_table_from_json(j);
}

/// Flag, then $QUARTIC_FORGE_DATA_DIR, then the build-time default.
inline std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag = std::nullopt) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("QUARTIC_FORGE_DATA_DIR"); env && *env) return env;
    return QUARTIC_FORGE_DEFAULT_DATA_DIR;
}

/// "a7" → a7.json, "2a7" → 2a7.json.
inline std::filesystem::path table_path(const std::filesystem::path& data_dir, const std::string& group) {
    if (group != "a7" && group != "2a7") throw Error(ErrorCode::InvalidArgument, "unknown group '" + group + "'");
    return data_dir / (group + ".json");
}

// ---------------------------------------------------------------- validation

struct ValidationReport {
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

inline int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

/// <a, b> · |G| = Σ_C |C| a(C) conj(b(C)), with b already conjugated.
inline CycloNum weighted_pairing(const CharTable& t, const std::vector<CycloNum>& a,
                                 const std::vector<CycloNum>& b_conj) {
    CycloNum acc(t.field());
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        if (a[c].is_zero() || b_conj[c].is_zero()) continue;
        acc += (a[c] * b_conj[c]) * Rat(t.classes[c].size);
    }
    return acc;
}

inline std::vector<CycloNum> conj_row(const std::vector<CycloNum>& row) {
    std::vector<CycloNum> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(v.conj());
    return out;
}

inline std::vector<CycloNum> squared_row(const CharTable& t, const std::vector<CycloNum>& row) {
    std::vector<CycloNum> out;
    out.reserve(row.size());
    for (const auto& c : t.classes) out.push_back(row[c.square_class]);
    return out;
}

}  // namespace detail

/// Exact check of every relation a character table must satisfy. Structural
/// failures stop the run; relational failures are all collected.
inline ValidationReport validate_table(const CharTable& t) {
    ValidationReport rep;
    auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };
    const std::size_t k = t.classes.size();

    if (k == 0 || t.order <= 0) {
        fail("structure: empty table or non-positive group order");
        return rep;
    }
    if (t.irreps.size() != k) {
        fail("structure: " + std::to_string(t.irreps.size()) + " irreps but " + std::to_string(k) + " classes");
        return rep;
    }
    for (const auto& r : t.irreps) {
        if (r.values.size() != k) {
            fail("structure: irrep " + r.label + " has the wrong number of values");
            return rep;
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (t.classes[c].square_class >= k) {
            fail("structure: class " + t.classes[c].name + " has square_class out of range");
            return rep;
        }
    }

    const auto& first = t.classes.front();
    if (first.size != 1 || first.order != 1) fail("identity: first class " + first.name + " is not the identity");

    std::int64_t size_sum = 0;
    for (const auto& c : t.classes) {
        size_sum += c.size;
        if (c.size <= 0 || t.order % c.size != 0) {
            fail("class size: |" + c.name + "| = " + std::to_string(c.size) + " does not divide |G| = " +
                 std::to_string(t.order));
        }
        if (c.order <= 0) fail("class order: " + c.name + " has non-positive element order");
    }
    if (size_sum != t.order) {
        fail("class sizes: sum " + std::to_string(size_sum) + " != |G| = " + std::to_string(t.order));
    }

    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = t.classes[i];
        const auto& sq = t.classes[c.square_class];
        if (c.order <= 0 || c.size <= 0) continue;
        if (sq.order != c.order / detail::gcd_int(2, c.order)) {
            fail("square map: " + c.name + " (order " + std::to_string(c.order) + ") squares into " + sq.name +
                 " (order " + std::to_string(sq.order) + ")");
        }
        // g lies in its own centralizer, of order |G|/|C|.
        if ((t.order / c.size) % c.order != 0) {
            fail("class order: " + std::to_string(c.order) + " does not divide |C_G(" + c.name + ")|");
        }
        if ((c.order == 1) != (i == 0)) fail("class order: " + c.name + " has order 1 but is not the identity");
        // for odd order, g and g^2 generate the same group and share a centralizer
        if (c.order % 2 == 1 && sq.size != c.size) {
            fail("square map: odd-order class " + c.name + " and its square " + sq.name + " differ in size");
        }
        // squaring permutes the odd-order elements, so its orbit through c closes up
        if (c.order % 2 == 1) {
            std::size_t cur = c.square_class;
            for (std::size_t step = 0; step < k && cur != i; ++step) cur = t.classes[cur].square_class;
            if (cur != i) fail("square map: iterated squares of odd-order class " + c.name + " never return to it");
        }
    }

    std::int64_t deg_sq = 0;
    for (const auto& r : t.irreps) {
        deg_sq += r.degree * r.degree;
        if (r.values[0] != CycloNum::rational(t.field(), Rat(r.degree))) {
            fail("degree: " + r.label + " at the identity is " + r.values[0].to_string() + ", expected " +
                 std::to_string(r.degree));
        }
    }
    if (deg_sq != t.order) fail("degrees: sum of squares " + std::to_string(deg_sq) + " != |G|");

    std::vector<std::vector<CycloNum>> conj_rows;
    for (const auto& r : t.irreps) conj_rows.push_back(detail::conj_row(r.values));

    // rows: Σ_C |C| χ(C) conj ψ(C) = |G| δ
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            const CycloNum s = detail::weighted_pairing(t, t.irreps[a].values, conj_rows[b]);
            const Rat expect = a == b ? Rat(t.order) : Rat(0);
            if (s != CycloNum::rational(t.field(), expect)) {
                fail("row orthogonality: (" + t.irreps[a].label + ", " + t.irreps[b].label + ") gives " + s.to_string() +
                     ", expected " + to_display(expect));
            }
        }
    }

    // columns: Σ_χ χ(C) conj χ(D) = δ |G|/|C|
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t d = c; d < k; ++d) {
            CycloNum s(t.field());
            for (std::size_t r = 0; r < k; ++r) {
                if (t.irreps[r].values[c].is_zero() || conj_rows[r][d].is_zero()) continue;
                s += t.irreps[r].values[c] * conj_rows[r][d];
            }
            const Rat expect =
                c == d && t.classes[c].size > 0 ? Rat(t.order) / Rat(t.classes[c].size) : Rat(0);
            if (s != CycloNum::rational(t.field(), expect)) {
                fail("column orthogonality: (" + t.classes[c].name + ", " + t.classes[d].name + ") gives " +
                     s.to_string() + ", expected " + to_display(expect));
            }
        }
    }

    for (std::size_t a = 0; a < k; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < k && !found; ++b) found = conj_rows[a] == t.irreps[b].values;
        if (!found) fail("conjugation: the conjugate of " + t.irreps[a].label + " is not a row");
    }

    // χ(g^2) is a virtual character, so its inner products are integers.
    for (std::size_t a = 0; a < k; ++a) {
        const auto sq = detail::squared_row(t, t.irreps[a].values);
        for (std::size_t b = 0; b < k; ++b) {
            const CycloNum s = detail::weighted_pairing(t, sq, conj_rows[b]);
            if (!s.is_rational() || !is_integer(s.rational_value() / Rat(t.order))) {
                fail("power map: <" + t.irreps[a].label + "^(2), " + t.irreps[b].label + "> is not an integer");
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------- indicators

/// ν(χ) = (1/|G|) Σ_C |C| χ(C²). Anything outside {−1, 0, 1} means corrupt data.
inline int frobenius_schur(const Irrep& chi, const CharTable& t) {
    CycloNum acc(t.field());
    for (const auto& c : t.classes) acc += chi.values.at(c.square_class) * Rat(c.size);
    if (!acc.is_rational()) throw Error(ErrorCode::DataError, "indicator of " + chi.label + " is irrational");
    const Rat nu = acc.rational_value() / Rat(t.order);
    if (nu != -1 && nu != 0 && nu != 1) {
        throw Error(ErrorCode::DataError, "indicator of " + chi.label + " is " + to_display(nu));
    }
    return static_cast<int>(nu.convert_to<long>());
}

inline std::vector<std::string> symplectic_irreps_of_degree(const CharTable& t, std::int64_t d) {
    std::vector<std::string> out;
    for (const auto& r : t.irreps) {
        if (r.degree == d && frobenius_schur(r, t) == -1) out.push_back(r.label);
    }
    return out;
}

/// #{g : g² = 1} counted from the class data.
inline std::int64_t involution_count(const CharTable& t) {
    std::int64_t n = 0;
    for (const auto& c : t.classes) {
        if (c.order <= 2) n += c.size;
    }
    return n;
}

/// Σ_χ ν(χ) χ(1).
inline std::int64_t indicator_degree_sum(const CharTable& t) {
    std::int64_t s = 0;
    for (const auto& r : t.irreps) s += frobenius_schur(r, t) * r.degree;
    return s;
}

struct TableSummary {
    std::string group;
    bool valid = false;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, int>> indicators;  // empty if invalid
    std::vector<std::string> symplectic_degree_6;
    std::int64_t involutions = 0;
    std::int64_t indicator_sum = 0;

    [[nodiscard]] bool passed() const noexcept {
        return valid && symplectic_degree_6.empty() && involutions == indicator_sum;
    }
};

inline TableSummary summarize_table(const CharTable& t) {
    TableSummary s;
    s.group = t.group;
    auto rep = validate_table(t);
    s.valid = rep.ok();
    s.failures = rep.failures;
    s.involutions = involution_count(t);
    if (!s.valid) return s;
    for (const auto& r : t.irreps) s.indicators.emplace_back(r.label, frobenius_schur(r, t));
    s.symplectic_degree_6 = symplectic_irreps_of_degree(t, 6);
    s.indicator_sum = indicator_degree_sum(t);
    return s;
}

inline nlohmann::json to_json(const TableSummary& s) {
    nlohmann::json ind = nlohmann::json::object();
    for (const auto& [label, nu] : s.indicators) ind[label] = nu;
    nlohmann::json j = {
        {"group", s.group},
        {"validated", s.valid},
        {"frobenius_schur", ind},
        {"symplectic_degree_6", s.symplectic_degree_6},
        {"involution_count", s.involutions},
        {"indicator_degree_sum", s.indicator_sum},
        {"passed", s.passed()},
    };
    if (!s.failures.empty()) j["failures"] = s.failures;
    return j;
}

struct CharacterSuite {
    TableSummary a7;
    TableSummary two_a7;
    [[nodiscard]] bool passed() const noexcept { return a7.passed() && two_a7.passed(); }
};

inline nlohmann::json to_json(const CharacterSuite& s) {
    return {{"A7", to_json(s.a7)}, {"2.A7", to_json(s.two_a7)}, {"passed", s.passed()}};
}

inline CharacterSuite run_character_suite(const std::filesystem::path& data_dir) {
    return {summarize_table(load_char_table(table_path(data_dir, "a7"))),
            summarize_table(load_char_table(table_path(data_dir, "2a7")))};
}

/// The suite does not depend on the input polynomial; it is computed once per
/// data directory per process.
inline const CharacterSuite& cached_character_suite(const std::filesystem::path& data_dir) {
    static std::mutex mu;
    static std::map<std::string, CharacterSuite> cache;
    std::lock_guard lock(mu);
    const std::string key = std::filesystem::absolute(data_dir).lexically_normal().string();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, run_character_suite(data_dir)).first;
    return it->second;
}

}  // namespace quartic_forge
