#pragma once

// Certification of Gal(f) ∈ {S7, A7} for an integer septic from three sound
// witnesses:
//   1. f irreducible mod some usable p      ⇒ Gal(f) is transitive;
//   2. a mod-p cycle type with a part 5     ⇒ 5 divides |Gal(f)|; among the
//      transitive groups of degree 7 (orders 7, 14, 21, 42, 168, 2520, 5040)
//      only A7 and S7 qualify;
//   3. disc(f) a rational square or not     ⇒ Gal(f) ⊆ A7 or not.
// A missing witness after the scan budget gives INCONCLUSIVE, never a
// certificate.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "modp.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

enum class GaloisStatus { CertifiedS7, CertifiedA7, Inconclusive };

inline std::string to_string(GaloisStatus s) {
    switch (s) {
        case GaloisStatus::CertifiedS7: return "CERTIFIED_S7";
        case GaloisStatus::CertifiedA7: return "CERTIFIED_A7";
        case GaloisStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

inline GaloisStatus galois_status_from_string(const std::string& s) {
    if (s == "CERTIFIED_S7") return GaloisStatus::CertifiedS7;
    if (s == "CERTIFIED_A7") return GaloisStatus::CertifiedA7;
    if (s == "INCONCLUSIVE") return GaloisStatus::Inconclusive;
    throw Error(ErrorCode::Parse, "unknown galois status '" + s + "'");
}

struct CycleTypeWitness {
    std::uint64_t prime = 0;
    std::vector<int> degrees;        // sorted descending
    std::vector<ModPoly> factors;    // monic irreducible factors of f mod prime
};

/// Outcome of factoring f at one prime. Unusable primes carry no factors.
struct PrimeScanRecord {
    bool usable = false;
    std::vector<ModPoly> factors;
};

/// Per-prime results, shared with the on-disk scan cache.
using PrimeScanMemo = std::map<std::uint64_t, PrimeScanRecord>;

struct GaloisConfig {
    std::uint64_t prime_bound = 10000;
    std::size_t sample_budget = 200;  // usable primes examined at most
    std::uint64_t seed = 7;
};

struct GaloisVerdict {
    GaloisStatus status = GaloisStatus::Inconclusive;
    std::optional<CycleTypeWitness> irreducibility;
    std::optional<CycleTypeWitness> five_part;
    Rat discriminant;
    bool disc_is_square = false;
    std::size_t primes_scanned = 0;
    std::uint64_t seed = 0;
    std::string diagnostic;
    // Not serialized: how many primes came from / missed the memo.
    std::size_t memo_hits = 0;
    std::size_t memo_misses = 0;
};

inline std::vector<int> degrees_of(const std::vector<ModPoly>& factors) {
    std::vector<int> d;
    for (const auto& g : factors) d.push_back(g.degree());
    std::sort(d.rbegin(), d.rend());
    return d;
}

namespace detail {

inline void require_integer_septic(const UniPoly& f) {
    if (f.degree() != 7) throw Error(ErrorCode::WrongDegree, "expected degree 7, got " + std::to_string(f.degree()));
    if (!f.has_integer_coeffs()) throw Error(ErrorCode::InvalidArgument, "expected integer coefficients");
}

/// All positive divisors of |n|, or nullopt when |n| is too large to factor
/// by trial division.
inline std::optional<std::vector<Int>> small_divisors(Int n) {
    if (n < 0) n = -n;
    if (n == 0 || n > Int(1'000'000'000'000LL)) return std::nullopt;
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

inline PrimeScanRecord scan_prime(const UniPoly& f, std::uint64_t p, std::uint64_t seed, const Int& lc_disc) {
    PrimeScanRecord rec;
    if (lc_disc % p == 0) return rec;
    try {
        rec.factors = factor_mod_p(f, p, seed);
        rec.usable = true;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotUsable) throw;
    }
    return rec;
}

}  // namespace detail

/// A rational root of an integer polynomial, if one exists. Candidates are
/// ±d/e with d | c_0 and e | c_n; the search is skipped (nullopt) when either
/// constant exceeds 10^12 in absolute value.
inline std::optional<Rat> find_rational_root(const UniPoly& f) {
    if (!f.has_integer_coeffs() || f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "integer polynomial expected");
    if (f.coeff(0) == 0) return Rat(0);
    auto num = detail::small_divisors(numerator_of(f.coeff(0)));
    auto den = detail::small_divisors(numerator_of(f.leading()));
    if (!num || !den) return std::nullopt;
    std::vector<Rat> candidates;
    for (const auto& a : *num) {
        for (const auto& b : *den) {
            candidates.emplace_back(a, b);
            candidates.emplace_back(-a, b);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& r : candidates) {
        if (f(r) == 0) return r;
    }
    return std::nullopt;
}

/// Smallest usable prime ≤ bound at which f stays irreducible, which proves
/// irreducibility over Q. nullopt is an honest failure, not a disproof.
inline std::optional<std::uint64_t> irreducibility_witness(const UniPoly& f, std::uint64_t prime_bound,
                                                          std::uint64_t seed = 7) {
    detail::require_integer_septic(f);
    const Rat disc = discriminant(f);
    if (disc == 0) throw Error(ErrorCode::Inseparable, "f has a repeated root");
    const Int lc_disc = numerator_of(f.leading()) * numerator_of(disc);
    for (auto p : primes_up_to(prime_bound)) {
        auto rec = detail::scan_prime(f, p, seed, lc_disc);
        if (rec.usable && rec.factors.size() == 1) return p;
    }
    return std::nullopt;
}

inline GaloisVerdict classify_galois(const UniPoly& f, const GaloisConfig& config, PrimeScanMemo* memo = nullptr) {
    detail::require_integer_septic(f);
    if (config.prime_bound < 2 || config.sample_budget == 0) {
        throw Error(ErrorCode::InvalidArgument, "prime bound and budget must be positive");
    }
    GaloisVerdict verdict;
    verdict.seed = config.seed;
    verdict.discriminant = discriminant(f);
    if (verdict.discriminant == 0) throw Error(ErrorCode::Inseparable, "f has a repeated root");
    if (auto root = find_rational_root(f)) {
        throw Error(ErrorCode::Reducible, "rational root " + to_display(*root));
    }
    verdict.disc_is_square = is_rational_square(verdict.discriminant);

    const Int lc_disc = numerator_of(f.leading()) * numerator_of(verdict.discriminant);
    for (auto p : primes_up_to(config.prime_bound)) {
        if (verdict.primes_scanned >= config.sample_budget) break;
        if (verdict.irreducibility && verdict.five_part) break;
        PrimeScanRecord rec;
        if (memo && memo->count(p)) {
            rec = memo->at(p);
            ++verdict.memo_hits;
        } else {
            rec = detail::scan_prime(f, p, config.seed, lc_disc);
            ++verdict.memo_misses;
            if (memo) (*memo)[p] = rec;
        }
        if (!rec.usable) continue;
        ++verdict.primes_scanned;
        auto degrees = degrees_of(rec.factors);
        if (!verdict.irreducibility && degrees == std::vector<int>{7}) {
            verdict.irreducibility = CycleTypeWitness{p, degrees, rec.factors};
        }
        if (!verdict.five_part && std::find(degrees.begin(), degrees.end(), 5) != degrees.end()) {
            verdict.five_part = CycleTypeWitness{p, degrees, rec.factors};
        }
    }

    if (verdict.irreducibility && verdict.five_part) {
        verdict.status = verdict.disc_is_square ? GaloisStatus::CertifiedA7 : GaloisStatus::CertifiedS7;
    } else {
        verdict.status = GaloisStatus::Inconclusive;
        std::string missing;
        if (!verdict.irreducibility) missing += "no irreducibility witness";
        if (!verdict.five_part) missing += std::string(missing.empty() ? "" : "; ") + "no cycle type with a 5-part";
        verdict.diagnostic = missing + " after " + std::to_string(verdict.primes_scanned) +
                             " usable primes (bound " + std::to_string(config.prime_bound) + ", budget " +
                             std::to_string(config.sample_budget) + ")";
    }
    return verdict;
}

/// Re-checks a recorded witness against f without any search: the prime is
/// usable, every factor is monic irreducible, the factors multiply back to
/// f mod p (up to the leading coefficient), and the claimed cycle type is the
/// multiset of factor degrees. Returns the first failure, if any.
inline std::optional<std::string> check_cycle_type_witness(const UniPoly& f, const CycleTypeWitness& w) {
    const std::uint64_t p = w.prime;
    if (p < 2 || p >= (1ULL << 32) || !is_prime_u64(p)) return "prime " + std::to_string(p) + " is not a usable prime";
    const Rat disc = discriminant(f);
    if (mod_u64(numerator_of(f.leading()), p) == 0 || mod_u64(numerator_of(disc), p) == 0) {
        return "prime " + std::to_string(p) + " divides lc(f)·disc(f)";
    }
    ModPoly product = ModPoly::one(p);
    for (const auto& g : w.factors) {
        if (g.prime() != p) return "factor recorded over a different prime";
        if (g.degree() < 1 || g.leading() != 1) return "factor " + g.to_string() + " is not monic of positive degree";
        if (!is_irreducible_mod_p(g)) return "factor " + g.to_string() + " is reducible mod " + std::to_string(p);
        product = product * g;
    }
    if (!(product == ModPoly::reduce(f, p).monic())) {
        return "re-multiplication: factors do not multiply back to f mod " + std::to_string(p);
    }
    if (degrees_of(w.factors) != w.degrees) {
        return "re-multiplication: claimed cycle type does not match the factor degrees";
    }
    return std::nullopt;
}

inline nlohmann::json to_json(const ModPoly& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto c : g.coeffs()) arr.push_back(c);
    return arr;
}

inline nlohmann::json to_json(const CycleTypeWitness& w) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& g : w.factors) factors.push_back(to_json(g));
    return {{"prime", w.prime}, {"cycle_type", w.degrees}, {"factors", factors}};
}

inline CycleTypeWitness cycle_type_witness_from_json(const nlohmann::json& j) {
    CycleTypeWitness w;
    w.prime = j.at("prime").get<std::uint64_t>();
    w.degrees = j.at("cycle_type").get<std::vector<int>>();
    for (const auto& g : j.at("factors")) w.factors.emplace_back(g.get<std::vector<std::uint64_t>>(), w.prime);
    return w;
}

/// Verdict serialization: status, witness primes, cycle type of the 5-part
/// witness, discriminant, square flag, scan count and seed, plus the full
/// witness factorizations so a replay can re-multiply them.
inline nlohmann::json to_json(const GaloisVerdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    j["witness_primes"] = {
        {"irreducibility", v.irreducibility ? nlohmann::json(v.irreducibility->prime) : nlohmann::json(nullptr)},
        {"five_part", v.five_part ? nlohmann::json(v.five_part->prime) : nlohmann::json(nullptr)},
    };
    j["cycle_type"] = v.five_part ? nlohmann::json(v.five_part->degrees) : nlohmann::json(nullptr);
    j["discriminant"] = to_display(v.discriminant);
    j["disc_is_square"] = v.disc_is_square;
    j["primes_scanned"] = v.primes_scanned;
    j["seed"] = v.seed;
    nlohmann::json witnesses = nlohmann::json::object();
    if (v.irreducibility) witnesses["irreducibility"] = to_json(*v.irreducibility);
    if (v.five_part) witnesses["five_part"] = to_json(*v.five_part);
    j["witnesses"] = witnesses;
    if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
    return j;
}

}  // namespace quartic_forge
