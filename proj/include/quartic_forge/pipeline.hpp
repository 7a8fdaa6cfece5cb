#pragma once

// The certificate pipeline: every hypothesis of the End(J(B_f)) = Z theorem
// is checked in a fixed stage order and the outcome is rendered as a JSON
// report. The final verdict is conditional: it records that the hypotheses
// hold, not a computation of End(J) itself.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "char_table.hpp"
#include "error.hpp"
#include "forms.hpp"
#include "galois.hpp"
#include "picard.hpp"
#include "poly_parse.hpp"
#include "scan_cache.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
    kExitCertified = 0,
    kExitNotCertified = 1,
    kExitInputError = 2,
    kExitInternalError = 3,
};

inline const std::vector<std::string>& stage_order() {
    static const std::vector<std::string> order{"separability", "galois", "general_position", "forms",
                                                "sextic",       "lattice", "module",           "characters"};
    return order;
}

struct PipelineConfig {
    std::uint64_t prime_bound = 10000;
    std::size_t five_part_budget = 200;
    std::uint64_t seed = 7;
    std::optional<std::string> data_dir;
    std::optional<std::string> cache_dir;
    std::optional<std::string> out;
    int verbosity = 0;

    void validate() const {
        if (prime_bound < 2) throw Error(ErrorCode::InvalidArgument, "prime bound must be at least 2");
        if (five_part_budget == 0) throw Error(ErrorCode::InvalidArgument, "budget must be positive");
    }
};

struct PipelineResult {
    nlohmann::json report;
    int exit_code = kExitInternalError;
    bool galois_from_cache = false;
    std::vector<std::string> warnings;
};

inline nlohmann::json scope_json() {
    return {
        {"ground_field", "Q"},
        {"positive_characteristic", "out of scope"},
        {"arbitrary_orbit_input", "reserved, not implemented"},
    };
}

inline nlohmann::json error_report(const Error& e, const std::string& input_text,
                                   const nlohmann::json& witness = nlohmann::json()) {
    nlohmann::json err = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!witness.is_null()) err["witness"] = witness;
    return {{"schema_version", kSchemaVersion}, {"input", {{"text", input_text}}}, {"error", err}};
}

namespace stage {

inline std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

inline nlohmann::json separability(const UniPoly& g) {
    const Rat disc = discriminant(g);
    return {{"status", pass_fail(disc != 0)}, {"discriminant", to_display(disc)}};
}

inline nlohmann::json galois(const GaloisVerdict& v) {
    nlohmann::json j = to_json(v);
    j["status"] = v.status == GaloisStatus::Inconclusive ? "inconclusive" : "pass";
    j["group"] = to_string(v.status);
    return j;
}

inline nlohmann::json general_position(const UniPoly& f) {
    const auto cert = general_position_certificate(OrbitB(f));
    nlohmann::json j = to_json(cert);
    j["status"] = pass_fail(cert.valid());
    return j;
}

inline nlohmann::json form_json(const TriForm& q) {
    return {{"text", q.to_string()}, {"form", to_json(q)}};
}

inline nlohmann::json forms(const UniPoly& f) {
    const OrbitB b(f);
    const auto basis = cubic_basis(f);
    const bool vu = verify_vanishing(basis.u, b);
    const bool vv = verify_vanishing(basis.v, b);
    const bool vw = verify_vanishing(basis.w, b);
    return {
        {"status", pass_fail(vu && vv && vw)},
        {"h", to_json(basis.h)},
        {"u", form_json(basis.u)},
        {"v", form_json(basis.v)},
        {"w", form_json(basis.w)},
        {"vanishing", {{"u", vu}, {"v", vv}, {"w", vw}}},
        // Over a field of characteristic 3 the Jacobian sextic is not the
        // branch curve; irrelevant over Q but kept visible in the report.
        {"characteristic_caveat", "requires characteristic != 3"},
    };
}

inline nlohmann::json sextic(const UniPoly& f) {
    const OrbitB b(f);
    const auto basis = cubic_basis(f);
    const TriForm s = branch_sextic(basis.u, basis.v, basis.w);
    const bool vanishes = verify_vanishing(s, b);
    bool singular = vanishes;
    for (int var = 0; var < 3; ++var) singular = singular && verify_vanishing(s.partial(var), b);
    const bool ok = !s.is_zero() && s.degree() == 6 && vanishes;
    return {
        {"status", pass_fail(ok)},
        {"degree", s.degree()},
        {"sextic", form_json(s)},
        {"vanishes_on_orbit", vanishes},
        {"singular_along_orbit", singular},
    };
}

inline nlohmann::json lattice() {
    const auto suite = run_lattice_suite();
    nlohmann::json j = to_json(suite);
    j["status"] = pass_fail(passed(suite));
    return j;
}

inline nlohmann::json module(GaloisStatus status) {
    if (status == GaloisStatus::Inconclusive) {
        return {{"status", "skipped"}, {"reason", "Galois group not certified"}};
    }
    const auto gens = status == GaloisStatus::CertifiedS7 ? s7_generators() : a7_generators();
    const auto check = check_module(gens);
    nlohmann::json j = to_json(check);
    j["status"] = pass_fail(check.simple && check.end_dim == 1);
    return j;
}

inline nlohmann::json characters(const std::filesystem::path& data_dir) {
    const auto& suite = cached_character_suite(data_dir);
    nlohmann::json j = to_json(suite);
    j["status"] = pass_fail(suite.passed());
    return j;
}

}  // namespace stage

/// The verdict implied by a set of stage results: END_Z_CERTIFIED iff every
/// stage passed, otherwise the first stage in pipeline order that did not.
inline nlohmann::json derive_verdict(const nlohmann::json& stages) {
    nlohmann::json first = nullptr;
    for (const auto& name : stage_order()) {
        const auto it = stages.find(name);
        if (it == stages.end() || !it->contains("status") || it->at("status") != "pass") {
            first = name;
            break;
        }
    }
    const bool ok = first.is_null();
    return {
        {"result", ok ? "END_Z_CERTIFIED" : "HYPOTHESES_NOT_CERTIFIED"},
        {"first_failing_stage", first},
        {"conditional", true},
        {"conclusion", "End(J(B_f)) = Z"},
        {"statement",
         ok ? "Every hypothesis was verified: f is a separable irreducible septic over Q with Galois group S7 or A7, "
              "B_f is in general position, and the module and character checks pass. End(J(B_f)) = Z then follows "
              "from the theorem on double covers branched along the quartic; it is not computed directly."
            : "A hypothesis was not verified at the named stage; no conclusion about End(J(B_f)) is drawn."},
    };
}

/// Runs the galois stage against the optional on-disk cache. Witnesses that
/// came from the cache are re-checked; if any fails the scan is redone cold.
inline GaloisVerdict classify_with_cache(const UniPoly& g, const PipelineConfig& cfg, PipelineResult& result) {
    const GaloisConfig gc{cfg.prime_bound, cfg.five_part_budget, cfg.seed};
    if (!cfg.cache_dir) return classify_galois(g, gc);

    ScanCache cache(*cfg.cache_dir, g);
    PrimeScanMemo memo = cache.load();
    GaloisVerdict verdict = classify_galois(g, gc, &memo);
    bool sound = true;
    for (const auto* w : {&verdict.irreducibility, &verdict.five_part}) {
        if (*w && check_cycle_type_witness(g, **w)) sound = false;
    }
    if (!sound) {
        result.warnings.push_back("cached witness failed re-verification; rescanning without the cache");
        memo.clear();
        verdict = classify_galois(g, gc, &memo);
    }
    result.galois_from_cache = verdict.memo_hits > 0 && verdict.memo_misses == 0;
    cache.store(memo);
    for (const auto& w : cache.warnings()) result.warnings.push_back(w);
    return verdict;
}

inline PipelineResult run_pipeline(const UniPoly& f, const PipelineConfig& cfg, const std::string& input_text = "") {
    PipelineResult result;
    const std::string text = input_text.empty() ? f.to_string('t') : input_text;
    try {
        cfg.validate();
        if (f.degree() != 7) {
            throw Error(ErrorCode::WrongDegree, "expected a degree-7 polynomial, got degree " + std::to_string(f.degree()));
        }
        const UniPoly g = primitive_integer_part(f);

        nlohmann::json stages = nlohmann::json::object();
        stages["separability"] = stage::separability(g);
        if (stages["separability"]["status"] != "pass") throw Error(ErrorCode::Inseparable, "f has a repeated root");
        if (auto root = find_rational_root(g)) {
            result.report = error_report(Error(ErrorCode::Reducible, "f has a rational root"), text,
                                         {{"rational_root", to_display(*root)}});
            result.exit_code = kExitInputError;
            return result;
        }

        const GaloisVerdict verdict = classify_with_cache(g, cfg, result);
        stages["galois"] = stage::galois(verdict);
        stages["general_position"] = stage::general_position(f);
        stages["forms"] = stage::forms(f);
        stages["sextic"] = stage::sextic(f);
        stages["lattice"] = stage::lattice();
        stages["module"] = stage::module(verdict.status);
        stages["characters"] = stage::characters(resolve_data_dir(cfg.data_dir));

        nlohmann::json report;
        report["schema_version"] = kSchemaVersion;
        report["input"] = {
            {"text", text},
            {"polynomial", to_json(f)},
            {"integer_polynomial", to_json(g)},
            {"display", f.to_string('t')},
        };
        report["config"] = {{"prime_bound", cfg.prime_bound}, {"budget", cfg.five_part_budget}, {"seed", cfg.seed}};
        report["scope"] = scope_json();
        report["stage_order"] = stage_order();
        report["stages"] = stages;
        report["verdict"] = derive_verdict(stages);
        result.report = std::move(report);

        if (result.report["verdict"]["result"] == "END_Z_CERTIFIED") {
            result.exit_code = kExitCertified;
        } else if (stages["characters"]["status"] != "pass") {
            result.exit_code = kExitInternalError;  // corrupt table data, not a property of f
        } else {
            result.exit_code = kExitNotCertified;
        }
    } catch (const Error& e) {
        result.report = error_report(e, text);
        switch (e.code()) {
            case ErrorCode::Parse:
            case ErrorCode::WrongDegree:
            case ErrorCode::Inseparable:
            case ErrorCode::Reducible:
            case ErrorCode::InvalidArgument: result.exit_code = kExitInputError; break;
            default: result.exit_code = kExitInternalError; break;
        }
    }
    return result;
}

inline PipelineResult run_pipeline_text(const std::string& text, const PipelineConfig& cfg) {
    UniPoly f;
    try {
        f = parse_poly(text);
    } catch (const Error& e) {
        PipelineResult r;
        r.report = error_report(e, text);
        r.exit_code = kExitInputError;
        return r;
    }
    return run_pipeline(f, cfg, text);
}

}  // namespace quartic_forge
