#pragma once

// Re-verification of a stored certificate report. Nothing is searched for:
// recorded witnesses are checked directly and every deterministic stage is
// recomputed and compared, so the outcome does not depend on the original
// prime bound or budget.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "galois.hpp"
#include "pipeline.hpp"

namespace quartic_forge {

struct ReplayResult {
    std::vector<std::string> checked;
    std::vector<std::string> failures;
    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

inline nlohmann::json to_json(const ReplayResult& r) {
    return {{"passed", r.passed()}, {"checked", r.checked}, {"failures", r.failures}};
}

namespace detail {

class ReplayLog {
public:
    explicit ReplayLog(ReplayResult& r) : r_(r) {}
    bool expect(const std::string& name, bool ok, const std::string& why) {
        if (ok) {
            r_.checked.push_back(name);
        } else {
            r_.failures.push_back(name + ": " + why);
        }
        return ok;
    }

private:
    ReplayResult& r_;
};

inline void replay_error_report(const nlohmann::json& report, ReplayLog& log) {
    const auto& err = report.at("error");
    const std::string code = err.at("code").get<std::string>();
    const std::string text = report.at("input").at("text").get<std::string>();
    if (code == "REDUCIBLE" && err.contains("witness")) {
        const UniPoly f = parse_poly(text);
        const Rat root = parse_rat(err.at("witness").at("rational_root").get<std::string>());
        log.expect("error.rational_root", f(root) == 0, "f(" + to_display(root) + ") != 0");
        return;
    }
    const auto rerun = run_pipeline_text(text, PipelineConfig{});
    const bool same = rerun.report.contains("error") && rerun.report["error"]["code"] == code;
    log.expect("error.reproduced", same, "re-running the input does not reproduce error " + code);
}

inline void replay_galois(const UniPoly& g, const nlohmann::json& gal, ReplayLog& log) {
    const Rat disc = discriminant(g);
    log.expect("galois.discriminant", gal.at("discriminant") == to_display(disc), "recorded discriminant differs");
    log.expect("galois.disc_is_square", gal.at("disc_is_square").get<bool>() == is_rational_square(disc),
               "square test differs");

    const auto& witnesses = gal.at("witnesses");
    std::optional<CycleTypeWitness> irr;
    std::optional<CycleTypeWitness> five;
    for (const char* kind : {"irreducibility", "five_part"}) {
        if (!witnesses.contains(kind)) continue;
        const std::string name = std::string("galois.") + kind;
        const CycleTypeWitness w = cycle_type_witness_from_json(witnesses.at(kind));
        const auto problem = check_cycle_type_witness(g, w);
        if (!log.expect(name, !problem, problem.value_or(""))) continue;
        log.expect(name + ".prime", gal.at("witness_primes").at(kind) == w.prime, "witness prime mismatch");
        if (std::string(kind) == "irreducibility") {
            if (log.expect(name + ".cycle_type", w.degrees == std::vector<int>{7}, "cycle type is not {7}")) irr = w;
        } else {
            const bool has5 = std::find(w.degrees.begin(), w.degrees.end(), 5) != w.degrees.end();
            if (log.expect(name + ".cycle_type", has5, "cycle type has no part 5")) five = w;
            log.expect(name + ".summary", gal.at("cycle_type") == w.degrees, "top-level cycle_type differs");
        }
    }

    const GaloisStatus status = galois_status_from_string(gal.at("group").get<std::string>());
    GaloisStatus implied = GaloisStatus::Inconclusive;
    if (irr && five) implied = is_rational_square(disc) ? GaloisStatus::CertifiedA7 : GaloisStatus::CertifiedS7;
    if (status != GaloisStatus::Inconclusive) {
        log.expect("galois.status", status == implied, "status " + to_string(status) + " is not implied by the witnesses");
    } else {
        log.expect("galois.diagnostic", gal.contains("diagnostic"), "INCONCLUSIVE without a diagnostic");
    }
    const std::string stage_status = status == GaloisStatus::Inconclusive ? "inconclusive" : "pass";
    log.expect("galois.stage_status", gal.at("status") == stage_status, "stage status disagrees with group");
}

}  // namespace detail

inline ReplayResult replay_certificate(const nlohmann::json& report,
                                       const std::optional<std::string>& data_dir = std::nullopt) {
    ReplayResult result;
    detail::ReplayLog log(result);
    try {
        log.expect("schema_version", report.at("schema_version") == kSchemaVersion, "unsupported schema version");
        if (report.contains("error")) {
            detail::replay_error_report(report, log);
            return result;
        }
        const UniPoly f = unipoly_from_json(report.at("input").at("polynomial"));
        const UniPoly g = primitive_integer_part(f);
        if (!log.expect("input.degree", f.degree() == 7, "input is not a septic")) return result;
        log.expect("input.integer_polynomial", unipoly_from_json(report.at("input").at("integer_polynomial")) == g,
                   "integer normalization differs");
        log.expect("stage_order", report.at("stage_order") == stage_order(), "unexpected stage order");

        const auto& stages = report.at("stages");
        nlohmann::json recomputed = nlohmann::json::object();
        auto compare = [&](const std::string& name, const nlohmann::json& fresh) {
            recomputed[name] = fresh;
            log.expect(name, stages.at(name) == fresh, "recorded result differs from recomputation");
        };
        compare("separability", stage::separability(g));
        if (recomputed["separability"]["status"] != "pass") return result;

        detail::replay_galois(g, stages.at("galois"), log);
        recomputed["galois"] = stages.at("galois");
        compare("general_position", stage::general_position(f));
        compare("forms", stage::forms(f));
        compare("sextic", stage::sextic(f));
        compare("lattice", stage::lattice());
        compare("module", stage::module(galois_status_from_string(stages.at("galois").at("group").get<std::string>())));
        compare("characters", stage::characters(resolve_data_dir(data_dir)));

        const auto& verdict = report.at("verdict");
        log.expect("verdict.consistency", verdict == derive_verdict(stages),
                   "recorded verdict " + verdict.value("result", std::string("?")) +
                       " does not follow from the recorded stage results");
        log.expect("verdict.recomputed", verdict == derive_verdict(recomputed),
                   "recorded verdict does not follow from the recomputed stage results");
    } catch (const std::exception& e) {
        result.failures.push_back(std::string("structure: ") + e.what());
    }
    return result;
}

inline ReplayResult replay_certificate_file(const std::filesystem::path& path,
                                            const std::optional<std::string>& data_dir = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    nlohmann::json report;
    try {
        in >> report;
    } catch (const nlohmann::json::exception& e) {
        ReplayResult r;
        r.failures.push_back(std::string("structure: ") + e.what());
        return r;
    }
    return replay_certificate(report, data_dir);
}

}  // namespace quartic_forge
