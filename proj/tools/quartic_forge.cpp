// quartic-forge: certify the hypotheses of End(J(B_f)) = Z for a septic f,
// replay stored certificates, and inspect the forms and character tables.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quartic_forge/quartic_forge.hpp"

namespace qf = quartic_forge;

namespace {

std::vector<std::string> read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qf::Error(qf::ErrorCode::Io, "cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
    }
    return out;
}

bool write_output(const nlohmann::json& j, const std::optional<std::string>& out) {
    const std::string text = j.dump(2) + "\n";
    if (!out) {
        std::cout << text;
        return true;
    }
    std::ofstream f(*out);
    if (!f || !(f << text)) {
        std::cerr << "error: cannot write " << *out << "\n";
        return false;
    }
    return true;
}

void print_stage_summary(const nlohmann::json& report, const qf::PipelineResult& r) {
    if (report.contains("error")) {
        std::cerr << "error: " << report["error"]["message"].get<std::string>() << "\n";
        return;
    }
    for (const auto& name : qf::stage_order()) {
        std::cerr << "  " << name << ": " << report["stages"][name]["status"].get<std::string>() << "\n";
    }
    std::cerr << "  galois stage from cache: " << (r.galois_from_cache ? "yes" : "no") << "\n";
    std::cerr << "verdict: " << report["verdict"]["result"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quartic-forge: certificates for End(J(B_f)) = Z over Q"};
    app.require_subcommand(1);

    qf::PipelineConfig cfg;
    std::string poly_text;
    std::string poly_file;
    std::string data_dir;
    std::string cache_dir;
    std::string out_path;
    bool verbose = false;

    auto* certify = app.add_subcommand("certify", "run the full certificate pipeline");
    auto* poly_opt = certify->add_option("--poly", poly_text, "septic polynomial, e.g. \"t^7 - t - 1\"");
    auto* file_opt = certify->add_option("--poly-file", poly_file, "file with one polynomial per line");
    poly_opt->excludes(file_opt);
    certify->add_option("--prime-bound", cfg.prime_bound, "largest prime scanned")->capture_default_str();
    certify->add_option("--budget", cfg.five_part_budget, "usable primes examined at most")->capture_default_str();
    certify->add_option("--seed", cfg.seed, "seed for equal-degree splitting")->capture_default_str();
    certify->add_option("--data-dir", data_dir, "character table directory (else $QUARTIC_FORGE_DATA_DIR)");
    certify->add_option("--cache-dir", cache_dir, "directory for the prime-scan cache");
    certify->add_option("--out", out_path, "write the report here instead of stdout");
    certify->add_flag("--verbose,-v", verbose, "stage summary on stderr");

    std::string report_path;
    auto* replay = app.add_subcommand("replay", "re-verify a stored report");
    replay->add_option("report", report_path, "report JSON")->required();
    replay->add_option("--data-dir", data_dir, "character table directory");

    auto* forms = app.add_subcommand("forms", "print u, v, w and the branch sextic");
    forms->add_option("--poly", poly_text, "septic polynomial")->required();

    std::string group;
    auto* chartab = app.add_subcommand("chartab", "validate a character table and print indicators");
    chartab->add_option("--group", group, "a7 or 2a7")->required()->check(CLI::IsMember({"a7", "2a7"}));
    chartab->add_option("--data-dir", data_dir, "character table directory");

    CLI11_PARSE(app, argc, argv);

    const auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
    cfg.data_dir = opt(data_dir);
    cfg.cache_dir = opt(cache_dir);
    cfg.out = opt(out_path);
    cfg.verbosity = verbose ? 1 : 0;

    try {
        if (*certify) {
            std::vector<std::string> inputs;
            if (!poly_file.empty()) {
                inputs = read_poly_file(poly_file);
            } else if (!poly_text.empty()) {
                inputs.push_back(poly_text);
            } else {
                std::cerr << "error: one of --poly or --poly-file is required\n";
                return qf::kExitInputError;
            }
            nlohmann::json reports = nlohmann::json::array();
            int exit_code = qf::kExitCertified;
            for (const auto& text : inputs) {
                const auto r = qf::run_pipeline_text(text, cfg);
                for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
                if (verbose) print_stage_summary(r.report, r);
                reports.push_back(r.report);
                exit_code = std::max(exit_code, r.exit_code);
            }
            const bool single = poly_file.empty();
            if (!write_output(single ? reports.front() : reports, cfg.out)) return qf::kExitInternalError;
            return exit_code;
        }
        if (*replay) {
            const auto r = qf::replay_certificate_file(report_path, cfg.data_dir);
            std::cout << qf::to_json(r).dump(2) << "\n";
            return r.passed() ? 0 : 1;
        }
        if (*forms) {
            const qf::UniPoly f = qf::parse_poly(poly_text);
            const auto basis = qf::cubic_basis(f);
            std::cout << "u = " << basis.u.to_string() << "\n"
                      << "v = " << basis.v.to_string() << "\n"
                      << "w = " << basis.w.to_string() << "\n"
                      << "sextic = " << qf::branch_sextic(basis.u, basis.v, basis.w).to_string() << "\n";
            return 0;
        }
        if (*chartab) {
            const auto table = qf::load_char_table(qf::table_path(qf::resolve_data_dir(cfg.data_dir), group));
            const auto summary = qf::summarize_table(table);
            std::cout << qf::to_json(summary).dump(2) << "\n";
            return summary.valid ? 0 : qf::kExitInternalError;
        }
    } catch (const qf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case qf::ErrorCode::Parse:
            case qf::ErrorCode::WrongDegree:
            case qf::ErrorCode::Inseparable:
            case qf::ErrorCode::Reducible:
            case qf::ErrorCode::InvalidArgument: return qf::kExitInputError;
            default: return qf::kExitInternalError;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return qf::kExitInternalError;
    }
    return qf::kExitInternalError;
}
