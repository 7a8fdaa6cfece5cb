#pragma once

// On-disk memo of per-prime factorizations, one file per polynomial:
// <cache_dir>/<sha256 of the canonical polynomial>.json. The file carries the
// polynomial digest and a digest of its own payload; anything that does not
// check out is ignored with a warning.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <openssl/evp.h>

#include <json.hpp>

#include "error.hpp"
#include "galois.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

inline std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::Io, "SHA-256 digest failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
    return out.str();
}

inline std::string poly_digest(const UniPoly& f) { return sha256_hex(to_json(f).dump()); }

inline nlohmann::json memo_to_json(const PrimeScanMemo& memo) {
    nlohmann::json records = nlohmann::json::object();
    for (const auto& [p, rec] : memo) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& g : rec.factors) factors.push_back(to_json(g));
        records[std::to_string(p)] = {{"usable", rec.usable}, {"factors", factors}};
    }
    return records;
}

inline PrimeScanMemo memo_from_json(const nlohmann::json& records) {
    PrimeScanMemo memo;
    for (const auto& [key, r] : records.items()) {
        const std::uint64_t p = std::stoull(key);
        PrimeScanRecord rec;
        rec.usable = r.at("usable").get<bool>();
        for (const auto& g : r.at("factors")) rec.factors.emplace_back(g.get<std::vector<std::uint64_t>>(), p);
        memo[p] = std::move(rec);
    }
    return memo;
}

class ScanCache {
public:
    ScanCache(std::filesystem::path dir, const UniPoly& f)
        : dir_(std::move(dir)), polynomial_(to_json(f)), digest_(poly_digest(f)) {}

    [[nodiscard]] std::filesystem::path file() const { return dir_ / (digest_ + ".json"); }
    [[nodiscard]] const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// Loads the memo; returns an empty memo (with a warning) on any problem
    /// other than the file simply not existing yet.
    PrimeScanMemo load() {
        std::error_code ec;
        if (!std::filesystem::exists(file(), ec)) return {};
        try {
            std::ifstream in(file());
            nlohmann::json j;
            in >> j;
            if (j.at("poly_digest").get<std::string>() != digest_ || j.at("polynomial") != polynomial_) {
                warn("cache file " + file().string() + " belongs to a different polynomial; ignored");
                return {};
            }
            const auto& records = j.at("records");
            if (sha256_hex(records.dump()) != j.at("payload_digest").get<std::string>()) {
                warn("cache file " + file().string() + " failed its payload digest; ignored");
                return {};
            }
            return memo_from_json(records);
        } catch (const std::exception& e) {
            warn("cache file " + file().string() + " is unreadable (" + e.what() + "); rescanning");
            return {};
        }
    }

    /// Best effort: an unwritable directory only produces a warning.
    void store(const PrimeScanMemo& memo) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        const nlohmann::json records = memo_to_json(memo);
        const nlohmann::json j = {
            {"poly_digest", digest_},
            {"polynomial", polynomial_},
            {"records", records},
            {"payload_digest", sha256_hex(records.dump())},
        };
        const auto tmp = dir_ / (digest_ + ".json.tmp");
        {
            std::ofstream out(tmp);
            if (!out || !(out << j.dump())) {
                warn("cache directory " + dir_.string() + " is not writable; continuing uncached");
                return;
            }
        }
        std::filesystem::rename(tmp, file(), ec);
        if (ec) warn("could not move cache file into place: " + ec.message());
    }

private:
    void warn(std::string msg) { warnings_.push_back(std::move(msg)); }

    std::filesystem::path dir_;
    nlohmann::json polynomial_;
    std::string digest_;
    std::vector<std::string> warnings_;
};

}  // namespace quartic_forge
