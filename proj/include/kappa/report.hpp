#pragma once

#include "kappa/hopf.hpp"

namespace kappa {

inline constexpr const char* tool_version = "0.1.0";

// Aggregated run report. The structured form is byte-stable for a fixed seed
// and inputs: wall-clock time stays in the text rendering only.
struct Report {
    std::string input_digest;
    uint64_t seed = 0;
    std::vector<CheckReport> suites;
    double seconds = 0;

    bool all_pass() const {
        for (auto& s : suites)
            if (!s.all_pass()) return false;
        return true;
    }
    size_t checks() const {
        size_t n = 0;
        for (auto& s : suites) n += s.entries.size();
        return n;
    }
    std::string to_text(bool verbose) const;
    std::string to_json() const;
};

// 64-bit FNV-1a, hex-rendered; used as the input digest.
std::string digest_hex(const std::string& data);

} // namespace kappa
