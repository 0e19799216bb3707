#include "kappa/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace kappa {

std::string digest_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string Report::to_text(bool verbose) const {
    std::ostringstream os;
    os << "kappa-workbench " << tool_version << "  digest " << input_digest << "  seed " << seed
       << "\n";
    for (auto& s : suites) {
        size_t fails = s.failures();
        os << (fails ? "FAIL" : "ok  ") << "  " << s.suite << "  (" << s.entries.size()
           << " checks";
        if (fails) os << ", " << fails << " failing";
        os << ")\n";
        for (auto& e : s.entries) {
            if (!e.pass) {
                os << "      FAIL " << e.id << " " << e.subjects;
                if (!e.residual_text.empty()) os << "\n           residual: " << e.residual_text;
                os << "\n";
            } else if (verbose) {
                os << "      ok   " << e.id << " " << e.subjects;
                if (!e.remark.empty()) os << "  [" << e.remark << "]";
                os << "\n";
            }
        }
    }
    os << (all_pass() ? "PASS" : "FAIL") << "  " << checks() << " checks in " << std::fixed
       << std::setprecision(2) << seconds << "s\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["tool_version"] = tool_version;
    j["input_digest"] = input_digest;
    j["seed"] = seed;
    j["pass"] = all_pass();
    j["suites"] = nlohmann::ordered_json::array();
    for (auto& s : suites) {
        nlohmann::ordered_json js;
        js["suite"] = s.suite;
        js["pass"] = s.all_pass();
        js["checks"] = nlohmann::ordered_json::array();
        for (auto& e : s.entries) {
            nlohmann::ordered_json je;
            je["id"] = e.id;
            je["subjects"] = e.subjects;
            je["pass"] = e.pass;
            if (!e.residual_text.empty()) je["residual"] = e.residual_text;
            if (!e.remark.empty()) je["remark"] = e.remark;
            js["checks"].push_back(std::move(je));
        }
        j["suites"].push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

} // namespace kappa
