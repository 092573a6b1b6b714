#pragma once

// Check reports: a flat list of expected/actual comparisons with a stable
// JSON serialization (sorted keys, no timing field) and a human rendering.

#include <json.hpp>

#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "bigint.hpp"

namespace symcay {

inline std::string display(const std::string& v) { return v; }
inline std::string display(const char* v) { return v; }
inline std::string display(bool v) { return v ? "true" : "false"; }
inline std::string display(const BigCount& v) { return v.get_str(); }
template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
std::string display(T v) {
    return std::to_string(v);
}

struct CheckResult {
    std::string name;      // one-line human label
    std::string claim;     // stable machine identifier for the claim
    std::string expected;
    std::string actual;
    bool pass = true;
    std::string flag;      // "", "constant", "amended", or "informational"
};

struct VerificationReport {
    std::string version = "1.0";
    std::string command;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    template <typename E, typename A>
    void check(const std::string& name, const std::string& claim, const E& expected,
               const A& actual, const std::string& flag = "") {
        CheckResult r;
        r.name = name;
        r.claim = claim;
        r.expected = display(expected);
        r.actual = display(actual);
        r.pass = (r.expected == r.actual);
        r.flag = flag;
        checks.push_back(std::move(r));
    }

    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        seconds += other.seconds;
    }
};

/// Byte-stable JSON: nlohmann::json orders keys alphabetically and the
/// timing field is deliberately left out.
inline std::string emit_json(const VerificationReport& rep) {
    nlohmann::json root;
    root["version"] = rep.version;
    root["command"] = rep.command;
    root["overall"] = rep.overall() ? "pass" : "fail";
    auto& arr = root["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json item;
        item["name"] = c.name;
        item["claim"] = c.claim;
        item["expected"] = c.expected;
        item["actual"] = c.actual;
        item["pass"] = c.pass;
        item["flag"] = c.flag;
        arr.push_back(std::move(item));
    }
    return root.dump(2) + "\n";
}

inline std::string emit_human(const VerificationReport& rep) {
    std::ostringstream out;
    out << "# " << rep.command << "\n";
    for (const auto& c : rep.checks) {
        out << (c.pass ? "✓ " : "✗ ") << c.name;
        bool bare = c.pass && c.expected == "true";  // plain assertions read fine unadorned
        if (!bare) out << ": expected " << c.expected << ", got " << c.actual;
        if (!c.flag.empty()) out << " [" << c.flag << "]";
        out << "\n";
    }
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << rep.seconds;
    out << "overall: " << (rep.overall() ? "PASS" : "FAIL") << " (" << rep.checks.size()
        << " checks, " << secs.str() << " s)\n";
    return out.str();
}

}  // namespace symcay
