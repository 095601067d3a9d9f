#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        ok = ok && pass;
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    std::string to_string() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.pass ? "ok   " : "FAIL ";
            out += c.name;
            if (!c.detail.empty()) {
                out += ": ";
                out += c.detail;
            }
            out += '\n';
        }
        return out;
    }
};

}  // namespace hurwitz
