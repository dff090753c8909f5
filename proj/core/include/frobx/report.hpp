#pragma once

#include <string>
#include <vector>

namespace frobx {

/* One named verification with the witnesses of every failure found.
 * An empty witness list means the check passed. */
struct Check {
    std::string name;
    bool passed = true;
    std::vector<std::string> witnesses;
};

struct Report {
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    Check& add(std::string name) {
        checks.push_back(Check{std::move(name), true, {}});
        return checks.back();
    }

    void fail(Check& check, std::string witness) {
        check.passed = false;
        check.witnesses.push_back(std::move(witness));
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    /* "all checks passed" or the failed check names with first witnesses. */
    std::string summary() const {
        std::string out;
        for (const auto& c : checks) {
            if (c.passed)
                continue;
            if (!out.empty())
                out += "; ";
            out += c.name;
            if (!c.witnesses.empty())
                out += ": " + c.witnesses.front();
        }
        return out.empty() ? "all checks passed" : out;
    }
};

} // namespace frobx
