#pragma once

// Uniform result record for checks and probes. A failed report always
// carries a witness; a passing probe may carry one too (e.g. the location
// where a scanned property first holds).

#include <string>
#include <utility>
#include <vector>

namespace quartic {

struct Report {
    std::string id;
    std::string params;
    bool passed = false;
    std::vector<std::pair<std::string, std::string>> witness;

    void note(const std::string& key, const std::string& value) { witness.emplace_back(key, value); }
};

}  // namespace quartic
