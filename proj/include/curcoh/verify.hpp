#pragma once

// Named self-check suites: each line states the expected and computed value.

#include "curcoh/cecohoml.hpp"

#include <string>
#include <vector>

namespace curcoh::verify {

struct CheckLine {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckLine> lines;
    bool pass() const;
};

const std::vector<std::string>& suite_names();
// Throws ValidationError for unknown names.
SuiteResult run_suite(const std::string& name, const EngineOptions& opts = {});

} // namespace curcoh::verify
