#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2ext/presentation.hpp"

namespace sl2ext {

struct Check {
    std::string name;
    bool pass = true;
    std::string counterexample;  // empty when the check passes
    std::uint64_t cases = 0;     // number of instances examined
};

struct Report {
    std::string suite;
    std::vector<Check> checks;  // sorted by name
    bool all_pass() const;
    std::size_t failures() const;
};

struct VerifyConfig {
    std::uint32_t max_length = 8;
    std::uint32_t samples = 1000;
    std::uint64_t seed = 42;
    EpsilonBound epsilon = EpsilonBound::group;
};

// Suite names accepted by run_suite, not including "all".
const std::vector<std::string>& suite_names();

// Runs one suite over the active field.  Throws std::invalid_argument for an
// unknown suite name.  "all" runs every suite and merges the checks, each
// prefixed by its suite name.
Report run_suite(const std::string& suite, const VerifyConfig& cfg);

}  // namespace sl2ext
