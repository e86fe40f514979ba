#pragma once

#include <string>
#include <vector>

#include "ncsym/config.hpp"

namespace ncsym {

struct VerifyCase {
    std::string name;
    bool pass = false;
    std::string detail;  // failure explanation, empty on pass
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    bool ok() const;
};

// Suite names in the order "all" runs them.
const std::vector<std::string>& verify_suite_names();

// Runs one named suite (bases, delcon, sinks, positivity, families,
// reconstruction) or "all".  Unknown names throw std::invalid_argument.
VerifyReport run_verify_suite(const std::string& name, const RunConfig& cfg = default_config());

}  // namespace ncsym
