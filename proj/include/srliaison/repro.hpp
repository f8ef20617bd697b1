#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace srl {

/// One reproduction target: a named pipeline bound to an expected-values
/// table. run() executes the pipeline and compares.
struct ReproReport {
    std::string target;
    bool pass = false;
    std::vector<std::string> lines;  // one "ok/FAIL: ..." line per check
    nlohmann::json details;
};

std::vector<std::string> repro_targets();

/// Throws on an unknown target name.
ReproReport run_repro(const std::string& target, int jobs = 0);

}  // namespace srl
