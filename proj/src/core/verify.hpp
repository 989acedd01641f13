#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/config.hpp"

namespace qnp::verify {

struct Check {
    std::string suite;
    std::string name;
    int n = 0;
    bool pass = false;
    std::string detail;  // empty on success
};

// bijections, weiss_rogers, gf2, gleason, counting, dynamics
const std::vector<std::string>& suite_names();

// Default ceilings per suite when max_n is not forced: 14 for the
// combinatorial suites, 12 for gf2, 10 for gleason, 16 for counting.
int default_budget(const std::string& suite);

// Runs the requested suites for every n up to the budget, fanning cells out
// over `jobs` workers; results come back sorted (suite, n, name).
std::vector<Check> run(const std::vector<std::string>& suites, std::optional<int> max_n,
                       int jobs, const Config& config);

std::string render_plain(const std::vector<Check>& checks);
std::string render_json(const std::vector<Check>& checks);
std::string render_csv(const std::vector<Check>& checks);

}  // namespace qnp::verify
