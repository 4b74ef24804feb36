#pragma once

#include "klrw/algebra.hpp"

#include <string>
#include <vector>

namespace klrw {

struct RelationSuiteOptions {
    int max_m = 3;
    int max_strands = 4;
    // Perturbation control: negates the multiplication factor of the
    // descending-adjacent crossing, which must break the bigon relations.
    bool flip_adjacent_sign = false;
};

struct RelationSuiteReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Verifies the defining local relations as exact operator identities over
// every label pattern with m <= max_m and word length <= max_strands,
// red strands included (label m); instances needing a red-red crossing are
// not diagrams and are skipped.
RelationSuiteReport run_relation_suite(const RelationSuiteOptions& opts = {});

} // namespace klrw
