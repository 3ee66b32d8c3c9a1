#pragma once

#include <string>
#include <vector>

#include "chern/chern_combo.hpp"
#include "chern/json.hpp"

namespace chern {

/// Outcome of one verified identity at one dimension. Failures are report
/// entries, never exceptions.
struct IdentityCheck {
    int n;
    std::string identity;
    bool pass;
    ChernCombo lhs;
    ChernCombo rhs;
};

using Report = std::vector<IdentityCheck>;

bool all_pass(const Report& report);

/// [{"n": n, "identity": "...", "pass": bool, "lhs": combo, "rhs": combo}, ...]
njson report_to_json(const Report& report);
Report report_from_json(const njson& j);

}  // namespace chern
