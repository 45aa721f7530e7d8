#pragma once

#include <string>

namespace gkp {

/// Outcome of an identity verification.  `skipped` marks checks whose stated
/// hypothesis does not hold for the given parameters (counted as neither
/// pass nor fail); `detail` names the first mismatch when one exists.
struct CheckReport {
    bool ok = true;
    bool skipped = false;
    std::string detail;

    static CheckReport pass() { return {}; }
    static CheckReport fail(std::string d) { return {false, false, std::move(d)}; }
    static CheckReport skip(std::string d) { return {true, true, std::move(d)}; }
};

} // namespace gkp
