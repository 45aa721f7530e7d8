#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gkp {

struct VerifyOptions {
    long depth = 12;       // triangle depth / polynomial degree bound
    long samples = 10;     // random parameter sets per property
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string id;     // stable check identifier (results sort on it)
    bool pass = true;
    bool finding = false; // an unproved statement failed: reported, not fatal
    std::string detail;
};

/// Runs one named verification suite deterministically.  Registered names:
/// pde, s3_group, rank1, worpitzky, riordan, contiguity, closed_forms,
/// egf_all, derivation, conjecture, oeis.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options);

const std::vector<std::string>& suite_names();

} // namespace gkp
