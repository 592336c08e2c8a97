#pragma once

// The end-to-end verification suite run by `mrt verify`.

#include <string>
#include <vector>

#include "mrt/matroid.hpp"

namespace mrt {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // first counterexample, or the reason for a skip
};

/// Every invariant that applies to the represented matroid, checked on every
/// T-flat.  Checks whose hypotheses fail are skipped, not failed.
std::vector<Check> verify_suite(const Representation& rep);

/// No check failed.
bool all_passed(const std::vector<Check>& checks);

}  // namespace mrt
