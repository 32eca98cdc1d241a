#pragma once

#include <string>
#include <vector>

namespace tscc {

struct TsccCode;

struct VerifyCheck {
    std::string name;
    bool pass;
    std::string detail;
};

// Runs every named structural invariant of the code object: parameter
// counts, stabilizer dependencies, stack dependencies, commutation
// relations, logical pairing, schedule validity and measurement counts.
std::vector<VerifyCheck> run_verification(const TsccCode& code);

}  // namespace tscc
