#ifndef PRONICSQ_CHECKS_HPP
#define PRONICSQ_CHECKS_HPP

#include <string>
#include <vector>

namespace pronicsq::checks {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// The fixed example suite behind `verify-paper`: every worked value the
// library is expected to reproduce, asserted exactly.
std::vector<CheckResult> reference_checks();

}  // namespace pronicsq::checks

#endif
