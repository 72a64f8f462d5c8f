#pragma once

#include <string>
#include <vector>

namespace xccy::cli {

/// Exit codes: 0 success, 2 calibration failure, 3 input error, 4 oracle
/// z-score breach.
int run(const std::vector<std::string>& args);

} // namespace xccy::cli
