#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loopkit/report.hpp"

namespace loopkit::cli {

std::vector<std::string> experiment_names();

/// Runs a named experiment bundle. Throws InputError for unknown names.
Report run_experiment(std::string_view name);

}  // namespace loopkit::cli
