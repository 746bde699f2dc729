#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "doily/incidence.hpp"

namespace doily::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (program name first) and runs the selected subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Graphviz rendering of the Levi graph: points are circles, lines boxes.
std::string levi_dot(const IncidenceStructure& s, const std::vector<std::string>& labels = {});

}  // namespace doily::cli
