#pragma once

#include <string>
#include <vector>

#include "pcw/tanner_graph.hpp"

namespace pcw {

// Named small graphs shared by the tests and the CLI --fixture flag.
TannerGraph fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace pcw
