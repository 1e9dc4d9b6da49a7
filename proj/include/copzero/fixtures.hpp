#pragma once

#include <string>
#include <vector>

namespace copzero {

/// Built-in matrices runnable without input files.
std::vector<std::string> fixture_names();
std::string fixture_text(const std::string& name);  // throws ParseError on unknown name

}  // namespace copzero
