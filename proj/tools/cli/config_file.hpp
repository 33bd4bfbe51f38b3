#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace wedgeqed::cli {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Parses `key = value` lines. Blank lines and '#' comments (whole-line or
/// trailing) are ignored; keys may be written with or without a leading "--".
/// Throws UsageError on a malformed line.
ConfigEntries parse_config(std::istream& in, const std::string& source);
ConfigEntries read_config(const std::string& path);

}  // namespace wedgeqed::cli
