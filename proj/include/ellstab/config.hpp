#pragma once

#include "ellstab/rational.hpp"
#include "ellstab/walls.hpp"

#include <string>

namespace ellstab {

enum class OutputFormat { Json, Tsv, SvgJson };
enum class CheckLevel { Fast, Full };

struct RunConfig {
  Int e = 2;
  Box box{Int(-10), Int(10), Int(-10), Int(10), Int(-30), Int(30), {}};
  OutputFormat format = OutputFormat::Json;
  CheckLevel check = CheckLevel::Fast;
  unsigned threads = 1;
};

// Flat key=value file ('#' comments, blank lines ignored).  Keys: e, format,
// check, threads, box_n, box_d, box_c (value "lo:hi"), box_s ("lo:hi",
// rationals).  Unknown keys or malformed values raise usage_error.  Flags
// given on the command line override whatever the file sets.
void apply_config_file(RunConfig& cfg, const std::string& path);

OutputFormat parse_format(const std::string& text);   // usage_error on junk
CheckLevel parse_check_level(const std::string& text);

} // namespace ellstab
