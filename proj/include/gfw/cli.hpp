#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gfw/io.hpp"

namespace gfw {

inline constexpr const char* kCommands[] = {"info",   "gaps",       "weight", "profile", "pluecker",
                                            "dims",   "strictness", "mho",    "orbit",   "sweep"};

struct RunConfig {
  std::string command;
  Json curve;                       // curve description, see curve_from_json
  std::vector<std::string> points;  // "--point" texts
  std::optional<int> axis;
  std::string mode = "generic";     // generic | embedded
  std::optional<int> j;             // mho: one summand instead of all
  int degree = 1;                   // profile: forms of this degree
  int truncation = 0;               // 0: automatic
  std::string format = "json";      // json | csv | pretty
  std::vector<std::vector<std::string>> grid;  // sweep: lambda tuples
  int jobs = 1;
  std::string cache_dir;            // empty: no cache
};

/// Checks the command, format and every rational before anything runs.
void validate(const RunConfig& config);

/// {"tool", "version", "command", "input", "output"}. Depends only on the
/// configuration and the version, so identical runs give identical bytes.
Json run(const RunConfig& config);

/// Same record, served from and stored to the content-addressed cache when
/// config.cache_dir is set.
Json run_cached(const RunConfig& config);

std::string cache_key(const RunConfig& config);

std::string render(const Json& record, const std::string& format);

/// Full command line front end. Exit codes: 0 success, 2 bad input or a
/// domain error, 3 internal error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gfw
