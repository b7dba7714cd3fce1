#pragma once

#include "ospkw/characters.hpp"
#include "ospkw/rootdata.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ospkw {

enum class OutputFormat { Json, Text };

struct Request {
  std::string command;  // classify, bottom, character, block-family, verify
  std::optional<Algebra> algebra;
  std::string partition;  // comma-separated
  bool minus = false;
  OutputFormat output = OutputFormat::Json;
  unsigned threads = 1;
  std::size_t max_rank = 2;
  WeylSum weyl_sum = WeylSum::Orbit;
};

struct Response {
  int exit_code = 0;
  std::string payload;
};

struct Check {
  std::string name;
  std::string algebra;
  bool passed = false;
  std::string detail;
};

/// Identity checks for one algebra: trivial characters, Euler constants,
/// Euler characteristic against KW, denominators, sigma twists.
std::vector<Check> verify_algebra(const Algebra& alg, const CharacterOptions& opt);

/// Exit 1 for bad input, 2 for internal faults.
Response run(const Request& req);

/// Parses argv (program name first) and runs the request.
Response run_command_line(int argc, const char* const* argv);

}  // namespace ospkw
