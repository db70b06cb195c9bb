#pragma once

#include "comat/io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace comat {
namespace run {

struct Options {
  std::string side = "both";      // left | right | both
  int precision = 16;
  int bound = -1;                 // -1: per-instance default
  int slack = 4;
  int degree = -1;                // instantiation degree for cross-checks
  bool dot = false;
  bool timing = false;
  bool oracle = false;            // cross-run the brute-force oracle in `rat`
  int jobs = 1;
  int n = 3;                      // example parameter
  std::string aux_text;           // functional / split document for decompose
};

struct Result {
  int exit_code = 0;  // 0 definite, 1 input error, 2 undecided at precision
  io::json report;
};

/// Named input files (name, text). Reports preserve the input order.
using Inputs = std::vector<std::pair<std::string, std::string>>;

Result run_command(const std::string& command, const Inputs& inputs, const Options& opts);

/// Builders for `example <label>`; returns the document JSON.
io::json run_example(const std::string& label, int n);

}  // namespace run
}  // namespace comat
