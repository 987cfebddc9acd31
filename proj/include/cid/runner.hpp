#pragma once

#include <string>
#include <vector>

#include "cid/document.hpp"

namespace cid {

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 domain error, 2 syntax error, 3 verification failure
  std::string report;
};

// Executes one subcommand (already tokenized, e.g. {"mult", "J", "-c", "3/2"})
// against a parsed document. Reports are deterministic, one datum per line.
RunResult run_command(const std::vector<std::string>& args, const Document& doc,
                      bool verbose = false);

// Parses `text` and runs the command; syntax errors yield exit code 2.
RunResult run_on_text(const std::vector<std::string>& args,
                      const std::string& text, bool verbose = false);

}  // namespace cid
