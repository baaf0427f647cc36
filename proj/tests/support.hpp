#pragma once

#include <string>
#include <vector>

namespace gdep::test {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs a command with stdout/stderr captured. Arguments are passed
// through the shell with single-quote escaping.
ProcessResult run_process(const std::vector<std::string>& args);

// Per-process scratch directory (created lazily under the system tmp).
std::string scratch_dir();

// Writes `content` to scratch_dir()/name and returns the full path.
std::string write_scratch_file(const std::string& name, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace gdep::test
