#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace opmono::testing {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs argv[0] with the given arguments (no shell involved) and captures
/// both output streams.
ProcessResult run_process(const std::vector<std::string>& argv);

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

/// Reads "name | arg arg ..." lines; '#' starts a comment line and
/// @MODELS@ is replaced by `models`.
// Keeps parameterized test listings readable.
inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

std::vector<GoldenCase> load_cases(const std::filesystem::path& manifest, const std::string& models);

std::string read_file(const std::filesystem::path& path);

}  // namespace opmono::testing
