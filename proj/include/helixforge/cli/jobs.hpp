#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "helixforge/cli/config.hpp"

namespace helixforge::cli {

enum ExitCode : int {
  kOk = 0,
  kSchema = 2,
  kInterpolation = 3,
  kApproximation = 4,
  kSurface = 5,
  kInternal = 10,
};

struct RunOptions {
  std::filesystem::path out;
  std::optional<unsigned> precision;
  std::optional<std::uint64_t> seed;
};

struct RunResult {
  int exit_code = kOk;
  /// One line per notable event, printed by the executable.
  std::vector<std::string> messages;
  std::vector<std::filesystem::path> files;
};

/// Validates the config against the command's schema and runs it. Never throws:
/// every failure is mapped to an exit code with a message.
RunResult run(const std::string& command, const json& config, const RunOptions& options);
RunResult run_file(const std::string& command, const std::filesystem::path& config, const RunOptions& options);

}  // namespace helixforge::cli
