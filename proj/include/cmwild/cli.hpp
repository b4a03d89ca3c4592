#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmwild::cli {

inline constexpr const char* kSchema = "cmwild/1";

enum class Format { Json, Text };

/// One invocation of the command-line tool.
struct JobConfig {
  /// check, hypersurface, ci, family, iso, resolve, hilbert or verify.
  std::string command;
  std::optional<std::string> ring_path;
  std::vector<std::string> instance_paths;
  std::optional<std::string> report_path;
  /// Comma-separated forms, e.g. "x^2,y^2".
  std::optional<std::string> sequence;
  std::optional<std::pair<int, int>> c_window;
  std::optional<std::uint32_t> field_char;
  std::uint64_t seed = 0;
  int budget = 50;
  /// resolve: homological length (default: Krull dimension).
  std::optional<int> length;
  /// hilbert: last degree tabulated.
  int max_degree = 10;
  Format format = Format::Json;
};

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetExhausted = 3;

/// Runs the job, writing the report to `out` and diagnostics to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses "a..b" (inclusive, a ≤ b).
std::pair<int, int> parse_window(const std::string& text);

}  // namespace cmwild::cli
