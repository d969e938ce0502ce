#ifndef MOLANDSCAPE_TOOLS_CLI_HPP
#define MOLANDSCAPE_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "molandscape/types.hpp"

namespace molandscape::cli {

enum class Mode { Plot, Gfh, Cost, Critical };
enum class ImageFormat { Ppm, Png };

struct RunConfig {
  std::string problem;
  std::optional<Vec2> lower;
  std::optional<Vec2> upper;
  std::size_t n1 = 300;
  std::size_t n2 = 300;
  Mode mode = Mode::Plot;
  std::optional<std::string> out;
  std::optional<ImageFormat> format;
  std::optional<std::string> export_csv;
  std::optional<std::string> export_json;
  double zero_tol = 1e-12;
  double div_tol = 1e-9;
  bool log_scale = true;
  unsigned workers = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Runs the pipeline for a validated config; writes files and the summary line to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace molandscape::cli

#endif  // MOLANDSCAPE_TOOLS_CLI_HPP
