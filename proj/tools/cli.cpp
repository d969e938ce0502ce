#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "molandscape/csv.hpp"
#include "molandscape/pipeline.hpp"
#include "molandscape/render.hpp"

namespace molandscape::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> split_numbers(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError(flag + ": invalid number '" + token + "'");
    }
  }
  return values;
}

Vec2 parse_vec2(const std::string& text, const std::string& flag) {
  const auto v = split_numbers(text, flag);
  if (v.size() != 2) throw UsageError(flag + " expects two comma-separated numbers");
  return {v[0], v[1]};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

void finish(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  BiObjectiveProblem problem;
  Grid grid({0.0, 0.0}, {1.0, 1.0}, 2, 2);
  try {
    problem = find_problem(config.problem);
    if (config.lower || config.upper) {
      problem = problem.with_bounds(config.lower.value_or(problem.lower),
                                    config.upper.value_or(problem.upper));
    }
    grid = build_grid(problem.lower, problem.upper, config.n1, config.n2);
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    PipelineOptions options;
    options.zero_tol_relative = config.zero_tol;
    options.div_tol_relative = config.div_tol;
    options.workers = config.workers;
    options.compute_cost = config.mode == Mode::Cost;
    const PipelineResult result = run_pipeline(problem, grid, options);
    const auto& d = result.decomposition;

    if (config.out) {
      const ImageFormat format = config.format.value_or(
          ends_with(*config.out, ".png") ? ImageFormat::Png : ImageFormat::Ppm);
      PlotArtifact img = [&] {
        switch (config.mode) {
          case Mode::Gfh: return render_heatmap(result.gfh.heights, config.log_scale);
          case Mode::Cost: return render_heatmap(*result.cost, config.log_scale);
          case Mode::Critical: return render_critical(result.critical);
          case Mode::Plot: break;
        }
        return compose_plot(result.gfh.heights, d, config.log_scale);
      }();
      for (const auto& w : img.warnings) err << "warning: " << w << '\n';
      auto f = open_output(*config.out);
      if (format == ImageFormat::Png) {
        write_png(f, img);
      } else {
        write_ppm(f, img);
      }
      finish(f, *config.out);
    }

    if (config.export_csv) {
      auto f = open_output(*config.export_csv);
      switch (config.mode) {
        case Mode::Critical: write_fields_csv(f, result.fields); break;
        case Mode::Cost: write_height_csv(f, *result.cost); break;
        case Mode::Plot:
        case Mode::Gfh: write_height_csv(f, result.gfh.heights); break;
      }
      finish(f, *config.export_csv);
    }

    if (config.export_json) {
      auto f = open_output(*config.export_json);
      if (config.mode == Mode::Critical) {
        write_critical_json(f, result.critical, result.fields);
      } else {
        write_decomposition_json(f, d, result.fields.f1, result.fields.f2);
      }
      finish(f, *config.export_json);
    }

    nlohmann::ordered_json summary{{"problem", config.problem},
                                   {"n_efficient", d.n_efficient},
                                   {"n_components", d.components.size()},
                                   {"n_rank0", d.n_rank0},
                                   {"n_cycles", result.gfh.basins.cycles}};
    out << summary.dump() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally efficient sets and landscape plots of bi-objective 2D problems", "molandscape"};

  RunConfig config;
  std::string lower;
  std::string upper;
  std::string resolution;
  std::string format;
  bool no_log_scale = false;
  bool list = false;

  const std::map<std::string, Mode> modes{
      {"plot", Mode::Plot}, {"gfh", Mode::Gfh}, {"cost", Mode::Cost}, {"critical", Mode::Critical}};

  app.add_option("--problem", config.problem, "Problem name, e.g. aspar or bisphere:-1,0,1,0");
  app.add_option("--lower", lower, "Lower box corner x1,x2");
  app.add_option("--upper", upper, "Upper box corner x1,x2");
  app.add_option("--resolution", resolution, "Grid points per dimension, N or N,M (default 300)");
  app.add_option("--mode", config.mode, "plot | gfh | cost | critical")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--out", config.out, "Image output path");
  app.add_option("--format", format, "ppm | png (default from --out extension)")
      ->check(CLI::IsMember({"ppm", "png"}));
  app.add_option("--export-csv", config.export_csv, "CSV data export path");
  app.add_option("--export-json", config.export_json, "JSON data export path");
  app.add_option("--zero-tol", config.zero_tol, "Gradient-zero tolerance, relative to mean gradient length")
      ->check(CLI::PositiveNumber);
  app.add_option("--div-tol", config.div_tol, "Divergence tolerance, relative to max |div|")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--no-log-scale", no_log_scale, "Display raw heights instead of log(1 + h)");
  app.add_flag("--list-problems", list, "List built-in problems and exit");
  app.add_option("--workers", config.workers, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (list) {
    for (const auto& p : builtin_problems()) {
      out << p.name << (p.externally_sourced ? " (externally sourced formula)" : "") << '\n';
    }
    return kExitOk;
  }

  try {
    if (config.problem.empty()) throw UsageError("--problem is required");
    if (!lower.empty()) config.lower = parse_vec2(lower, "--lower");
    if (!upper.empty()) config.upper = parse_vec2(upper, "--upper");
    if (!resolution.empty()) {
      const auto r = split_numbers(resolution, "--resolution");
      if (r.empty() || r.size() > 2) throw UsageError("--resolution expects N or N,M");
      for (double v : r) {
        if (v < 2 || v != std::floor(v)) throw UsageError("--resolution values must be integers >= 2");
      }
      config.n1 = static_cast<std::size_t>(r[0]);
      config.n2 = static_cast<std::size_t>(r.size() == 2 ? r[1] : r[0]);
    }
    if (!format.empty()) config.format = format == "png" ? ImageFormat::Png : ImageFormat::Ppm;
    config.log_scale = !no_log_scale;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  return run(config, out, err);
}

}  // namespace molandscape::cli
