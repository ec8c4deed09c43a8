#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "thermopurity/sweep.hpp"
#include "thermopurity/verify.hpp"

namespace {

using namespace thermopurity;

constexpr int kExitInvalidSpec = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitIoError = 4;

Axis parse_axis(const std::string& text) {
  Axis ax;
  std::istringstream ss(text);
  std::string field;
  if (!std::getline(ss, ax.name, ':')) throw InvalidSpec("malformed axis " + text);
  try {
    std::getline(ss, field, ':');
    ax.min = std::stod(field);
    std::getline(ss, field, ':');
    ax.max = std::stod(field);
    std::getline(ss, field, ':');
    ax.count = std::stoi(field);
  } catch (const std::exception&) {
    throw InvalidSpec("malformed axis " + text + " (want name:min:max:count)");
  }
  return ax;
}

std::string default_presets_path(const char* argv0) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path beside = fs::path(argv0).parent_path() / "presets.cfg";
  if (fs::exists(beside, ec)) return beside.string();
  return "presets.cfg";
}

int run_spec(SweepSpec spec) {
  const SweepResult result = run_sweep(spec);
  emit(result, spec);
  std::cout << "wrote " << result.rows.size() << " rows to " << spec.output_path
            << '\n';
  for (const std::string& note : result.anomalies)
    std::cerr << "warning: " << note << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-temperature purity of two coupled harmonic oscillators"};
  app.require_subcommand(1);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
  std::string mode_str, axis1_str, axis2_str, format_str = "csv", out_path;
  std::vector<std::string> fixes;
  sweep_cmd->add_option("--mode", mode_str, "eta_theta|beta_theta|eta_beta|curve_beta|high_t")
      ->required();
  sweep_cmd->add_option("--fix", fixes, "fixed parameter, name=value");
  sweep_cmd->add_option("--axis1", axis1_str, "name:min:max:count")->required();
  sweep_cmd->add_option("--axis2", axis2_str, "name:min:max:count");
  sweep_cmd->add_option("--format", format_str, "csv|json");
  sweep_cmd->add_option("--out", out_path, "output file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  std::string level_str = "quick";
  verify_cmd->add_option("--level", level_str, "quick|full");

  // figure presets
  std::string presets_path = default_presets_path(argv[0]);
  std::string fig_out, fig_format = "csv";
  std::vector<CLI::App*> fig_cmds;
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
    auto* cmd = app.add_subcommand(name, std::string("emit the ") + name + " dataset");
    cmd->add_option("--out", fig_out, "output file")->required();
    cmd->add_option("--format", fig_format, "csv|json");
    cmd->add_option("--presets", presets_path, "preset file");
    fig_cmds.push_back(cmd);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.mode = mode_from_name(mode_str);
      for (const std::string& fix : fixes) {
        const auto eq = fix.find('=');
        if (eq == std::string::npos)
          throw InvalidSpec("malformed --fix " + fix + " (want name=value)");
        spec.fixed[fix.substr(0, eq)] = std::stod(fix.substr(eq + 1));
      }
      spec.axis1 = parse_axis(axis1_str);
      if (!axis2_str.empty()) spec.axis2 = parse_axis(axis2_str);
      if (format_str == "json") spec.format = OutputFormat::json;
      else if (format_str != "csv") throw InvalidSpec("format must be csv or json");
      spec.output_path = out_path;
      return run_spec(std::move(spec));
    }

    if (verify_cmd->parsed()) {
      VerifyLevel level;
      if (level_str == "quick") level = VerifyLevel::quick;
      else if (level_str == "full") level = VerifyLevel::full;
      else throw InvalidSpec("level must be quick or full");
      const VerifyReport report = verify(level);
      print_report(report, std::cout);
      return report.all_pass() ? 0 : kExitVerifyFailed;
    }

    for (std::size_t i = 0; i < fig_cmds.size(); ++i) {
      if (!fig_cmds[i]->parsed()) continue;
      SweepSpec spec =
          load_preset(presets_path, "fig" + std::to_string(i + 1));
      if (fig_format == "json") spec.format = OutputFormat::json;
      else if (fig_format != "csv") throw InvalidSpec("format must be csv or json");
      spec.output_path = fig_out;
      return run_spec(std::move(spec));
    }
  } catch (const InvalidSpec& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
