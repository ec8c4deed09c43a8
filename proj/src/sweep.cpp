#include "thermopurity/sweep.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "thermopurity/purity.hpp"

namespace thermopurity {

namespace {

const std::set<std::string> kAxisNames = {"eta", "theta", "beta"};

std::vector<double> linspace(const Axis& ax) {
  std::vector<double> v(ax.count);
  for (int i = 0; i < ax.count; ++i)
    v[i] = ax.min + i * (ax.max - ax.min) / (ax.count - 1);
  return v;
}

void validate_axis(const Axis& ax, const char* which) {
  if (ax.count < 2)
    throw InvalidSpec(std::string(which) + ": axis count must be >= 2");
  if (!(ax.min < ax.max))
    throw InvalidSpec(std::string(which) + ": axis min must be below max");
  if (!kAxisNames.count(ax.name))
    throw InvalidSpec(std::string(which) + ": axis name must be eta, theta or beta");
}

bool identical_mode(const SweepSpec& spec) {
  return spec.fixed.count("c1") || spec.fixed.count("c3") || spec.fixed.count("m1");
}

unsigned thread_budget() {
  unsigned budget = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("THERMOPURITY_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested > 0) budget = static_cast<unsigned>(requested);
  }
  return std::max(budget, 1u);
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

nlohmann::json axis_json(const Axis& ax) {
  return {{"name", ax.name}, {"min", ax.min}, {"max", ax.max}, {"count", ax.count}};
}

}  // namespace

const char* mode_name(SweepMode mode) {
  switch (mode) {
    case SweepMode::eta_theta: return "eta_theta";
    case SweepMode::beta_theta: return "beta_theta";
    case SweepMode::eta_beta: return "eta_beta";
    case SweepMode::curve_beta: return "curve_beta";
    case SweepMode::high_t: return "high_t";
  }
  return "unknown";
}

SweepMode mode_from_name(const std::string& name) {
  if (name == "eta_theta") return SweepMode::eta_theta;
  if (name == "beta_theta") return SweepMode::beta_theta;
  if (name == "eta_beta") return SweepMode::eta_beta;
  if (name == "curve_beta") return SweepMode::curve_beta;
  if (name == "high_t") return SweepMode::high_t;
  throw InvalidSpec("unknown sweep mode: " + name);
}

void validate_spec(const SweepSpec& spec) {
  validate_axis(spec.axis1, "axis1");
  if (spec.axis2) validate_axis(*spec.axis2, "axis2");

  std::set<std::string> axes = {spec.axis1.name};
  if (spec.axis2) {
    if (!axes.insert(spec.axis2->name).second)
      throw InvalidSpec("axis1 and axis2 must differ");
  }
  for (const auto& [name, value] : spec.fixed) {
    (void)value;
    if (kAxisNames.count(name) && axes.count(name))
      throw InvalidSpec("fixed parameter " + name + " also appears as an axis");
  }

  auto covered = [&](const std::string& name) {
    return axes.count(name) || spec.fixed.count(name);
  };

  switch (spec.mode) {
    case SweepMode::eta_theta:
      if (axes != std::set<std::string>{"eta", "theta"} || !covered("beta"))
        throw InvalidSpec("eta_theta: axes must be eta and theta with beta fixed");
      break;
    case SweepMode::beta_theta:
      if (axes != std::set<std::string>{"beta", "theta"} || !covered("eta"))
        throw InvalidSpec("beta_theta: axes must be beta and theta with eta fixed");
      break;
    case SweepMode::eta_beta:
      if (axes != std::set<std::string>{"eta", "beta"} || !covered("theta"))
        throw InvalidSpec("eta_beta: axes must be eta and beta with theta fixed");
      break;
    case SweepMode::curve_beta:
      if (spec.axis2 || spec.axis1.name != "beta")
        throw InvalidSpec("curve_beta: the single axis must be beta");
      if (identical_mode(spec)) {
        if (!spec.fixed.count("c1") || !spec.fixed.count("c3") ||
            !spec.fixed.count("m1"))
          throw InvalidSpec("curve_beta: identical-particle form needs c1, c3 and m1");
      } else if (!covered("eta") || !covered("theta")) {
        throw InvalidSpec("curve_beta: eta and theta must be fixed");
      }
      break;
    case SweepMode::high_t:
      if (axes != std::set<std::string>{"eta", "theta"})
        throw InvalidSpec("high_t: axes must be eta and theta");
      if (covered("beta"))
        throw InvalidSpec("high_t: beta has no role at the high-temperature limit");
      break;
  }
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate_spec(spec);

  const std::vector<double> v1 = linspace(spec.axis1);
  const std::vector<double> v2 =
      spec.axis2 ? linspace(*spec.axis2) : std::vector<double>{0.0};
  const std::size_t total = v1.size() * v2.size();

  SweepResult result;
  result.spec = spec;
  result.rows.resize(total);

  const bool identical = spec.mode == SweepMode::curve_beta && identical_mode(spec);
  const double hbar =
      spec.fixed.count("hbar") ? spec.fixed.at("hbar") : 1.0;

  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const double a1 = v1[idx / v2.size()];
      const double a2 = v2[idx % v2.size()];
      SweepRow row{0, 0, 0, 0};
      auto assign = [&](const Axis& ax, double value) {
        if (ax.name == "eta") row.eta = value;
        else if (ax.name == "theta") row.theta = value;
        else row.beta = value;
      };
      for (const auto& [name, value] : spec.fixed) {
        if (name == "eta") row.eta = value;
        else if (name == "theta") row.theta = value;
        else if (name == "beta") row.beta = value;
      }
      assign(spec.axis1, a1);
      if (spec.axis2) assign(*spec.axis2, a2);

      if (spec.mode == SweepMode::high_t) {
        row.purity = purity_high_t(row.eta, row.theta);
      } else if (identical) {
        row.purity = purity_identical(spec.fixed.at("c1"), spec.fixed.at("c3"),
                                      spec.fixed.at("m1"), hbar, row.beta);
      } else {
        row.purity = purity_closed(row.eta, row.theta, row.beta);
      }
      result.rows[idx] = row;
    }
  };

  const unsigned threads =
      std::min<std::size_t>(thread_budget(), std::max<std::size_t>(total / 4096, 1));
  if (threads <= 1) {
    evaluate(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(evaluate, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t idx = 0; idx < total; ++idx) {
    const double p = result.rows[idx].purity;
    if (!(p > 0.0 && p <= 1.0))
      result.anomalies.push_back("row " + std::to_string(idx) +
                                 ": purity outside (0, 1]");
  }
  return result;
}

void emit(const SweepResult& result, const SweepSpec& spec) {
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out)
    throw IoError("cannot open " + spec.output_path + " for writing");

  if (spec.format == OutputFormat::csv) {
    out << "eta,theta,beta,purity\n";
    for (const SweepRow& row : result.rows)
      out << format_value(row.eta) << ',' << format_value(row.theta) << ','
          << format_value(row.beta) << ',' << format_value(row.purity) << '\n';
  } else {
    nlohmann::json meta = {
        {"mode", mode_name(spec.mode)},
        {"fixed", spec.fixed},
        {"axis1", axis_json(spec.axis1)},
        {"axis2", spec.axis2 ? axis_json(*spec.axis2) : nlohmann::json()},
        {"version", result.version},
        {"anomalies", result.anomalies}};
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : result.rows)
      rows.push_back({row.eta, row.theta, row.beta, row.purity});
    out << nlohmann::json{{"metadata", meta}, {"rows", rows}}.dump(2) << '\n';
  }
  if (!out)
    throw IoError("write failed for " + spec.output_path);
}

SweepSpec load_preset(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read preset file " + path);

  std::map<std::string, std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t");
      const auto last = s.find_last_not_of(" \t");
      return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  auto parse_axis = [](const std::string& text) {
    Axis ax;
    std::istringstream ss(text);
    std::string field;
    std::getline(ss, ax.name, ':');
    std::getline(ss, field, ':');
    ax.min = std::stod(field);
    std::getline(ss, field, ':');
    ax.max = std::stod(field);
    std::getline(ss, field, ':');
    ax.count = std::stoi(field);
    return ax;
  };

  if (!entries.count(name + ".mode"))
    throw InvalidSpec("preset " + name + " not found in " + path);

  SweepSpec spec;
  spec.mode = mode_from_name(entries.at(name + ".mode"));
  spec.axis1 = parse_axis(entries.at(name + ".axis1"));
  if (entries.count(name + ".axis2"))
    spec.axis2 = parse_axis(entries.at(name + ".axis2"));
  if (entries.count(name + ".fix")) {
    std::istringstream ss(entries.at(name + ".fix"));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw InvalidSpec("preset " + name + ": malformed fixed entry " + item);
      spec.fixed[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
  }
  return spec;
}

}  // namespace thermopurity
