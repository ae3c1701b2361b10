#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <string_view>

#include "troute/error.hpp"

namespace troute::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double>* slot(ParamOverrides& o, std::string_view key) {
  if (key == "omega") return &o.omega;
  if (key == "xi") return &o.xi;
  if (key == "ga") return &o.ga;
  if (key == "gb") return &o.gb;
  if (key == "omegaA") return &o.omega_atom;
  if (key == "omega_a") return &o.omega_a;
  if (key == "omega_b") return &o.omega_b;
  if (key == "xi_a") return &o.xi_a;
  if (key == "xi_b") return &o.xi_b;
  return nullptr;
}

template <class T>
T pick(const std::optional<T>& flag, const std::optional<T>& file, T fallback) {
  if (flag) return *flag;
  if (file) return *file;
  return fallback;
}

}  // namespace

ParamOverrides read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoFailure, "cannot read config file '" + path.string() + "'");
  }
  ParamOverrides out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidParams, where + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    auto* target = slot(out, key);
    if (target == nullptr) {
      throw Error(ErrorCode::InvalidParams, where + ": unknown key '" + std::string(key) + "'");
    }
    double v = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
      throw Error(ErrorCode::InvalidParams,
                  where + ": value of '" + std::string(key) + "' is not a number");
    }
    *target = v;
  }
  return out;
}

RunConfig resolve(const ParamOverrides& flags, const std::string& config_file) {
  ParamOverrides file;
  if (!config_file.empty()) file = read_config_file(config_file);

  const double omega = pick(flags.omega, file.omega, 10.0);
  const double xi = pick(flags.xi, file.xi, 1.0);
  const double omega_a = pick(flags.omega_a, file.omega_a, omega);
  const double omega_b = pick(flags.omega_b, file.omega_b, omega);
  const double xi_a = pick(flags.xi_a, file.xi_a, xi);
  const double xi_b = pick(flags.xi_b, file.xi_b, xi);

  RunConfig cfg;
  cfg.config_file = config_file;
  cfg.params = ModelParams::general(omega_a, omega_b, xi_a, xi_b,
                                    pick(flags.ga, file.ga, 0.3),
                                    pick(flags.gb, file.gb, 0.3),
                                    pick(flags.omega_atom, file.omega_atom, 10.0));
  return cfg;
}

}  // namespace troute::cli
