#include "config.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace hardsq::cli {

namespace {

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
    throw std::invalid_argument(what + " must be a non-negative integer, got '" + text + "'");
  return value;
}

std::uint64_t json_count(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_unsigned())
    throw std::invalid_argument("config key '" + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "threads")
      cfg.threads = static_cast<int>(json_count(value, key));
    else if (key == "cell_cap")
      cfg.cell_cap = json_count(value, key);
    else if (key == "vertex_cap")
      cfg.vertex_cap = json_count(value, key);
    else if (key == "step_budget")
      cfg.step_budget = json_count(value, key);
    else
      throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

void apply_environment(RunConfig& cfg, const EnvLookup& env) {
  if (const char* t = env("HARDSQ_THREADS"))
    cfg.threads = static_cast<int>(parse_count(t, "HARDSQ_THREADS"));
  if (const char* c = env("HARDSQ_CELL_CAP")) cfg.cell_cap = parse_count(c, "HARDSQ_CELL_CAP");
}

}  // namespace hardsq::cli
