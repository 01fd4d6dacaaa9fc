#include "judgekit/harness/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "judgekit/errors.hpp"
#include "judgekit/gateway/http_provider.hpp"
#include "judgekit/gateway/mock.hpp"

namespace judgekit::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<std::string> env_value(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

void apply_json(Config& cfg, const ordered_json& j, const std::string& path) {
  if (!j.is_object()) raise(ErrorCode::ParseFailure, path + " is not a JSON object");

  if (j.contains("data_dir")) cfg.data_dir = j["data_dir"].get<std::string>();
  if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"].get<std::string>();
  if (j.contains("cache_enabled")) cfg.cache_enabled = j["cache_enabled"].get<bool>();

  if (j.contains("provider")) cfg.provider = j["provider"].get<std::string>();
  if (j.contains("api_base")) cfg.api_base = j["api_base"].get<std::string>();
  if (j.contains("api_key_env")) cfg.api_key_env = j["api_key_env"].get<std::string>();

  if (j.contains("judge_model")) cfg.judge_model = j["judge_model"].get<std::string>();
  if (j.contains("responder_models"))
    cfg.responder_models = j["responder_models"].get<std::vector<std::string>>();
  if (j.contains("scorer_model")) cfg.scorer_model = j["scorer_model"].get<std::string>();

  if (j.contains("rating"))
    cfg.rating = RatingSystem::from_name(j["rating"].get<std::string>());
  if (j.contains("agr_params")) {
    cfg.agr_params.clear();
    for (const auto& entry : j["agr_params"]) {
      metrics::AgrParams p;
      p.p = entry.at("p").get<int>();
      p.q = entry.at("q").get<double>();
      cfg.agr_params.push_back(p);
    }
  }

  if (j.contains("retry")) {
    const auto& r = j["retry"];
    if (r.contains("max_attempts")) cfg.retry.max_attempts = r["max_attempts"].get<int>();
    if (r.contains("base_delay_ms"))
      cfg.retry.base_delay = std::chrono::milliseconds(r["base_delay_ms"].get<std::int64_t>());
    if (r.contains("multiplier")) cfg.retry.multiplier = r["multiplier"].get<double>();
    if (r.contains("max_in_flight")) cfg.retry.max_in_flight = r["max_in_flight"].get<int>();
  }

  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("parallelism")) cfg.parallelism = j["parallelism"].get<int>();
}

}  // namespace

Config Config::load(const std::optional<std::string>& path) {
  Config cfg;
  cfg.data_dir = default_data_dir();

  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path, std::ios::binary);
    if (!in.is_open()) raise(ErrorCode::IoError, "cannot open config " + *path);
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) raise(ErrorCode::ParseFailure, *path + " is not valid JSON");
    apply_json(cfg, j, *path);
  }

  if (auto base = env_value("JUDGE_API_BASE")) cfg.api_base = *base;
  return cfg;
}

ScenarioCatalog Config::load_catalog() const {
  return ScenarioCatalog::load_file(data_dir + "/scenarios.json");
}

prompts::PromptLibrary Config::load_prompts() const {
  return prompts::PromptLibrary::load(data_dir);
}

std::shared_ptr<gateway::Gateway> Config::make_gateway() const {
  std::shared_ptr<gateway::Provider> backend;
  if (provider == "mock") {
    backend = std::make_shared<gateway::MockProvider>(seed);
  } else if (provider == "http") {
    if (api_base.empty())
      raise(ErrorCode::ConfigError, "http provider needs api_base (or JUDGE_API_BASE)");
    std::string key;
    if (!api_key_env.empty())
      if (auto value = env_value(api_key_env.c_str())) key = *value;
    backend = std::make_shared<gateway::HttpProvider>(api_base, key);
  } else {
    raise(ErrorCode::ConfigError, "unknown provider '" + provider + "'");
  }

  std::optional<std::string> cache;
  if (cache_enabled) cache = cache_dir;
  return std::make_shared<gateway::Gateway>(std::move(backend), retry, cache);
}

}  // namespace judgekit::harness
