#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/gateway/gateway.hpp"
#include "judgekit/metrics/metrics.hpp"
#include "judgekit/prompts/library.hpp"
#include "judgekit/rating.hpp"

namespace judgekit::harness {

// Pipeline configuration, loaded from a JSON file with env overrides for the
// endpoint (JUDGE_API_BASE) and credential (JUDGE_API_KEY). Every field has a
// usable default; a missing config file means "all defaults".
struct Config {
  std::string data_dir;          // catalog + templates; default resolved at load
  std::string cache_dir = ".judgekit-cache";
  bool cache_enabled = true;

  std::string provider = "mock";  // "mock" or "http"
  std::string api_base;           // http provider endpoint
  std::string api_key_env = "JUDGE_API_KEY";

  std::string judge_model = "judge-default";
  std::vector<std::string> responder_models{"responder-a"};
  std::string scorer_model = "scorer-default";

  RatingSystem rating = RatingSystem::of(RatingKind::five_tier);
  std::vector<metrics::AgrParams> agr_params{{2, 2.0}, {1, 0.0}};

  gateway::RetryPolicy retry;
  std::uint64_t seed = 0;
  int parallelism = 4;

  static Config load(const std::optional<std::string>& path);

  ScenarioCatalog load_catalog() const;
  prompts::PromptLibrary load_prompts() const;
  std::shared_ptr<gateway::Gateway> make_gateway() const;
};

}  // namespace judgekit::harness
