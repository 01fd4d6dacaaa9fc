#include "judgekit/gateway/http_provider.hpp"

#include <httplib.h>
#include <json.hpp>

#include <cstdlib>
#include <utility>

#include "judgekit/errors.hpp"

namespace judgekit::gateway {

namespace {

using json = nlohmann::json;

std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
  bool http = base_url.rfind("http://", 0) == 0;
  bool https = base_url.rfind("https://", 0) == 0;
  if (!http && !https)
    raise(ErrorCode::ConfigError, "API base must start with http:// or https://, got: " + base_url);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (https)
    raise(ErrorCode::ConfigError, "this build has no TLS support; use an http:// API base");
#endif
  std::size_t host_begin = base_url.find("//") + 2;
  std::size_t path_begin = base_url.find('/', host_begin);
  if (path_begin == std::string::npos) return {base_url, ""};
  std::string prefix = base_url.substr(path_begin);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base_url.substr(0, path_begin), prefix};
}

[[noreturn]] void raise_for_status(int status, const std::string& body) {
  std::string detail = "HTTP " + std::to_string(status) +
                       (body.empty() ? "" : ": " + body.substr(0, 200));
  if (status == 401 || status == 403) raise(ErrorCode::AuthError, detail);
  if (status == 429) raise(ErrorCode::RateLimited, detail);
  if (status == 408 || (status >= 500 && status <= 599)) raise(ErrorCode::TimedOut, detail);
  raise(ErrorCode::ProtocolError, detail);
}

json parse_body(const std::string& body) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded())
    raise(ErrorCode::ProtocolError, "response body is not JSON: " + body.substr(0, 200));
  return parsed;
}

}  // namespace

HttpProvider::HttpProvider(std::string base_url, std::string api_key, int timeout_seconds)
    : api_key_(std::move(api_key)), timeout_seconds_(timeout_seconds) {
  auto [scheme_host, prefix] = split_base_url(base_url);
  scheme_host_ = std::move(scheme_host);
  path_prefix_ = std::move(prefix);
}

HttpProvider HttpProvider::from_env() {
  const char* base = std::getenv("JUDGE_API_BASE");
  if (base == nullptr || *base == '\0')
    raise(ErrorCode::ConfigError, "JUDGE_API_BASE is not set");
  const char* key = std::getenv("JUDGE_API_KEY");
  return HttpProvider(base, key ? key : "");
}

std::string HttpProvider::complete(const ChatRequest& request) {
  json body = {
      {"model", request.model},
      {"messages", json::array()},
      {"temperature", request.temperature},
      {"max_tokens", request.max_tokens},
  };
  for (const ChatMessage& message : request.messages)
    body["messages"].push_back({{"role", message.role}, {"content", message.content}});

  httplib::Client client(scheme_host_);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  client.set_write_timeout(timeout_seconds_, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  auto result = client.Post(path_prefix_ + "/chat/completions", headers, body.dump(),
                            "application/json");
  if (!result)
    raise(ErrorCode::TimedOut, "transport failure: " + httplib::to_string(result.error()));
  if (result->status != 200) raise_for_status(result->status, result->body);

  json parsed = parse_body(result->body);
  if (!parsed.contains("choices") || !parsed["choices"].is_array() || parsed["choices"].empty())
    raise(ErrorCode::ProtocolError, "completion body carries no choices");
  const json& first = parsed["choices"][0];
  if (!first.contains("message") || !first["message"].contains("content") ||
      !first["message"]["content"].is_string())
    raise(ErrorCode::ProtocolError, "completion choice carries no message content");
  return first["message"]["content"].get<std::string>();
}

std::vector<TokenScore> HttpProvider::score_tokens(const std::string& text,
                                                   const std::optional<std::string>& condition,
                                                   const std::string& model) {
  std::string prompt = condition ? *condition + text : text;
  json body = {
      {"model", model},
      {"prompt", prompt},
      {"max_tokens", 0},
      {"echo", true},
      {"logprobs", 0},
  };

  httplib::Client client(scheme_host_);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  client.set_write_timeout(timeout_seconds_, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  auto result = client.Post(path_prefix_ + "/completions", headers, body.dump(),
                            "application/json");
  if (!result)
    raise(ErrorCode::TimedOut, "transport failure: " + httplib::to_string(result.error()));
  if (result->status != 200) raise_for_status(result->status, result->body);

  json parsed = parse_body(result->body);
  if (!parsed.contains("choices") || !parsed["choices"].is_array() || parsed["choices"].empty())
    raise(ErrorCode::ProtocolError, "scoring body carries no choices");
  const json& first = parsed["choices"][0];
  if (!first.contains("logprobs") || first["logprobs"].is_null())
    raise(ErrorCode::UnsupportedByProvider, "backend returned no logprobs for echoed prompt");
  const json& logprobs = first["logprobs"];
  if (!logprobs.contains("tokens") || !logprobs.contains("token_logprobs"))
    raise(ErrorCode::ProtocolError, "logprobs block lacks tokens or token_logprobs");

  const json& tokens = logprobs["tokens"];
  const json& values = logprobs["token_logprobs"];
  if (!tokens.is_array() || !values.is_array() || tokens.size() != values.size())
    raise(ErrorCode::ProtocolError, "logprobs arrays are missing or misaligned");

  // When a condition prefix was sent, keep only tokens that start inside the
  // scored text; without offsets all tokens are assumed to be the text's.
  std::size_t keep_from = 0;
  if (condition && logprobs.contains("text_offset") && logprobs["text_offset"].is_array()) {
    const json& offsets = logprobs["text_offset"];
    if (offsets.size() != tokens.size())
      raise(ErrorCode::ProtocolError, "text_offset array is misaligned");
    while (keep_from < offsets.size() &&
           offsets[keep_from].get<long long>() < static_cast<long long>(condition->size()))
      ++keep_from;
  }

  std::vector<TokenScore> scores;
  for (std::size_t i = keep_from; i < tokens.size(); ++i) {
    TokenScore score;
    score.token = tokens[i].is_string() ? tokens[i].get<std::string>() : tokens[i].dump();
    score.logprob = values[i].is_null() ? 0.0 : values[i].get<double>();
    scores.push_back(std::move(score));
  }
  return scores;
}

}  // namespace judgekit::gateway
