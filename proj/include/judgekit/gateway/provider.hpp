#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace judgekit::gateway {

struct ChatMessage {
  std::string role;
  std::string content;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  int max_tokens = 4096;
  // Caller-chosen idempotency key; retries reuse it unchanged, and a gateway
  // never re-issues a request id it has already completed.
  std::string request_id;

  // Hash over model + messages; the content-addressed cache key.
  std::uint64_t content_hash() const;
};

struct TokenScore {
  std::string token;
  double logprob = 0.0;  // natural log, <= 0
};

// One model backend. Implementations throw Error with RateLimited /
// TimedOut (transient), AuthError / ProtocolError (fatal), or
// UnsupportedByProvider (scoring not available).
class Provider {
 public:
  virtual ~Provider() = default;

  virtual std::string complete(const ChatRequest& request) = 0;

  // Per-token log-likelihoods of `text`, optionally conditioned on a prefix.
  virtual std::vector<TokenScore> score_tokens(const std::string& text,
                                               const std::optional<std::string>& condition,
                                               const std::string& model) = 0;

  virtual bool supports_scoring() const { return false; }
};

}  // namespace judgekit::gateway
