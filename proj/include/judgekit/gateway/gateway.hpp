#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/gateway/provider.hpp"

namespace judgekit::gateway {

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds base_delay{200};
  double multiplier = 2.0;
  int max_in_flight = 4;
};

// Bounds the number of provider calls running at once.
class Semaphore {
 public:
  explicit Semaphore(int count) : count_(count) {}
  void acquire();
  void release();

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int count_;
};

struct CompletionOutcome {
  std::string request_id;
  std::optional<std::string> content;
  std::optional<std::string> error;  // error-code name + message

  bool ok() const { return content.has_value(); }
};

// Front door for all model traffic: retry with exponential backoff on
// transient failures (fatal ones surface immediately), a concurrency cap, an
// in-memory request-id idempotency table, and an optional on-disk response
// cache keyed by model and prompt hash (plus the request id when one is set,
// so deliberate same-prompt requests stay distinct). The delay function is
// injectable so tests can observe backoff instead of sleeping through it.
class Gateway {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  Gateway(std::shared_ptr<Provider> provider, RetryPolicy policy = {},
          std::optional<std::string> cache_dir = std::nullopt, Sleeper sleeper = nullptr);

  std::string chat_complete(const ChatRequest& request);

  // Runs requests on up to `parallelism` worker threads (0 = the policy's
  // in-flight cap); outcomes line up with the input order, and per-request
  // failures are captured rather than thrown.
  std::vector<CompletionOutcome> chat_complete_many(const std::vector<ChatRequest>& requests,
                                                    int parallelism = 0);

  std::vector<TokenScore> score_tokens(const std::string& text,
                                       const std::optional<std::string>& condition,
                                       const std::string& model);

  const RetryPolicy& policy() const { return policy_; }

 private:
  std::string complete_with_retry(const ChatRequest& request);

  std::shared_ptr<Provider> provider_;
  RetryPolicy policy_;
  std::optional<std::string> cache_dir_;
  Sleeper sleeper_;
  Semaphore in_flight_;
  std::mutex idempotency_mutex_;
  std::map<std::string, std::string> completed_by_request_id_;
};

}  // namespace judgekit::gateway
