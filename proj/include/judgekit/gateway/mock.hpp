#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "judgekit/gateway/provider.hpp"

namespace judgekit::gateway {

// Deterministic in-process provider: recognizes the prompt family it is
// given (graded / pairwise / classification / questioning / quiz) and emits a
// format-conforming reply derived purely from (seed, prompt, request id).
// The same inputs always produce the same bytes, which makes every pipeline
// built on it replayable. Tests can pin exact replies per prompt and script
// failures for retry-path coverage.
class MockProvider : public Provider {
 public:
  explicit MockProvider(std::uint64_t seed = 0) : seed_(seed) {}

  std::string complete(const ChatRequest& request) override;
  std::vector<TokenScore> score_tokens(const std::string& text,
                                       const std::optional<std::string>& condition,
                                       const std::string& model) override;
  bool supports_scoring() const override { return true; }

  // Exact reply for a specific prompt (keyed by content hash).
  void pin_reply(const ChatRequest& request, std::string reply);

  enum class ScriptedFailure { throttled, timed_out, protocol, auth };

  // Failures consumed first-in-first-out, one per complete() call, before any
  // reply is produced. An empty queue means calls succeed.
  void script_failures(std::vector<ScriptedFailure> failures);

  // Every request for `model` fails with the given kind (e.g. a dead backend).
  void fail_model(const std::string& model, ScriptedFailure kind);

  // Artificial per-call latency; lets tests observe request overlap.
  void set_latency(std::chrono::milliseconds latency) { latency_ = latency; }

  int calls() const { return calls_.load(); }
  int max_in_flight_seen() const { return max_in_flight_.load(); }

 private:
  std::string synthesize(const ChatRequest& request);

  std::uint64_t seed_;
  std::map<std::uint64_t, std::string> pinned_;
  std::vector<ScriptedFailure> scripted_;
  std::map<std::string, ScriptedFailure> failing_models_;
  std::chrono::milliseconds latency_{0};
  std::mutex mutex_;
  std::atomic<int> calls_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
};

}  // namespace judgekit::gateway
