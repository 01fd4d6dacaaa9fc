#include "judgekit/gateway/gateway.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <utility>

#include "judgekit/detail/hash.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/gateway/cache.hpp"

namespace judgekit::gateway {

void Semaphore::acquire() {
  std::unique_lock<std::mutex> lock(mutex_);
  cv_.wait(lock, [this] { return count_ > 0; });
  --count_;
}

void Semaphore::release() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    ++count_;
  }
  cv_.notify_one();
}

namespace {

struct SemaphoreGuard {
  explicit SemaphoreGuard(Semaphore& semaphore) : semaphore_(semaphore) { semaphore_.acquire(); }
  ~SemaphoreGuard() { semaphore_.release(); }
  SemaphoreGuard(const SemaphoreGuard&) = delete;
  SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

 private:
  Semaphore& semaphore_;
};

bool is_transient(ErrorCode code) {
  return code == ErrorCode::RateLimited || code == ErrorCode::TimedOut;
}

}  // namespace

Gateway::Gateway(std::shared_ptr<Provider> provider, RetryPolicy policy,
                 std::optional<std::string> cache_dir, Sleeper sleeper)
    : provider_(std::move(provider)),
      policy_(policy),
      cache_dir_(std::move(cache_dir)),
      sleeper_(std::move(sleeper)),
      in_flight_(policy.max_in_flight) {
  if (!provider_) raise(ErrorCode::ConfigError, "gateway needs a provider");
  if (policy_.max_attempts < 1)
    raise(ErrorCode::ConfigError, "retry policy needs at least one attempt");
  if (policy_.max_in_flight < 1)
    raise(ErrorCode::ConfigError, "retry policy needs an in-flight budget of at least one");
  if (!sleeper_)
    sleeper_ = [](std::chrono::milliseconds delay) { std::this_thread::sleep_for(delay); };
}

std::string Gateway::complete_with_retry(const ChatRequest& request) {
  std::chrono::milliseconds delay = policy_.base_delay;
  for (int attempt = 1;; ++attempt) {
    try {
      SemaphoreGuard guard(in_flight_);
      return provider_->complete(request);
    } catch (const Error& error) {
      if (!is_transient(error.code()) || attempt >= policy_.max_attempts) throw;
    }
    sleeper_(delay);
    delay = std::chrono::milliseconds(
        static_cast<long long>(std::llround(static_cast<double>(delay.count()) * policy_.multiplier)));
  }
}

std::string Gateway::chat_complete(const ChatRequest& request) {
  if (request.model.empty()) raise(ErrorCode::ConfigError, "request needs a model");
  if (request.messages.empty()) raise(ErrorCode::EmptyInput, "request needs at least one message");

  if (!request.request_id.empty()) {
    std::lock_guard<std::mutex> lock(idempotency_mutex_);
    auto hit = completed_by_request_id_.find(request.request_id);
    if (hit != completed_by_request_id_.end()) return hit->second;
  }

  // The cache key carries the request id (when set) on top of the content
  // hash: deliberate same-content requests — e.g. repeated synthesis batches —
  // are distinct completions and must not collapse into one cached reply.
  std::uint64_t cache_key = request.content_hash();
  if (!request.request_id.empty())
    cache_key = detail::mix(cache_key, detail::fnv1a64(request.request_id));

  std::optional<ResponseCache> cache;
  if (cache_dir_) {
    cache.emplace(*cache_dir_);
    if (auto cached = cache->get(request.model, cache_key)) {
      if (!request.request_id.empty()) {
        std::lock_guard<std::mutex> lock(idempotency_mutex_);
        completed_by_request_id_.emplace(request.request_id, *cached);
      }
      return *cached;
    }
  }

  std::string content = complete_with_retry(request);

  if (cache) cache->put(request.model, cache_key, content);
  if (!request.request_id.empty()) {
    std::lock_guard<std::mutex> lock(idempotency_mutex_);
    completed_by_request_id_.emplace(request.request_id, content);
  }
  return content;
}

std::vector<CompletionOutcome> Gateway::chat_complete_many(const std::vector<ChatRequest>& requests,
                                                           int parallelism) {
  std::vector<CompletionOutcome> outcomes(requests.size());
  for (std::size_t i = 0; i < requests.size(); ++i)
    outcomes[i].request_id = requests[i].request_id;
  if (requests.empty()) return outcomes;

  int workers = parallelism > 0 ? parallelism : policy_.max_in_flight;
  workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), requests.size()));

  std::atomic<std::size_t> cursor{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= requests.size()) return;
      try {
        outcomes[i].content = chat_complete(requests[i]);
      } catch (const std::exception& error) {
        outcomes[i].error = error.what();
      }
    }
  };

  if (workers <= 1) {
    run();
    return outcomes;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) threads.emplace_back(run);
  for (std::thread& thread : threads) thread.join();
  return outcomes;
}

std::vector<TokenScore> Gateway::score_tokens(const std::string& text,
                                              const std::optional<std::string>& condition,
                                              const std::string& model) {
  if (!provider_->supports_scoring())
    raise(ErrorCode::UnsupportedByProvider, "provider cannot score tokens");
  SemaphoreGuard guard(in_flight_);
  return provider_->score_tokens(text, condition, model);
}

}  // namespace judgekit::gateway
