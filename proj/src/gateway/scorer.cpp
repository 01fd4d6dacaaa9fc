#include "judgekit/gateway/scorer.hpp"

#include <cmath>

#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::gateway {

const std::string BigramScorer::kStartContext = "<s>";

std::vector<std::string> whitespace_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (detail::is_space(c)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

double checked_log(double probability, const std::string& token) {
  if (probability <= 0.0 || probability > 1.0)
    raise(ErrorCode::ConfigError,
          "probability for token '" + token + "' must be in (0, 1], got " +
              std::to_string(probability));
  return std::log(probability);
}

}  // namespace

std::vector<TokenScore> GatewayScorer::score(const std::string& text,
                                             const std::optional<std::string>& condition) {
  if (detail::trim(text).empty()) raise(ErrorCode::EmptyText, "nothing to score in empty text");
  return gateway_->score_tokens(text, condition, model_);
}

std::vector<TokenScore> ConstantScorer::score(const std::string& text,
                                              const std::optional<std::string>& condition) {
  (void)condition;
  if (logprob_ > 0.0)
    raise(ErrorCode::ConfigError, "constant logprob must be <= 0, got " + std::to_string(logprob_));
  std::vector<std::string> tokens = whitespace_tokens(text);
  if (tokens.empty()) raise(ErrorCode::EmptyText, "nothing to score in empty text");
  std::vector<TokenScore> scores;
  scores.reserve(tokens.size());
  for (std::string& token : tokens) scores.push_back({std::move(token), logprob_});
  return scores;
}

std::vector<TokenScore> UnigramScorer::score(const std::string& text,
                                             const std::optional<std::string>& condition) {
  (void)condition;
  std::vector<std::string> tokens = whitespace_tokens(text);
  if (tokens.empty()) raise(ErrorCode::EmptyText, "nothing to score in empty text");
  std::vector<TokenScore> scores;
  scores.reserve(tokens.size());
  for (std::string& token : tokens) {
    auto hit = probabilities_.find(token);
    double p = hit != probabilities_.end() ? hit->second : unknown_prob_;
    double logprob = checked_log(p, token);
    scores.push_back({std::move(token), logprob});
  }
  return scores;
}

std::vector<TokenScore> BigramScorer::score(const std::string& text,
                                            const std::optional<std::string>& condition) {
  std::vector<std::string> tokens = whitespace_tokens(text);
  if (tokens.empty()) raise(ErrorCode::EmptyText, "nothing to score in empty text");

  std::string context = kStartContext;
  if (condition) {
    std::vector<std::string> condition_tokens = whitespace_tokens(*condition);
    if (!condition_tokens.empty()) context = std::move(condition_tokens.back());
  }

  std::vector<TokenScore> scores;
  scores.reserve(tokens.size());
  for (std::string& token : tokens) {
    auto hit = probabilities_.find({context, token});
    double p = hit != probabilities_.end() ? hit->second : unknown_prob_;
    double logprob = checked_log(p, token);
    context = token;
    scores.push_back({std::move(token), logprob});
  }
  return scores;
}

}  // namespace judgekit::gateway
