#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/gateway/gateway.hpp"
#include "judgekit/gateway/provider.hpp"

namespace judgekit::gateway {

// Anything that can assign per-token log-likelihoods to a text, optionally
// conditioned on a prefix. Scorers must return one entry per token with
// logprob <= 0; empty text raises EmptyText.
class TokenScorer {
 public:
  virtual ~TokenScorer() = default;
  virtual std::vector<TokenScore> score(const std::string& text,
                                        const std::optional<std::string>& condition) = 0;
};

// Scores through a gateway-managed provider.
class GatewayScorer : public TokenScorer {
 public:
  GatewayScorer(std::shared_ptr<Gateway> gateway, std::string model)
      : gateway_(std::move(gateway)), model_(std::move(model)) {}

  std::vector<TokenScore> score(const std::string& text,
                                const std::optional<std::string>& condition) override;

 private:
  std::shared_ptr<Gateway> gateway_;
  std::string model_;
};

// Same logprob for every whitespace token; conditioning is a no-op.
// Handy for arithmetic oracles.
class ConstantScorer : public TokenScorer {
 public:
  explicit ConstantScorer(double logprob) : logprob_(logprob) {}
  std::vector<TokenScore> score(const std::string& text,
                                const std::optional<std::string>& condition) override;

 private:
  double logprob_;
};

// Word-unigram model over a fixed probability table; conditioning is a no-op.
// Unknown words take `unknown_prob`.
class UnigramScorer : public TokenScorer {
 public:
  UnigramScorer(std::map<std::string, double> probabilities, double unknown_prob = 1e-6)
      : probabilities_(std::move(probabilities)), unknown_prob_(unknown_prob) {}

  std::vector<TokenScore> score(const std::string& text,
                                const std::optional<std::string>& condition) override;

 private:
  std::map<std::string, double> probabilities_;
  double unknown_prob_;
};

// Word-bigram model: P(w_i | w_{i-1}) from a fixed table. The first token's
// context is the condition's last word when a condition is given, else the
// start marker — so conditioning genuinely changes the scores.
class BigramScorer : public TokenScorer {
 public:
  static const std::string kStartContext;  // "<s>"

  BigramScorer(std::map<std::pair<std::string, std::string>, double> probabilities,
               double unknown_prob = 1e-6)
      : probabilities_(std::move(probabilities)), unknown_prob_(unknown_prob) {}

  std::vector<TokenScore> score(const std::string& text,
                                const std::optional<std::string>& condition) override;

 private:
  std::map<std::pair<std::string, std::string>, double> probabilities_;
  double unknown_prob_;
};

// Whitespace tokenization shared by the stub scorers.
std::vector<std::string> whitespace_tokens(const std::string& text);

}  // namespace judgekit::gateway
