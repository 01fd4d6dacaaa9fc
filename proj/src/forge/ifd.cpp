#include "judgekit/forge/ifd.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::forge {

namespace {

double total_loss(const std::vector<gateway::TokenScore>& scores) {
  double loss = 0.0;
  for (const gateway::TokenScore& score : scores) loss -= score.logprob;
  return loss;
}

}  // namespace

IfdScore ifd_score(const std::string& question, const std::string& answer,
                   gateway::TokenScorer& scorer, const std::string& record_id,
                   const std::string& scenario) {
  if (detail::trim(answer).empty())
    raise(ErrorCode::EmptyText, "record '" + record_id + "' has an empty answer");

  IfdScore score;
  score.record_id = record_id;
  score.scenario = scenario;
  try {
    score.conditioned_loss = total_loss(scorer.score(answer, question));
    score.unconditioned_loss = total_loss(scorer.score(answer, std::nullopt));
  } catch (const Error& error) {
    raise(ErrorCode::ScorerFailure,
          "scorer failed on record '" + record_id + "': " + error.what());
  } catch (const std::exception& error) {
    raise(ErrorCode::ScorerFailure,
          "scorer failed on record '" + record_id + "': " + error.what());
  }

  if (score.unconditioned_loss < 1e-12)
    raise(ErrorCode::DegenerateAnswer,
          "record '" + record_id + "' has zero unconditioned loss; the ratio is undefined");
  score.ifd = score.conditioned_loss / score.unconditioned_loss;
  return score;
}

void fill_scenario_z(std::vector<IfdScore>& scores) {
  std::map<std::string, std::vector<std::size_t>> by_scenario;
  for (std::size_t i = 0; i < scores.size(); ++i)
    by_scenario[scores[i].scenario].push_back(i);

  for (const auto& [scenario, members] : by_scenario) {
    if (members.size() < 2) {
      for (std::size_t index : members) scores[index].scenario_z = 0.0;
      continue;
    }
    double mean = 0.0;
    for (std::size_t index : members) mean += scores[index].ifd;
    mean /= static_cast<double>(members.size());
    double variance = 0.0;
    for (std::size_t index : members) {
      double diff = scores[index].ifd - mean;
      variance += diff * diff;
    }
    variance /= static_cast<double>(members.size() - 1);
    double std_dev = std::sqrt(variance);
    for (std::size_t index : members)
      scores[index].scenario_z = std_dev > 0.0 ? (scores[index].ifd - mean) / std_dev : 0.0;
  }
}

std::vector<std::string> select_by_ifd(const std::vector<IfdScore>& scores, std::size_t budget,
                                       const SelectionPolicy& policy) {
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].ifd > 1.0) continue;  // question made the answer harder: hallucination suspect
    if (policy.kind == SelectionPolicy::Kind::scenario_z &&
        scores[i].scenario_z > policy.z_threshold)
      continue;  // extreme within its scenario: mislabel suspect
    survivors.push_back(i);
  }
  if (survivors.empty())
    raise(ErrorCode::EmptyAfterFilter, "no records survive the difficulty filter");

  std::stable_sort(survivors.begin(), survivors.end(), [&scores](std::size_t a, std::size_t b) {
    return scores[a].ifd > scores[b].ifd;
  });
  if (survivors.size() > budget) survivors.resize(budget);

  std::vector<std::string> ids;
  ids.reserve(survivors.size());
  for (std::size_t index : survivors) ids.push_back(scores[index].record_id);
  return ids;
}

}  // namespace judgekit::forge
