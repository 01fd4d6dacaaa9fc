#include "judgekit/gateway/mock.hpp"

#include <json.hpp>

#include <algorithm>
#include <thread>

#include "judgekit/detail/hash.hpp"
#include "judgekit/detail/rng.hpp"
#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/verdict.hpp"

namespace judgekit::gateway {

namespace {

[[noreturn]] void throw_failure(MockProvider::ScriptedFailure kind) {
  switch (kind) {
    case MockProvider::ScriptedFailure::throttled:
      raise(ErrorCode::RateLimited, "mock backend throttled the request");
    case MockProvider::ScriptedFailure::timed_out:
      raise(ErrorCode::TimedOut, "mock backend timed out");
    case MockProvider::ScriptedFailure::protocol:
      raise(ErrorCode::ProtocolError, "mock backend returned garbage");
    case MockProvider::ScriptedFailure::auth:
      raise(ErrorCode::AuthError, "mock backend rejected the credentials");
  }
  raise(ErrorCode::ProtocolError, "mock backend failed");
}

const std::string& prompt_of(const ChatRequest& request) {
  for (auto it = request.messages.rbegin(); it != request.messages.rend(); ++it)
    if (it->role == "user") return it->content;
  if (request.messages.empty()) raise(ErrorCode::EmptyInput, "mock request carries no messages");
  return request.messages.back().content;
}

// First integer immediately following `marker`; nullopt when absent.
std::optional<long long> int_after(const std::string& text, const std::string& marker) {
  std::size_t pos = text.find(marker);
  if (pos == std::string::npos) return std::nullopt;
  pos += marker.size();
  std::size_t end = pos;
  while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
  if (end == pos) return std::nullopt;
  return std::stoll(text.substr(pos, end - pos));
}

// Rating bounds as printed in a graded skeleton: "lo-hi" or "lo and hi".
std::pair<int, int> score_bounds(const std::string& prompt) {
  const std::string marker = "[[a score between ";
  std::size_t pos = prompt.find(marker);
  if (pos == std::string::npos) return {1, 5};
  pos += marker.size();
  std::size_t close = prompt.find("]]", pos);
  if (close == std::string::npos) return {1, 5};
  std::string body = prompt.substr(pos, close - pos);
  std::string separator = body.find(" and ") != std::string::npos ? " and " : "-";
  std::size_t cut = body.find(separator);
  if (cut == std::string::npos) return {1, 5};
  try {
    int lo = std::stoi(body.substr(0, cut));
    int hi = std::stoi(body.substr(cut + separator.size()));
    if (lo < hi) return {lo, hi};
  } catch (const std::exception&) {
  }
  return {1, 5};
}

// Display names from a numbered "1. Name: description" listing.
std::vector<std::string> listed_names(const std::string& prompt) {
  std::vector<std::string> names;
  for (const auto& span : detail::split_lines(prompt)) {
    std::string_view line{prompt.data() + span.begin, span.end - span.begin};
    std::size_t digits = 0;
    while (digits < line.size() && line[digits] >= '0' && line[digits] <= '9') ++digits;
    if (digits == 0 || digits + 1 >= line.size() || line[digits] != '.' || line[digits + 1] != ' ')
      continue;
    std::string_view rest = line.substr(digits + 2);
    std::size_t colon = rest.find(": ");
    if (colon == std::string::npos || colon == 0) continue;
    names.emplace_back(rest.substr(0, colon));
  }
  return names;
}

const char* kStrengthPhrases[] = {
    "The response follows the requested structure closely",
    "Key facts are stated accurately",
    "The wording stays clear and easy to follow",
    "Every part of the instruction is addressed",
};

const char* kWeaknessPhrases[] = {
    "Some supporting detail is missing",
    "The phrasing turns repetitive in places",
    "Minor formatting slips reduce readability",
    "One step of the explanation is left implicit",
};

const char* kRationalePhrases[] = {
    "Accuracy of the core claims",
    "Completeness relative to the instruction",
    "Clarity and organization of the answer",
    "Fit between tone and the requested style",
};

const char* kLevels[] = {"easy", "medium", "difficult"};

std::string graded_reply(detail::Rng& rng, const std::string& prompt) {
  auto [lo, hi] = score_bounds(prompt);
  GradedVerdict verdict;
  verdict.overall = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  std::size_t strengths = 1 + rng.below(2);
  std::size_t weaknesses = 1 + rng.below(2);
  for (std::size_t i = 0; i < strengths; ++i) {
    int score = std::min(hi, verdict.overall + static_cast<int>(rng.below(2)));
    verdict.strengths.push_back({kStrengthPhrases[rng.below(4)], score});
  }
  for (std::size_t i = 0; i < weaknesses; ++i) {
    int score = std::max(lo, verdict.overall - static_cast<int>(rng.below(2)));
    verdict.weaknesses.push_back({kWeaknessPhrases[rng.below(4)], score});
  }
  return render_graded_verdict(verdict);
}

std::string pairwise_reply(detail::Rng& rng, const std::string& prompt) {
  auto [lo, hi] = score_bounds(prompt);
  PairwiseVerdict verdict;
  switch (rng.below(3)) {
    case 0: {
      verdict.winner = PairwiseWinner::response_1;
      verdict.score_1 = lo + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo)));
      verdict.score_2 =
          lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(verdict.score_1 - lo)));
      break;
    }
    case 1: {
      verdict.winner = PairwiseWinner::response_2;
      verdict.score_2 = lo + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo)));
      verdict.score_1 =
          lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(verdict.score_2 - lo)));
      break;
    }
    default: {
      verdict.winner = PairwiseWinner::tie;
      verdict.score_1 = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
      verdict.score_2 = verdict.score_1;
      break;
    }
  }
  std::size_t reasons = 1 + rng.below(2);
  for (std::size_t i = 0; i < reasons; ++i) {
    PairwiseRationale reason;
    reason.text = kRationalePhrases[rng.below(4)];
    reason.score_1 = std::clamp(verdict.score_1 + static_cast<int>(rng.below(2)) - 1, lo, hi);
    reason.score_2 = std::clamp(verdict.score_2 + static_cast<int>(rng.below(2)) - 1, lo, hi);
    verdict.rationale.push_back(reason);
  }
  return render_pairwise_verdict(verdict);
}

std::string classification_reply(detail::Rng& rng, const std::string& prompt) {
  std::vector<std::string> names = listed_names(prompt);
  if (names.empty()) return "default";
  return names[rng.below(names.size())];
}

std::string questioning_reply(detail::Rng& rng, const std::string& prompt) {
  // Scenario name from the requirements block.
  std::string scenario = "the scenario";
  if (auto name_pos = prompt.find("Name: "); name_pos != std::string::npos) {
    std::size_t end = prompt.find('\n', name_pos);
    scenario = prompt.substr(name_pos + 6, end - (name_pos + 6));
  }
  if (prompt.find("[insufficient]") != std::string::npos)
    return "Sorry, this article does not contain enough information related to " + scenario +
           " to generate relevant questions and answers.";

  long long batch = int_after(prompt, "Please generate ").value_or(5);
  std::string out;
  for (long long i = 0; i < batch; ++i) {
    std::string tag = detail::to_hex(rng.next()).substr(0, 8);
    if (!out.empty()) out += "\n\n";
    out += "QUESTION: According to the reference text, what does point " + tag +
           " imply for " + scenario + "?\n";
    out += "ANSWER: The text explains that point " + tag +
           " settles the matter directly; the key detail is restated verbatim.\n";
    out += "LEVEL: " + std::string(kLevels[rng.below(3)]) + "\n";
    out += "[END OF QA PAIR]";
  }
  return out;
}

std::string quiz_reply(detail::Rng& rng, const std::string& prompt) {
  using ordered_json = nlohmann::ordered_json;
  std::string out;
  auto emit = [&out](const ordered_json& line) {
    if (!out.empty()) out += "\n";
    out += line.dump();
  };

  if (prompt.find("proficiency in mathematics") != std::string::npos) {
    long long count = int_after(prompt, "Please help me generate ").value_or(10);
    for (long long i = 0; i < count; ++i) {
      long long a = 2 + rng.below(8), b = 1 + rng.below(99), c = 1 + rng.below(99);
      emit(ordered_json{{"question", "Solve for x: " + std::to_string(a) + "x + " +
                                         std::to_string(b) + " = " + std::to_string(c) + "."},
                        {"level", kLevels[rng.below(3)]},
                        {"subject", "algebra"}});
    }
  } else if (prompt.find("programming or code analysis questions") != std::string::npos) {
    long long count = int_after(prompt, "please design ").value_or(10);
    for (long long i = 0; i < count; ++i) {
      std::string tag = detail::to_hex(rng.next()).substr(0, 8);
      emit(ordered_json{{"question", "Trace the loop in snippet " + tag +
                                         " and fix the off-by-one error in its exit condition."},
                        {"company", "the hiring company"},
                        {"level", kLevels[rng.below(3)]},
                        {"topic", "code analysis"}});
    }
  } else {
    long long count = int_after(prompt, "Please prepare ").value_or(10);
    for (long long i = 0; i < count; ++i) {
      std::string tag = detail::to_hex(rng.next()).substr(0, 8);
      emit(ordered_json{{"question", "Summarize the passage's main argument about topic " + tag +
                                         " in two sentences."},
                        {"answer", "The passage argues that topic " + tag +
                                       " hinges on the evidence presented early on."},
                        {"task", "summary"}});
    }
  }
  return out;
}

}  // namespace

std::string MockProvider::complete(const ChatRequest& request) {
  int now = ++in_flight_;
  int seen = max_in_flight_.load();
  while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
  }
  calls_.fetch_add(1);
  struct Leave {
    std::atomic<int>& gauge;
    ~Leave() { --gauge; }
  } leave{in_flight_};

  if (latency_.count() > 0) std::this_thread::sleep_for(latency_);

  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto dead = failing_models_.find(request.model);
    if (dead != failing_models_.end()) throw_failure(dead->second);
    if (!scripted_.empty()) {
      ScriptedFailure kind = scripted_.front();
      scripted_.erase(scripted_.begin());
      throw_failure(kind);
    }
    auto pinned = pinned_.find(request.content_hash());
    if (pinned != pinned_.end()) return pinned->second;
  }
  return synthesize(request);
}

void MockProvider::pin_reply(const ChatRequest& request, std::string reply) {
  std::lock_guard<std::mutex> lock(mutex_);
  pinned_[request.content_hash()] = std::move(reply);
}

void MockProvider::script_failures(std::vector<ScriptedFailure> failures) {
  std::lock_guard<std::mutex> lock(mutex_);
  scripted_ = std::move(failures);
}

void MockProvider::fail_model(const std::string& model, ScriptedFailure kind) {
  std::lock_guard<std::mutex> lock(mutex_);
  failing_models_[model] = kind;
}

std::string MockProvider::synthesize(const ChatRequest& request) {
  const std::string& prompt = prompt_of(request);
  detail::Rng rng(
      detail::mix(detail::mix(seed_, request.content_hash()),
                  request.request_id.empty() ? 0 : detail::fnv1a64(request.request_id)));

  if (prompt.find(kMarkerTie) != std::string::npos) return pairwise_reply(rng, prompt);
  if (prompt.find("I believe the overall rating of this response is") != std::string::npos)
    return graded_reply(rng, prompt);
  if (prompt.find("Please directly provide the name of the scenario") != std::string::npos)
    return classification_reply(rng, prompt);
  if (prompt.find("[END OF QA PAIR]") != std::string::npos) return questioning_reply(rng, prompt);
  if (prompt.find("jsonl format") != std::string::npos) return quiz_reply(rng, prompt);
  return "Acknowledged. [mock reply " + detail::to_hex(rng.next()).substr(0, 12) + "]";
}

std::vector<TokenScore> MockProvider::score_tokens(const std::string& text,
                                                   const std::optional<std::string>& condition,
                                                   const std::string& model) {
  calls_.fetch_add(1);
  std::vector<TokenScore> scores;
  std::uint64_t context =
      detail::mix(seed_, condition ? detail::fnv1a64(*condition) : 0x517f1e1dull);
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    std::uint64_t h = detail::mix(detail::fnv1a64(current, detail::fnv1a64(model)), context);
    double logprob = -0.05 - static_cast<double>(h % 2000) / 1000.0;
    scores.push_back({current, logprob});
    current.clear();
  };
  for (char c : text) {
    if (detail::is_space(c))
      flush();
    else
      current.push_back(c);
  }
  flush();
  if (scores.empty()) raise(ErrorCode::EmptyText, "nothing to score in empty text");
  return scores;
}

}  // namespace judgekit::gateway
