#include "judgekit/forge/pairwise.hpp"

#include <utility>

#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/verdict.hpp"

namespace judgekit::forge {

namespace {

// Exchanges the "Response 1" / "Response 2" labels inside free text.
std::string swap_labels(std::string text) {
  detail::replace_all(text, "Response 1", "\x01");
  detail::replace_all(text, "Response 2", "Response 1");
  detail::replace_all(text, "\x01", "Response 2");
  return text;
}

std::string swap_prompt_bodies(const std::string& prompt) {
  const std::string first_marker = "[Response 1]: ";
  const std::string second_marker = "\n\n***\n\n[Response 2]: ";
  const std::string end_marker = "\n\n***\n\n[Data End]";

  std::size_t first = prompt.find(first_marker);
  std::size_t second = first == std::string::npos ? std::string::npos
                                                  : prompt.find(second_marker, first);
  std::size_t end = second == std::string::npos
                        ? std::string::npos
                        : prompt.find(end_marker, second + second_marker.size());
  if (end == std::string::npos)
    raise(ErrorCode::ParseFailure, "prompt does not carry the two pairwise response blocks");

  std::size_t first_begin = first + first_marker.size();
  std::size_t second_begin = second + second_marker.size();
  std::string body_1 = prompt.substr(first_begin, second - first_begin);
  std::string body_2 = prompt.substr(second_begin, end - second_begin);

  std::string out = prompt.substr(0, first_begin);
  out += body_2;
  out += second_marker;
  out += body_1;
  out += prompt.substr(end);
  return out;
}

}  // namespace

SftRecord mirror_pairwise_record(const SftRecord& record) {
  if (record.meta.mode != JudgeMode::pairwise)
    raise(ErrorCode::NotPairwise, "record '" + record.meta.record_id + "' is " +
                                      judge_mode_name(record.meta.mode) + ", not pairwise");

  RatingSystem rating = RatingSystem::of(record.meta.rating);
  PairwiseVerdict verdict = parse_pairwise_verdict(record.target, rating);

  PairwiseVerdict mirrored;
  mirrored.winner = verdict.winner == PairwiseWinner::response_1 ? PairwiseWinner::response_2
                    : verdict.winner == PairwiseWinner::response_2 ? PairwiseWinner::response_1
                                                                   : PairwiseWinner::tie;
  mirrored.score_1 = verdict.score_2;
  mirrored.score_2 = verdict.score_1;
  for (const PairwiseRationale& reason : verdict.rationale)
    mirrored.rationale.push_back({swap_labels(reason.text), reason.score_2, reason.score_1});

  SftRecord twin;
  twin.prompt = swap_prompt_bodies(record.prompt);
  twin.target = render_pairwise_verdict(mirrored);
  twin.spans = label_token_spans(twin.target, JudgeMode::pairwise, rating);
  twin.meta = record.meta;
  twin.meta.winner = mirrored.winner;
  const std::string suffix = "-swapped";
  if (twin.meta.record_id.size() >= suffix.size() &&
      twin.meta.record_id.compare(twin.meta.record_id.size() - suffix.size(), suffix.size(),
                                  suffix) == 0) {
    twin.meta.record_id.resize(twin.meta.record_id.size() - suffix.size());
  } else {
    twin.meta.record_id += suffix;
  }
  return twin;
}

std::vector<SftRecord> double_pairwise(const std::vector<SftRecord>& records) {
  std::vector<SftRecord> doubled;
  doubled.reserve(records.size() * 2);
  for (const SftRecord& record : records) {
    doubled.push_back(record);
    doubled.push_back(mirror_pairwise_record(record));
  }
  return doubled;
}

}  // namespace judgekit::forge
