#include "judgekit/forge/sft.hpp"

#include <algorithm>

#include "judgekit/detail/strings.hpp"
#include "judgekit/detail/verdict_scan.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/verdict.hpp"

namespace judgekit::forge {

const char* span_kind_name(SpanKind kind) { return kind == SpanKind::sft ? "sft" : "sim"; }

SpanKind span_kind_from_name(const std::string& name) {
  if (name == "sft") return SpanKind::sft;
  if (name == "sim") return SpanKind::sim;
  raise(ErrorCode::ConfigError, "unknown span kind: " + name);
}

std::vector<TokenSpan> label_token_spans(const std::string& target, JudgeMode mode,
                                         const RatingSystem& rating) {
  // The labeling only makes sense on a target that actually parses as judge
  // output for the mode; surface anything else as one error kind.
  try {
    if (mode == JudgeMode::pairwise)
      parse_pairwise_verdict(target, rating);
    else
      parse_graded_verdict(target, rating);
  } catch (const Error& error) {
    raise(ErrorCode::ParseFailure,
          std::string("target is not valid ") + judge_mode_name(mode) + " judge output: " +
              error.what());
  }

  std::vector<char> skeleton(target.size(), 0);
  auto mark = [&skeleton](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && i < skeleton.size(); ++i) skeleton[i] = 1;
  };

  const VerdictHeaders& headers = VerdictHeaders::defaults();
  std::vector<detail::LineSpan> lines = detail::split_lines(target);
  for (std::size_t index = 0; index < lines.size(); ++index) {
    std::string_view line{target.data() + lines[index].begin,
                          lines[index].end - lines[index].begin};
    if (index == 0) {
      mark(lines[index].begin, lines[index].end);  // the verdict line
      continue;
    }
    if (mode != JudgeMode::pairwise &&
        (detail::matches_any_header(line, headers.strengths) ||
         detail::matches_any_header(line, headers.weaknesses))) {
      mark(lines[index].begin, lines[index].end);
      continue;
    }
    std::size_t marker = detail::enum_marker_len(line);
    if (marker > 0) mark(lines[index].begin, lines[index].begin + marker);
  }

  for (const BracketToken& token : scan_bracket_tokens(target)) mark(token.begin, token.end);

  // Whitespace between two skeleton stretches belongs to the skeleton: it is
  // layout, not rationale.
  std::size_t i = 0;
  while (i < target.size()) {
    if (skeleton[i]) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    bool all_space = true;
    while (run_end < target.size() && !skeleton[run_end]) {
      if (!detail::is_space(target[run_end])) all_space = false;
      ++run_end;
    }
    if (all_space && i > 0 && run_end < target.size()) mark(i, run_end);
    i = run_end;
  }

  std::vector<TokenSpan> spans;
  std::size_t start = 0;
  for (std::size_t pos = 1; pos <= target.size(); ++pos) {
    if (pos == target.size() || skeleton[pos] != skeleton[start]) {
      spans.push_back({start, pos, skeleton[start] ? SpanKind::sft : SpanKind::sim});
      start = pos;
    }
  }
  validate_spans(spans, target.size());
  return spans;
}

void validate_spans(const std::vector<TokenSpan>& spans, std::size_t target_size) {
  if (spans.empty()) {
    if (target_size != 0)
      raise(ErrorCode::ParseFailure, "no spans for a non-empty target");
    return;
  }
  if (spans.front().start != 0)
    raise(ErrorCode::ParseFailure, "spans do not start at byte 0");
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].start >= spans[i].end)
      raise(ErrorCode::ParseFailure, "span " + std::to_string(i) + " is empty or inverted");
    if (i + 1 < spans.size() && spans[i].end != spans[i + 1].start)
      raise(ErrorCode::ParseFailure,
            "spans " + std::to_string(i) + " and " + std::to_string(i + 1) +
                " do not meet exactly");
  }
  if (spans.back().end != target_size)
    raise(ErrorCode::ParseFailure, "spans do not cover the target (end " +
                                       std::to_string(spans.back().end) + " of " +
                                       std::to_string(target_size) + ")");
}

}  // namespace judgekit::forge
