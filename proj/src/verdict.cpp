#include "judgekit/verdict.hpp"

#include <algorithm>
#include <optional>

#include "judgekit/detail/strings.hpp"
#include "judgekit/detail/verdict_scan.hpp"
#include "judgekit/errors.hpp"

namespace judgekit {

namespace detail {

std::size_t enum_marker_len(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  const std::size_t start = i;

  if (i < line.size() && (line[i] == '-' || line[i] == '*')) {
    ++i;
    if (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      return i;
    }
    return 0;
  }

  std::size_t digits = 0;
  while (i < line.size() && line[i] >= '0' && line[i] <= '9' && digits < 4) {
    ++i;
    ++digits;
  }
  if (digits == 0 || i == start) return 0;
  if (i >= line.size() || (line[i] != '.' && line[i] != ')')) return 0;
  ++i;
  if (i >= line.size() || (line[i] != ' ' && line[i] != '\t')) return 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  return i;
}

std::string normalize_header_line(std::string_view line) {
  std::string norm = normalize_label(line);
  while (!norm.empty() && (norm.back() == ':' || norm.back() == '.')) norm.pop_back();
  while (!norm.empty() && norm.back() == ' ') norm.pop_back();
  return norm;
}

bool matches_any_header(std::string_view line, const std::vector<std::string>& headers) {
  const std::string norm = normalize_header_line(line);
  if (norm.empty()) return false;
  return std::find(headers.begin(), headers.end(), norm) != headers.end();
}

namespace {

bool is_blank(std::string_view line) { return trim(line).empty(); }

bool is_any_section_header(std::string_view line, const VerdictHeaders& headers) {
  return matches_any_header(line, headers.strengths) ||
         matches_any_header(line, headers.weaknesses);
}

}  // namespace

std::vector<ItemSpan> scan_items(std::string_view text, std::size_t from, std::size_t to,
                                 const VerdictHeaders& headers) {
  std::vector<ItemSpan> items;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (lines[li].begin < from || lines[li].begin >= to) continue;
    std::string_view line = text.substr(lines[li].begin, lines[li].end - lines[li].begin);
    const std::size_t marker = enum_marker_len(line);
    if (marker == 0) continue;

    ItemSpan item;
    item.begin = lines[li].begin;
    item.content_begin = lines[li].begin + marker;
    std::size_t last = li;
    for (std::size_t lj = li + 1; lj < lines.size() && lines[lj].begin < to; ++lj) {
      std::string_view next = text.substr(lines[lj].begin, lines[lj].end - lines[lj].begin);
      if (is_blank(next) || enum_marker_len(next) != 0 || is_any_section_header(next, headers))
        break;
      last = lj;
    }
    item.end = std::min<std::size_t>(lines[last].end, to);
    items.push_back(item);
  }
  return items;
}

std::string clean_item_text(std::string_view text, const ItemSpan& item,
                            const std::vector<BracketToken>& tokens) {
  std::string kept;
  kept.reserve(item.end - item.content_begin);
  std::size_t pos = item.content_begin;
  for (const auto& token : tokens) {
    if (token.begin < item.content_begin || token.begin >= item.end) continue;
    kept.append(text.substr(pos, token.begin - pos));
    pos = std::min(token.end, item.end);
  }
  kept.append(text.substr(pos, item.end - pos));

  std::string out;
  out.reserve(kept.size());
  bool pending_space = false;
  for (char c : kept) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

namespace {

using detail::ItemSpan;

std::optional<long> parse_integer(std::string_view content) {
  std::string_view s = detail::trim(content);
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return std::nullopt;
  long value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    value = value * 10 + (s[i] - '0');
    if (value > 1000000) return std::nullopt;  // scores are tiny; reject garbage
  }
  return negative ? -value : value;
}

void check_bounds(long value, const RatingSystem& rating) {
  if (value < rating.min || value > rating.max)
    raise(ErrorCode::OutOfRange, "score " + std::to_string(value) + " outside " +
                                     rating.range_text() + " (" + rating.name() + ")");
}

// Byte offset just past the first line that matches one of `headers`, at or
// after `from`; npos when absent.
struct HeaderHit {
  std::size_t line_begin = std::string_view::npos;
  std::size_t line_end = std::string_view::npos;  // past the newline
};

HeaderHit find_header(std::string_view text, const std::vector<detail::LineSpan>& lines,
                      const std::vector<std::string>& headers) {
  for (const auto& line : lines) {
    std::string_view content = text.substr(line.begin, line.end - line.begin);
    if (detail::matches_any_header(content, headers))
      return {line.begin, std::min(line.end + 1, text.size())};
  }
  return {};
}

}  // namespace

const VerdictHeaders& VerdictHeaders::defaults() {
  static const VerdictHeaders headers = [] {
    VerdictHeaders h;
    for (const char* s : {"strengths of the current response", "strengths of the current reply",
                          "advantages of the current response", "advantages of the current reply",
                          "current response strengths", "strengths"})
      h.strengths.push_back(s);
    for (const char* s :
         {"shortcomings of the current response", "shortcomings of the current reply",
          "weaknesses of the current response", "weaknesses of the current reply",
          "disadvantages of the current response", "disadvantages of the current reply",
          "current response weaknesses", "shortcomings", "weaknesses"})
      h.weaknesses.push_back(s);
    return h;
  }();
  return headers;
}

std::vector<BracketToken> scan_bracket_tokens(std::string_view text) {
  std::vector<BracketToken> tokens;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = text.find("[[", pos);
    if (open == std::string_view::npos) break;
    const std::size_t close = text.find("]]", open + 2);
    if (close == std::string_view::npos) break;  // unterminated: plain text
    tokens.push_back({std::string(text.substr(open + 2, close - open - 2)), open, close + 2});
    pos = close + 2;
  }
  return tokens;
}

GradedVerdict parse_graded_verdict(std::string_view raw, const RatingSystem& rating,
                                   const VerdictHeaders& headers) {
  const auto tokens = scan_bracket_tokens(raw);
  if (tokens.empty())
    raise(ErrorCode::MissingMarker, "no [[...]] score found in judge output");

  std::vector<long> values;
  values.reserve(tokens.size());
  for (const auto& token : tokens) {
    const auto value = parse_integer(token.content);
    if (!value)
      raise(ErrorCode::NotAnInteger, "bracketed value '" + token.content + "' is not an integer");
    check_bounds(*value, rating);
    values.push_back(*value);
  }

  GradedVerdict verdict;
  verdict.raw = std::string(raw);
  verdict.overall = static_cast<int>(values[0]);

  const auto lines = detail::split_lines(raw);
  const HeaderHit strengths_at = find_header(raw, lines, headers.strengths);
  const HeaderHit weaknesses_at = find_header(raw, lines, headers.weaknesses);

  // A section runs from past its header to the other section's header (in
  // whichever order the judge wrote them) or to the end of the text.
  auto section_stop = [&](const HeaderHit& own, const HeaderHit& other) {
    if (other.line_begin != std::string_view::npos && other.line_begin > own.line_end)
      return other.line_begin;
    return raw.size();
  };
  std::vector<ItemSpan> strength_items, weakness_items;
  if (strengths_at.line_end != std::string_view::npos)
    strength_items = detail::scan_items(raw, strengths_at.line_end,
                                        section_stop(strengths_at, weaknesses_at), headers);
  if (weaknesses_at.line_end != std::string_view::npos)
    weakness_items = detail::scan_items(raw, weaknesses_at.line_end,
                                        section_stop(weaknesses_at, strengths_at), headers);

  auto attach = [&](const std::vector<ItemSpan>& items, std::vector<ScoredItem>& out) {
    for (const auto& item : items) {
      for (std::size_t ti = 1; ti < tokens.size(); ++ti) {  // token 0 is the overall score
        if (tokens[ti].begin >= item.content_begin && tokens[ti].begin < item.end) {
          out.push_back({detail::clean_item_text(raw, item, tokens), static_cast<int>(values[ti])});
          break;  // one sub-score per item; extra integers are prose
        }
      }
    }
  };
  attach(strength_items, verdict.strengths);
  attach(weakness_items, verdict.weaknesses);
  return verdict;
}

namespace {

// 0 = response_1, 1 = response_2; npos-like -1 when no mention in range.
int last_label_mention(std::string_view text, std::size_t from, std::size_t to) {
  if (to <= from) return -1;
  std::string_view window = text.substr(from, to - from);
  const std::size_t r1 = window.rfind("Response 1");
  const std::size_t r2 = window.rfind("Response 2");
  if (r1 == std::string_view::npos && r2 == std::string_view::npos) return -1;
  if (r2 == std::string_view::npos) return 0;
  if (r1 == std::string_view::npos) return 1;
  return r1 > r2 ? 0 : 1;
}

}  // namespace

PairwiseVerdict parse_pairwise_verdict(std::string_view raw, const RatingSystem& rating) {
  struct MarkerHit {
    PairwiseWinner winner;
    std::size_t begin, end;
  };
  std::vector<MarkerHit> hits;
  auto probe = [&](std::string_view marker, PairwiseWinner winner) {
    const std::size_t at = raw.find(marker);
    if (at != std::string_view::npos) hits.push_back({winner, at, at + marker.size()});
  };
  probe(kMarkerResponse1, PairwiseWinner::response_1);
  probe(kMarkerResponse2, PairwiseWinner::response_2);
  probe(kMarkerTie, PairwiseWinner::tie);

  if (hits.empty())
    raise(ErrorCode::MissingMarker, "no pairwise decision marker found in judge output");
  if (hits.size() > 1)
    raise(ErrorCode::AmbiguousVerdict,
          "judge output contains " + std::to_string(hits.size()) + " distinct decision markers");

  PairwiseVerdict verdict;
  verdict.raw = std::string(raw);
  verdict.winner = hits[0].winner;

  const auto all_tokens = scan_bracket_tokens(raw);
  std::vector<std::pair<BracketToken, long>> scores;  // integer tokens after the marker
  for (const auto& token : all_tokens) {
    if (token.content == "Response 1 is better" || token.content == "Response 2 is better" ||
        token.content == "Both Responses are tied")
      continue;
    const auto value = parse_integer(token.content);
    if (!value)
      raise(ErrorCode::NotAnInteger, "bracketed value '" + token.content + "' is not an integer");
    check_bounds(*value, rating);
    if (token.begin >= hits[0].end) scores.push_back({token, *value});
  }
  if (scores.size() < 2)
    raise(ErrorCode::MissingMarker, "expected two overall scores after the decision marker");

  const auto& [token_a, value_a] = scores[0];
  const auto& [token_b, value_b] = scores[1];
  const int label_a = last_label_mention(raw, hits[0].end, token_a.begin);
  const int label_b = last_label_mention(raw, token_a.end, token_b.begin);
  if (label_a != -1 && label_b != -1 && label_a != label_b) {
    (label_a == 0 ? verdict.score_1 : verdict.score_2) = static_cast<int>(value_a);
    (label_b == 0 ? verdict.score_1 : verdict.score_2) = static_cast<int>(value_b);
  } else if (label_a != -1 && label_b == -1) {
    (label_a == 0 ? verdict.score_1 : verdict.score_2) = static_cast<int>(value_a);
    (label_a == 0 ? verdict.score_2 : verdict.score_1) = static_cast<int>(value_b);
  } else {
    verdict.score_1 = static_cast<int>(value_a);
    verdict.score_2 = static_cast<int>(value_b);
  }

  // Rationale items live after the two overall scores.
  const auto items =
      detail::scan_items(raw, token_b.end, raw.size(), VerdictHeaders::defaults());
  for (const auto& item : items) {
    std::vector<long> in_item;
    for (const auto& [token, value] : scores) {
      if (token.begin >= item.content_begin && token.begin < item.end) in_item.push_back(value);
      if (in_item.size() == 2) break;
    }
    if (in_item.size() == 2)
      verdict.rationale.push_back({detail::clean_item_text(raw, item, all_tokens),
                                   static_cast<int>(in_item[0]), static_cast<int>(in_item[1])});
  }
  return verdict;
}

std::string render_graded_verdict(const GradedVerdict& verdict) {
  auto flat = [](const std::string& text) {
    std::string out = text;
    for (char& c : out)
      if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    return out;
  };

  std::string out = "I believe the overall rating of this response is [[" +
                    std::to_string(verdict.overall) + "]], and the reasons are as follows.";
  if (!verdict.strengths.empty()) {
    out += "\nStrengths of the current response:";
    int n = 0;
    for (const auto& item : verdict.strengths)
      out += "\n" + std::to_string(++n) + ". " + flat(item.text) + " [[" +
             std::to_string(item.score) + "]]";
  }
  if (!verdict.weaknesses.empty()) {
    out += "\n\nShortcomings of the current response:";
    int n = 0;
    for (const auto& item : verdict.weaknesses)
      out += "\n" + std::to_string(++n) + ". " + flat(item.text) + " [[" +
             std::to_string(item.score) + "]]";
  }
  return out;
}

std::string render_pairwise_verdict(const PairwiseVerdict& verdict) {
  std::string_view marker;
  switch (verdict.winner) {
    case PairwiseWinner::response_1: marker = kMarkerResponse1; break;
    case PairwiseWinner::response_2: marker = kMarkerResponse2; break;
    case PairwiseWinner::tie: marker = kMarkerTie; break;
  }
  std::string out = "I believe " + std::string(marker) +
                    ", with the overall score for Response 1 being [[" +
                    std::to_string(verdict.score_1) +
                    "]], and the overall score for Response 2 being [[" +
                    std::to_string(verdict.score_2) + "]], based on the following reasons:";
  int n = 0;
  for (const auto& item : verdict.rationale) {
    std::string text = item.text;
    for (char& c : text)
      if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    out += "\n" + std::to_string(++n) + ". " + text + " [[" + std::to_string(item.score_1) +
           "]] [[" + std::to_string(item.score_2) + "]]";
  }
  return out;
}

std::string parse_scenario_label(std::string_view raw, const ScenarioCatalog& catalog) {
  std::string norm = detail::normalize_label(raw);
  // Tolerate a quoted or sentence-final reply ("Open QA.", '"default"').
  if (norm.size() >= 2 && ((norm.front() == '"' && norm.back() == '"') ||
                           (norm.front() == '\'' && norm.back() == '\'')))
    norm = norm.substr(1, norm.size() - 2);
  while (!norm.empty() && norm.back() == '.') norm.pop_back();

  if (norm.empty()) raise(ErrorCode::UnknownScenario, "empty scenario reply");
  if (norm == ScenarioCatalog::default_id()) return ScenarioCatalog::default_id();
  for (const auto& scenario : catalog.scenarios())
    if (detail::normalize_label(scenario.name) == norm) return scenario.id;
  raise(ErrorCode::UnknownScenario, "reply '" + std::string(detail::trim(raw)) +
                                        "' matches no scenario name and is not 'default'");
}

}  // namespace judgekit
