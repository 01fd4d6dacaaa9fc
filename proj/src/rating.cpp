#include "judgekit/rating.hpp"

#include <cmath>

#include "judgekit/errors.hpp"

namespace judgekit {

int round_half_up(double value) { return static_cast<int>(std::floor(value + 0.5)); }

RatingSystem RatingSystem::of(RatingKind kind) {
  switch (kind) {
    case RatingKind::five_tier: return {kind, 1, 5};
    case RatingKind::binary_01: return {kind, 0, 1};
    case RatingKind::binary_12: return {kind, 1, 2};
    case RatingKind::three_class: return {kind, 1, 3};
    case RatingKind::ten_class: return {kind, 1, 10};
  }
  raise(ErrorCode::ConfigError, "unhandled rating kind");
}

RatingSystem RatingSystem::from_name(const std::string& name) {
  if (name == "five_tier") return of(RatingKind::five_tier);
  if (name == "binary_01") return of(RatingKind::binary_01);
  if (name == "binary_12") return of(RatingKind::binary_12);
  if (name == "three_class") return of(RatingKind::three_class);
  if (name == "ten_class") return of(RatingKind::ten_class);
  raise(ErrorCode::ConfigError, "unknown rating system '" + name + "'");
}

std::string RatingSystem::name() const {
  switch (kind) {
    case RatingKind::five_tier: return "five_tier";
    case RatingKind::binary_01: return "binary_01";
    case RatingKind::binary_12: return "binary_12";
    case RatingKind::three_class: return "three_class";
    case RatingKind::ten_class: return "ten_class";
  }
  return "unknown";
}

std::string RatingSystem::label() const {
  switch (kind) {
    case RatingKind::five_tier: return "five-tier";
    case RatingKind::binary_01:
    case RatingKind::binary_12: return "binary";
    case RatingKind::three_class: return "3-class";
    case RatingKind::ten_class: return "10-class";
  }
  return "unknown";
}

std::string RatingSystem::range_text() const {
  return std::to_string(min) + "-" + std::to_string(max);
}

std::string RatingSystem::range_words() const {
  return std::to_string(min) + " and " + std::to_string(max);
}

int remap_rating(int score, const RatingSystem& from, const RatingSystem& to) {
  if (!from.contains(score))
    raise(ErrorCode::OutOfRange, "score " + std::to_string(score) + " outside " +
                                     from.name() + " range " + from.range_text());
  if (from == to) return score;

  if (to.size() == 2) {
    // Positive class iff the score clears 3/4 of the source span: on a
    // five-tier scale that is exactly the tiers a reference answer meets
    // or beats (4 and 5).
    double threshold = from.min + 0.75 * (from.max - from.min);
    return score >= threshold ? to.max : to.min;
  }

  if (from.size() == 1) return to.min;  // degenerate source; nothing to scale

  double position = static_cast<double>(score - from.min) / (from.max - from.min);
  return to.min + round_half_up(position * (to.max - to.min));
}

}  // namespace judgekit
