#pragma once

#include <string>

namespace judgekit {

enum class RatingKind { five_tier, binary_01, binary_12, three_class, ten_class };

struct RatingSystem {
  RatingKind kind = RatingKind::five_tier;
  int min = 1;
  int max = 5;

  static RatingSystem of(RatingKind kind);
  static RatingSystem from_name(const std::string& name);

  bool contains(int score) const { return score >= min && score <= max; }
  int size() const { return max - min + 1; }

  std::string name() const;         // machine name, e.g. "five_tier"
  std::string label() const;        // prose label, e.g. "five-tier"
  std::string range_text() const;   // "1-5"
  std::string range_words() const;  // "1 and 5"

  bool operator==(const RatingSystem&) const = default;
};

// Maps a score between rating scales. Targets with at least three classes use
// an affine endpoint map rounded half up, so endpoints land on endpoints and
// the map is monotone. Binary targets are thresholded: a score is the positive
// class iff it reaches min + 0.75 * span of the source scale (the second-best
// tier of a five-point scale and everything above it).
int remap_rating(int score, const RatingSystem& from, const RatingSystem& to);

// Round half up at exact .5 boundaries (std::round rounds halves away from
// zero; scores here are non-negative so the two agree, but the intent is
// documented by the name).
int round_half_up(double value);

}  // namespace judgekit
