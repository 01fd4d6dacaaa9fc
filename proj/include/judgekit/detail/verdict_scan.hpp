#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "judgekit/detail/strings.hpp"
#include "judgekit/verdict.hpp"

namespace judgekit::detail {

// Length of the enumeration marker opening `line` ("1. ", "12) ", "- ",
// "* "), including the whitespace that follows it; 0 when the line is not an
// enumerated item. A decimal like "9.11" is not a marker: the dot must be
// followed by whitespace.
std::size_t enum_marker_len(std::string_view line);

// Normalized header-line form used to match strengths/weaknesses section
// headers: lowercased, trimmed, trailing ':'/'.' stripped.
std::string normalize_header_line(std::string_view line);

bool matches_any_header(std::string_view line, const std::vector<std::string>& headers);

// One enumerated item: [begin, end) bytes of the full item (marker included),
// with content starting after the marker.
struct ItemSpan {
  std::size_t begin = 0;
  std::size_t content_begin = 0;
  std::size_t end = 0;
};

// Enumerated items between byte offsets [from, to); an item runs until a
// blank line, the next enumeration marker, a section header, or `to`.
std::vector<ItemSpan> scan_items(std::string_view text, std::size_t from, std::size_t to,
                                 const VerdictHeaders& headers);

// Item text with bracketed tokens removed and whitespace collapsed.
std::string clean_item_text(std::string_view text, const ItemSpan& item,
                            const std::vector<BracketToken>& tokens);

}  // namespace judgekit::detail
