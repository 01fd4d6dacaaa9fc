#pragma once

#include <map>
#include <string>

namespace judgekit::prompts {

// A text template with {{name}} placeholders. Substitution is a single left-
// to-right pass: replacement values are inserted verbatim and never rescanned,
// so user-controlled text cannot inject placeholders. Any placeholder left
// without a value raises UnresolvedPlaceholder.
class TemplateText {
 public:
  TemplateText() = default;
  explicit TemplateText(std::string text) : text_(std::move(text)) {}

  // Reads the file; a single trailing newline (the POSIX file terminator) is
  // dropped so rendered prompts end exactly where the template does.
  static TemplateText load_file(const std::string& path);

  std::string render(const std::map<std::string, std::string>& values) const;

  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

}  // namespace judgekit::prompts
