#include "judgekit/prompts/template.hpp"

#include <fstream>
#include <sstream>

#include "judgekit/errors.hpp"

namespace judgekit::prompts {

TemplateText TemplateText::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot read template " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return TemplateText(std::move(text));
}

std::string TemplateText::render(const std::map<std::string, std::string>& values) const {
  std::string out;
  out.reserve(text_.size());
  std::size_t pos = 0;
  while (pos < text_.size()) {
    const std::size_t open = text_.find("{{", pos);
    if (open == std::string::npos) {
      out.append(text_, pos, text_.size() - pos);
      break;
    }
    const std::size_t close = text_.find("}}", open + 2);
    if (close == std::string::npos) {
      out.append(text_, pos, text_.size() - pos);
      break;
    }
    out.append(text_, pos, open - pos);
    const std::string name = text_.substr(open + 2, close - open - 2);
    const auto it = values.find(name);
    if (it == values.end())
      raise(ErrorCode::UnresolvedPlaceholder, "no value for placeholder {{" + name + "}}");
    out.append(it->second);  // inserted verbatim, never rescanned
    pos = close + 2;
  }
  return out;
}

}  // namespace judgekit::prompts
