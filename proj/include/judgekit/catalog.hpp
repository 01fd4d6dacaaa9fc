#pragma once

#include <string>
#include <vector>

namespace judgekit {

// One alias = an alternative (name, description) phrasing of a criterion,
// used to diversify prompts without drifting from the original meaning.
struct CriterionAlias {
  std::string name;
  std::string description;
};

struct Criterion {
  std::string name;
  std::string description;
  std::vector<CriterionAlias> aliases;
};

struct Scenario {
  std::string id;           // stable machine id, e.g. "open_qa"
  std::string name;         // display name used inside prompts, e.g. "Open QA"
  std::string description;
  std::vector<Criterion> criteria;
};

// Ordered scenario collection loaded from a JSON file. The order is the
// catalog order and is preserved everywhere (prompt lists, reports).
class ScenarioCatalog {
 public:
  static ScenarioCatalog load_file(const std::string& path);
  static ScenarioCatalog load_json(const std::string& json_text);

  // Reserved label for "cannot determine"; never a real scenario id.
  static const std::string& default_id();

  bool has(const std::string& id) const;
  const Scenario& by_id(const std::string& id) const;

  // Accepts a scenario id or a display name (case/whitespace-insensitive).
  const Scenario& resolve(const std::string& id_or_name) const;

  const std::vector<Scenario>& scenarios() const { return scenarios_; }
  std::size_t size() const { return scenarios_.size(); }
  std::size_t criteria_count() const;

 private:
  std::vector<Scenario> scenarios_;
};

// Directory holding the shipped catalog and prompt templates. Resolution
// order: JUDGEKIT_DATA_DIR env var, then the source-tree data directory
// compiled into the library (developer builds), then "./data".
std::string default_data_dir();

}  // namespace judgekit
