#include "judgekit/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"

namespace judgekit {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

const std::string& ScenarioCatalog::default_id() {
  static const std::string id = "default";
  return id;
}

ScenarioCatalog ScenarioCatalog::load_file(const std::string& path) {
  return load_json(read_file(path));
}

ScenarioCatalog ScenarioCatalog::load_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ConfigError, std::string("catalog is not valid JSON: ") + e.what());
  }

  ScenarioCatalog catalog;
  std::set<std::string> seen_ids;
  for (const auto& s : doc.value("scenarios", nlohmann::json::array())) {
    Scenario scenario;
    scenario.id = s.value("id", "");
    scenario.name = s.value("name", "");
    scenario.description = s.value("description", "");
    if (scenario.id.empty() || scenario.name.empty())
      raise(ErrorCode::ConfigError, "scenario entries need an id and a name");
    if (scenario.id == default_id())
      raise(ErrorCode::ConfigError, "'" + default_id() + "' is reserved for unclassified queries");
    if (!seen_ids.insert(scenario.id).second)
      raise(ErrorCode::ConfigError, "duplicate scenario id '" + scenario.id + "'");
    for (const auto& c : s.value("criteria", nlohmann::json::array())) {
      Criterion criterion;
      criterion.name = c.value("name", "");
      criterion.description = c.value("description", "");
      if (criterion.name.empty())
        raise(ErrorCode::ConfigError, "criterion without a name in scenario " + scenario.id);
      for (const auto& a : c.value("aliases", nlohmann::json::array()))
        criterion.aliases.push_back({a.value("name", ""), a.value("description", "")});
      scenario.criteria.push_back(std::move(criterion));
    }
    if (scenario.criteria.empty())
      raise(ErrorCode::ConfigError, "scenario " + scenario.id + " has no criteria");
    catalog.scenarios_.push_back(std::move(scenario));
  }
  if (catalog.scenarios_.empty()) raise(ErrorCode::EmptyCatalog, "catalog defines no scenarios");
  return catalog;
}

bool ScenarioCatalog::has(const std::string& id) const {
  for (const auto& s : scenarios_)
    if (s.id == id) return true;
  return false;
}

const Scenario& ScenarioCatalog::by_id(const std::string& id) const {
  for (const auto& s : scenarios_)
    if (s.id == id) return s;
  raise(ErrorCode::UnknownScenario, "no scenario with id '" + id + "'");
}

const Scenario& ScenarioCatalog::resolve(const std::string& id_or_name) const {
  for (const auto& s : scenarios_)
    if (s.id == id_or_name) return s;
  const std::string wanted = detail::normalize_label(id_or_name);
  for (const auto& s : scenarios_)
    if (detail::normalize_label(s.name) == wanted) return s;
  raise(ErrorCode::UnknownScenario, "no scenario matching '" + id_or_name + "'");
}

std::size_t ScenarioCatalog::criteria_count() const {
  std::size_t n = 0;
  for (const auto& s : scenarios_) n += s.criteria.size();
  return n;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("JUDGEKIT_DATA_DIR"); env && *env) return env;
#ifdef JUDGEKIT_SOURCE_DATA_DIR
  if (std::filesystem::exists(JUDGEKIT_SOURCE_DATA_DIR)) return JUDGEKIT_SOURCE_DATA_DIR;
#endif
  return "data";
}

}  // namespace judgekit
