// Python bindings for the judge pipeline core. Structured values cross the
// boundary as plain dicts/lists mirroring the JSONL field layout, so Python
// callers see exactly what the files contain.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/forge/balance.hpp"
#include "judgekit/forge/compose.hpp"
#include "judgekit/forge/ifd.hpp"
#include "judgekit/forge/kmeans.hpp"
#include "judgekit/forge/pairwise.hpp"
#include "judgekit/forge/sft.hpp"
#include "judgekit/gateway/scorer.hpp"
#include "judgekit/harness/jsonl.hpp"
#include "judgekit/metrics/metrics.hpp"
#include "judgekit/prompts/library.hpp"
#include "judgekit/prompts/render.hpp"
#include "judgekit/prompts/similarity.hpp"
#include "judgekit/rating.hpp"
#include "judgekit/types.hpp"
#include "judgekit/verdict.hpp"

namespace py = pybind11;
using ordered_json = nlohmann::ordered_json;

namespace {

py::object json_to_py(const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::null:
      return py::none();
    case ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case ordered_json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case ordered_json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case ordered_json::value_t::array: {
      py::list out;
      for (const ordered_json& item : j) out.append(json_to_py(item));
      return out;
    }
    case ordered_json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

ordered_json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    ordered_json out = ordered_json::array();
    for (const py::handle& item : obj) out.push_back(py_to_json(item));
    return out;
  }
  if (py::isinstance<py::dict>(obj)) {
    ordered_json out = ordered_json::object();
    for (const auto& item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  throw py::type_error("unsupported value type for JSON conversion");
}

judgekit::RatingSystem rating_of(const std::string& name) {
  return judgekit::RatingSystem::from_name(name);
}

std::string resolve_data_dir(const std::optional<std::string>& data_dir) {
  return data_dir ? *data_dir : judgekit::default_data_dir();
}

judgekit::ScenarioCatalog catalog_of(const std::optional<std::string>& data_dir) {
  return judgekit::ScenarioCatalog::load_file(resolve_data_dir(data_dir) + "/scenarios.json");
}

judgekit::prompts::PromptLibrary library_of(const std::optional<std::string>& data_dir) {
  return judgekit::prompts::PromptLibrary::load(resolve_data_dir(data_dir));
}

// Adapts a Python callable (text, condition) -> [(token, logprob), ...] to
// the token-scorer interface.
class PyScorer : public judgekit::gateway::TokenScorer {
 public:
  explicit PyScorer(py::function fn) : fn_(std::move(fn)) {}

  std::vector<judgekit::gateway::TokenScore> score(
      const std::string& text, const std::optional<std::string>& condition) override {
    py::object result =
        condition ? fn_(text, *condition) : fn_(text, py::none());
    std::vector<judgekit::gateway::TokenScore> scores;
    for (const py::handle& item : result) {
      auto pair = item.cast<std::pair<std::string, double>>();
      scores.push_back({pair.first, pair.second});
    }
    return scores;
  }

 private:
  py::function fn_;
};

judgekit::metrics::MetricId metric_id_of(const std::string& label) {
  if (label == "mae") return judgekit::metrics::MetricId::mae();
  if (label.rfind("agr_", 0) == 0) {
    const std::size_t mid = label.find('_', 4);
    if (mid != std::string::npos) {
      judgekit::metrics::AgrParams p;
      p.p = std::stoi(label.substr(4, mid - 4));
      p.q = std::stod(label.substr(mid + 1));
      return judgekit::metrics::MetricId::agreement(p);
    }
  }
  judgekit::raise(judgekit::ErrorCode::ConfigError,
                  "metric label must be 'mae' or 'agr_<p>_<q>', got '" + label + "'");
}

std::vector<judgekit::forge::SftRecord> records_from_py(const py::list& records) {
  std::vector<judgekit::forge::SftRecord> out;
  out.reserve(records.size());
  for (const py::handle& record : records)
    out.push_back(judgekit::harness::sft_from_json(py_to_json(record)));
  return out;
}

py::list records_to_py(const std::vector<judgekit::forge::SftRecord>& records) {
  py::list out;
  for (const judgekit::forge::SftRecord& record : records)
    out.append(json_to_py(judgekit::harness::to_json(record)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core operations of the judge development pipeline";

  // Library errors surface as ValueError carrying "<CodeName>: <message>".
  py::register_exception<judgekit::Error>(m, "JudgekitError", PyExc_ValueError);

  m.def("data_dir", [] { return judgekit::default_data_dir(); },
        "Directory holding the shipped scenario catalog and prompt templates");

  m.def(
      "scenario_ids",
      [](const std::optional<std::string>& data_dir) {
        const judgekit::ScenarioCatalog catalog = catalog_of(data_dir);
        std::vector<std::string> ids;
        for (const judgekit::Scenario& scenario : catalog.scenarios()) ids.push_back(scenario.id);
        return ids;
      },
      py::arg("data_dir") = std::nullopt);

  // -- verdict parsing -------------------------------------------------------

  m.def(
      "parse_graded_verdict",
      [](const std::string& text, const std::string& rating) {
        return json_to_py(
            judgekit::harness::to_json(judgekit::parse_graded_verdict(text, rating_of(rating))));
      },
      py::arg("text"), py::arg("rating") = "five_tier");

  m.def(
      "parse_pairwise_verdict",
      [](const std::string& text, const std::string& rating) {
        return json_to_py(judgekit::harness::to_json(
            judgekit::parse_pairwise_verdict(text, rating_of(rating))));
      },
      py::arg("text"), py::arg("rating") = "five_tier");

  m.def(
      "parse_scenario_label",
      [](const std::string& text, const std::optional<std::string>& data_dir) {
        return judgekit::parse_scenario_label(text, catalog_of(data_dir));
      },
      py::arg("text"), py::arg("data_dir") = std::nullopt);

  // -- prompt construction ---------------------------------------------------

  m.def(
      "render_judge_prompt",
      [](const py::dict& task_dict, const std::optional<std::string>& data_dir) {
        const ordered_json j = py_to_json(task_dict);
        judgekit::JudgeTask task;
        task.mode = judgekit::judge_mode_from_name(j.at("mode").get<std::string>());
        task.instruction = judgekit::harness::instruction_from_json(j.at("instruction"));
        for (const ordered_json& response : j.at("responses"))
          task.responses.push_back(judgekit::harness::response_from_json(response));
        task.rating = rating_of(j.contains("rating") ? j["rating"].get<std::string>()
                                                     : std::string("five_tier"));
        if (j.contains("criteria"))
          task.effective_criteria = j["criteria"].get<std::vector<std::string>>();
        return judgekit::prompts::render_judge_prompt(library_of(data_dir), task,
                                                      catalog_of(data_dir))
            .text;
      },
      py::arg("task"), py::arg("data_dir") = std::nullopt,
      "Render the evaluation prompt for a task dict: {mode, instruction, responses, rating}");

  m.def(
      "retarget_prompt_rating",
      [](const std::string& prompt, const std::string& from, const std::string& to,
         const std::optional<std::string>& data_dir) {
        return judgekit::prompts::retarget_prompt_rating(prompt, rating_of(from), rating_of(to),
                                                         library_of(data_dir).tiers);
      },
      py::arg("prompt"), py::arg("from_rating"), py::arg("to_rating"),
      py::arg("data_dir") = std::nullopt);

  m.def(
      "remap_rating",
      [](int score, const std::string& from, const std::string& to) {
        return judgekit::remap_rating(score, rating_of(from), rating_of(to));
      },
      py::arg("score"), py::arg("from_rating"), py::arg("to_rating"));

  m.def("jaccard_similarity", &judgekit::prompts::jaccard_similarity, py::arg("a"), py::arg("b"));

  // -- metrics ---------------------------------------------------------------

  m.def(
      "agr_kernel",
      [](int predicted, int labeled, int p, double q) {
        return judgekit::metrics::agr_kernel(predicted, labeled, {p, q});
      },
      py::arg("predicted"), py::arg("labeled"), py::arg("p") = 2, py::arg("q") = 2.0);

  m.def(
      "mae",
      [](const std::vector<std::pair<int, int>>& pairs) {
        std::vector<judgekit::metrics::ScoredPair> scored;
        for (const auto& [predicted, labeled] : pairs) scored.push_back({predicted, labeled, ""});
        return judgekit::metrics::mae(scored);
      },
      py::arg("pairs"), "Mean absolute error over (predicted, labeled) pairs");

  m.def(
      "agr",
      [](const std::vector<std::pair<int, int>>& pairs, int p, double q) {
        std::vector<judgekit::metrics::ScoredPair> scored;
        for (const auto& [predicted, labeled] : pairs) scored.push_back({predicted, labeled, ""});
        return judgekit::metrics::agr(scored, {p, q});
      },
      py::arg("pairs"), py::arg("p") = 2, py::arg("q") = 2.0);

  m.def("z_values", &judgekit::metrics::z_values, py::arg("values"));
  m.def("pearson", &judgekit::metrics::pearson, py::arg("xs"), py::arg("ys"));

  m.def(
      "random_baseline",
      [](const std::string& metric, const std::string& rating,
         const std::vector<double>& label_hist) {
        return judgekit::metrics::random_baseline(metric_id_of(metric), rating_of(rating),
                                                  label_hist);
      },
      py::arg("metric"), py::arg("rating") = "five_tier",
      py::arg("label_hist") = std::vector<double>{});

  m.def(
      "aggregate_normalized",
      [](const std::vector<std::pair<std::string, double>>& values,
         const std::vector<double>& baselines) {
        std::vector<std::pair<judgekit::metrics::MetricId, double>> typed;
        for (const auto& [label, value] : values) typed.push_back({metric_id_of(label), value});
        return judgekit::metrics::aggregate_normalized(typed, baselines);
      },
      py::arg("values"), py::arg("baselines"));

  // -- fine-tuning data ------------------------------------------------------

  m.def(
      "label_token_spans",
      [](const std::string& target, const std::string& mode, const std::string& rating) {
        py::list out;
        for (const judgekit::forge::TokenSpan& span : judgekit::forge::label_token_spans(
                 target, judgekit::judge_mode_from_name(mode), rating_of(rating))) {
          py::dict d;
          d["start"] = span.start;
          d["end"] = span.end;
          d["kind"] = judgekit::forge::span_kind_name(span.kind);
          out.append(d);
        }
        return out;
      },
      py::arg("target"), py::arg("mode") = "single", py::arg("rating") = "five_tier");

  m.def(
      "balance_records",
      [](const py::list& records, const std::optional<std::map<int, std::size_t>>& target,
         std::uint64_t seed) {
        return records_to_py(judgekit::forge::balance_by_score(records_from_py(records), target, seed));
      },
      py::arg("records"), py::arg("target") = std::nullopt, py::arg("seed") = 0);

  m.def(
      "double_pairwise_records",
      [](const py::list& records) {
        return records_to_py(judgekit::forge::double_pairwise(records_from_py(records)));
      },
      py::arg("records"));

  m.def(
      "ifd_scores",
      [](const py::list& items, const py::function& scorer) {
        PyScorer adapter{scorer};
        py::list out;
        for (const py::handle& item : items) {
          const ordered_json j = py_to_json(item);
          const judgekit::forge::IfdScore score = judgekit::forge::ifd_score(
              j.at("question").get<std::string>(), j.at("answer").get<std::string>(), adapter,
              j.contains("record_id") ? j["record_id"].get<std::string>() : "",
              j.contains("scenario") ? j["scenario"].get<std::string>() : "");
          out.append(json_to_py({{"record_id", score.record_id},
                                 {"scenario", score.scenario},
                                 {"conditioned_loss", score.conditioned_loss},
                                 {"unconditioned_loss", score.unconditioned_loss},
                                 {"ifd", score.ifd},
                                 {"scenario_z", score.scenario_z}}));
        }
        return out;
      },
      py::arg("items"), py::arg("scorer"),
      "Score {question, answer[, record_id, scenario]} items with a callable "
      "(text, condition) -> [(token, logprob), ...]");

  m.def(
      "select_by_ifd",
      [](const py::list& scores, std::size_t budget, const std::string& policy,
         double z_threshold) {
        std::vector<judgekit::forge::IfdScore> typed;
        for (const py::handle& item : scores) {
          const ordered_json j = py_to_json(item);
          judgekit::forge::IfdScore score;
          score.record_id = j.at("record_id").get<std::string>();
          if (j.contains("scenario")) score.scenario = j["scenario"].get<std::string>();
          score.ifd = j.at("ifd").get<double>();
          if (j.contains("conditioned_loss"))
            score.conditioned_loss = j["conditioned_loss"].get<double>();
          if (j.contains("unconditioned_loss"))
            score.unconditioned_loss = j["unconditioned_loss"].get<double>();
          typed.push_back(std::move(score));
        }
        judgekit::forge::fill_scenario_z(typed);
        judgekit::forge::SelectionPolicy selection;
        if (policy == "drop")
          selection.kind = judgekit::forge::SelectionPolicy::Kind::drop_above_one;
        else if (policy == "z")
          selection.kind = judgekit::forge::SelectionPolicy::Kind::scenario_z;
        else
          judgekit::raise(judgekit::ErrorCode::ConfigError,
                          "policy must be 'drop' or 'z', got '" + policy + "'");
        selection.z_threshold = z_threshold;
        return judgekit::forge::select_by_ifd(typed, budget, selection);
      },
      py::arg("scores"), py::arg("budget"), py::arg("policy") = "drop",
      py::arg("z_threshold") = 3.0);

  // -- mix shaping -----------------------------------------------------------

  m.def(
      "kmeans",
      [](const std::vector<std::vector<double>>& rows, int k, std::uint64_t seed,
         int max_iterations) {
        const judgekit::forge::KMeansResult result =
            judgekit::forge::kmeans(rows, k, seed, max_iterations);
        py::dict out;
        out["assignment"] = result.assignment;
        out["centroids"] = result.centroids;
        out["iterations"] = result.iterations;
        return out;
      },
      py::arg("rows"), py::arg("k"), py::arg("seed") = 0, py::arg("max_iterations") = 100);

  m.def("cluster_scenarios", &judgekit::forge::cluster_scenarios, py::arg("scenario_ids"),
        py::arg("features"), py::arg("k"), py::arg("seed") = 0);

  m.def("apportion", &judgekit::forge::apportion, py::arg("weights"), py::arg("total"));

  m.def(
      "sample_composition",
      [](const py::dict& plan_dict,
         const std::map<std::string, std::vector<std::string>>& pools, std::uint64_t seed) {
        const ordered_json j = py_to_json(plan_dict);
        judgekit::forge::CompositionPlan plan;
        plan.clusters = j.at("clusters").get<std::map<std::string, std::vector<std::string>>>();
        plan.weights = j.at("weights").get<std::map<std::string, double>>();
        plan.total = j.at("total").get<std::int64_t>();
        return judgekit::forge::sample_composition(plan, pools, seed);
      },
      py::arg("plan"), py::arg("pools"), py::arg("seed") = 0);
}
