#include "rw/survey.hpp"

#include <atomic>
#include <thread>

#include <json.hpp>

#include "rw/classify.hpp"
#include "rw/config.hpp"
#include "rw/errors.hpp"

namespace rw {

std::vector<RoseWindowParams> survey_representatives(int max_n) {
  if (max_n < 3) {
    throw ParameterError("survey requires max_n >= 3, got " + std::to_string(max_n));
  }
  std::vector<RoseWindowParams> out;
  for (int n = 3; n <= max_n; ++n) {
    for (int a = 1; a <= n / 2; ++a) {
      for (int r = 1; r <= n / 2; ++r) {
        out.push_back(RoseWindowParams{n, a, r});
      }
    }
  }
  return out;
}

SurveyResult run_survey(int max_n, std::ostream& out, int jobs) {
  const auto reps = survey_representatives(max_n);

  struct Row {
    std::string line;
    bool disagreement = false;
    bool capacity_error = false;
  };
  std::vector<Row> rows(reps.size());

  const auto work = [&](std::size_t i) {
    const Classification c = classify_with_search(reps[i]);
    rows[i].line = classification_to_json(c);
    rows[i].disagreement = c.disagreement();
    rows[i].capacity_error = c.search_error.has_value();
  };

  if (jobs < 2) {
    for (std::size_t i = 0; i < reps.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&]() {
        for (std::size_t i = next.fetch_add(1); i < reps.size(); i = next.fetch_add(1)) {
          work(i);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  SurveyResult result;
  result.records = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (row.disagreement) ++result.disagreements;
    if (row.capacity_error) ++result.capacity_errors;
  }

  nlohmann::ordered_json header;
  header["survey"] = {{"version", version()}, {"max_n", max_n}, {"enum_cap", enum_cap()}};
  out << header.dump() << "\n";
  for (const auto& row : rows) out << row.line << "\n";
  nlohmann::ordered_json summary;
  summary["summary"] = {{"records", result.records},
                        {"disagreements", result.disagreements},
                        {"capacity_errors", result.capacity_errors}};
  out << summary.dump() << "\n";
  return result;
}

} // namespace rw
