#pragma once

// Check reports, run configuration, and JSON/CSV serialisation.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabledm/types.hpp"

namespace stabledm {

struct ExperimentConfig {
  std::string selector = "all";  // suite name, check name, or "all"
  RngSeed seed{42, 0};
  std::size_t mc_samples = 100000;
  std::size_t mc_paths = 10000;
  int shards = 1;
  std::string out_json;      // empty: no file
  bool emit_timestamps = true;
};

inline nlohmann::json to_json(const TestReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["statistic"] = r.statistic;
  j["reference"] = r.reference;
  j["passed"] = r.passed;
  j["meta"] = r.meta;
  return j;
}

inline nlohmann::json run_document(const ExperimentConfig& cfg,
                                   const std::vector<TestReport>& reports,
                                   const std::string& timestamp) {
  nlohmann::json j;
  j["run_id"] = "stabledm-" + std::to_string(cfg.seed.seed) + "-" + cfg.selector;
  j["config"] = {{"selector", cfg.selector},
                 {"seed", cfg.seed.seed},
                 {"stream_id", cfg.seed.stream_id},
                 {"mc_samples", cfg.mc_samples},
                 {"mc_paths", cfg.mc_paths},
                 {"shards", cfg.shards}};
  if (cfg.emit_timestamps) j["timestamp"] = timestamp;
  j["reports"] = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    j["reports"].push_back(to_json(r));
    all = all && r.passed;
  }
  j["all_passed"] = all;
  return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

// CSV with a header row; columns are parallel vectors.
inline std::string make_csv(const std::vector<std::string>& header,
                            const std::vector<std::vector<double>>& columns) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t c = 0; c < header.size(); ++c)
    os << header[c] << (c + 1 < header.size() ? ',' : '\n');
  if (columns.empty()) return os.str();
  std::size_t rows = columns.front().size();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < columns.size(); ++c)
      os << columns[c][r] << (c + 1 < columns.size() ? ',' : '\n');
  return os.str();
}

}  // namespace stabledm
