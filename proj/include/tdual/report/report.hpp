#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tdual/abelian/fg_group.hpp"
#include "tdual/report/job.hpp"

namespace tdual {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kFlagFixtureMismatch = "FIXTURE-MISMATCH";

struct ReportDocument {
  nlohmann::json input;
  nlohmann::json result;
  std::vector<std::string> flags;
  std::vector<std::string> notes;
  std::vector<std::string> summary;
  std::optional<std::string> error;

  bool has_flag(const std::string& f) const;
  bool operator==(const ReportDocument&) const = default;
};

enum class Format { Json, Text };
Format parse_format(const std::string& s);

nlohmann::json group_to_json(const FgGroup& g);
FgGroup group_from_json(const nlohmann::json& j);

// Engine errors that stem from the input (validation, unknown space, degree
// overflow, b not liftable) become a report with error set; internal
// failures propagate.
ReportDocument run_job(const JobSpec& spec);

nlohmann::json report_to_json(const ReportDocument& r);
ReportDocument report_from_json(const nlohmann::json& j);

// One report: the report object itself. Several: {"reports": [...], "schema_version": 1}.
std::string emit(const std::vector<ReportDocument>& reports, Format format);
std::string emit(const ReportDocument& report, Format format);
std::vector<ReportDocument> parse_reports(const std::string& json_text);

}  // namespace tdual
