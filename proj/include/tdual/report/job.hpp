#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tdual/abelian/integer.hpp"

namespace tdual {

enum class JobMode { Dualize, Cohomology, ClassifyingTables, CosetPartition };

std::string to_string(JobMode m);
JobMode parse_mode(const std::string& s);

// A class given either as coordinates in the canonical generator order or
// as an expression in generator names ("3*volxz", "a1+2*a2", "0").
struct ClassSpec {
  std::optional<std::vector<Int>> coords;
  std::string expression;

  bool given() const { return coords.has_value() || !expression.empty(); }
  static ClassSpec parse_text(const std::string& s);
  nlohmann::json to_json() const;
};

struct JobSpec {
  JobMode mode = JobMode::Dualize;
  std::string base;  // catalog space, or R2 | R32 | E32 | E32_hat | T32 for tables
  ClassSpec euler;
  ClassSpec flux;
  ClassSpec b;
  ClassSpec generator;  // coset-partition only
  std::optional<int> max_degree;

  nlohmann::json to_json() const;
};

// Accepts {"jobs": [...]} or a single job object. Errors name the field,
// e.g. "jobs[2].euler: expected integers or an expression".
std::vector<JobSpec> parse_jobs(const nlohmann::json& doc);
std::vector<JobSpec> parse_jobs_text(const std::string& text);
JobSpec parse_job(const nlohmann::json& j, const std::string& where = "job");

}  // namespace tdual
