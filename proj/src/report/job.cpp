#include "tdual/report/job.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include "tdual/errors.hpp"

namespace tdual {

using nlohmann::json;

std::string to_string(JobMode m) {
  switch (m) {
    case JobMode::Dualize:
      return "dualize";
    case JobMode::Cohomology:
      return "cohomology";
    case JobMode::ClassifyingTables:
      return "classifying-tables";
    case JobMode::CosetPartition:
      return "coset-partition";
  }
  return "dualize";
}

JobMode parse_mode(const std::string& s) {
  for (JobMode m : {JobMode::Dualize, JobMode::Cohomology, JobMode::ClassifyingTables, JobMode::CosetPartition})
    if (to_string(m) == s) return m;
  throw ValidationError("unknown mode '" + s + "' (dualize, cohomology, classifying-tables, coset-partition)");
}

ClassSpec ClassSpec::parse_text(const std::string& s) {
  static const std::regex ints(R"(\s*\[?\s*-?\d+(\s*,\s*-?\d+)*\s*\]?\s*)");
  static const std::regex empty_list(R"(\s*\[\s*\]\s*)");
  ClassSpec c;
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
  if (t == "0") {
    c.expression = "0";
  } else if (std::regex_match(s, empty_list)) {
    c.coords = std::vector<Int>{};
  } else if (std::regex_match(s, ints)) {
    std::vector<Int> v;
    std::string cur;
    for (char ch : t) {
      if (ch == '[' || ch == ']') continue;
      if (ch == ',') {
        v.emplace_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    v.emplace_back(cur);
    c.coords = std::move(v);
  } else if (t.empty()) {
    throw ValidationError("empty class");
  } else {
    c.expression = s;
  }
  return c;
}

json ClassSpec::to_json() const {
  if (!coords) return expression;
  json a = json::array();
  for (const auto& x : *coords) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

json JobSpec::to_json() const {
  json j;
  j["mode"] = tdual::to_string(mode);
  j["base"] = base;
  if (euler.given()) j["euler"] = euler.to_json();
  if (flux.given()) j["flux"] = flux.to_json();
  if (b.given()) j["b"] = b.to_json();
  if (generator.given()) j["generator"] = generator.to_json();
  if (max_degree) j["max_degree"] = *max_degree;
  return j;
}

namespace {

ClassSpec class_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return ClassSpec::parse_text(j.get<std::string>());
    if (j.is_number_integer()) return ClassSpec{std::vector<Int>{Int(j.get<long>())}, {}};
    if (j.is_array()) {
      std::vector<Int> v;
      for (const auto& x : j) {
        if (x.is_number_integer())
          v.emplace_back(x.get<long>());
        else if (x.is_string() && std::regex_match(x.get<std::string>(), std::regex(R"(-?\d+)")))
          v.emplace_back(x.get<std::string>());
        else
          throw ValidationError("expected integers or an expression");
      }
      return ClassSpec{std::move(v), {}};
    }
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  throw ValidationError(where + ": expected integers or an expression");
}

}  // namespace

JobSpec parse_job(const json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  static const std::set<std::string> known = {"mode", "base", "space", "euler", "flux", "b", "generator", "max_degree"};
  for (const auto& [k, _] : j.items())
    if (!known.count(k)) throw ValidationError(where + "." + k + ": unknown field");
  JobSpec s;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw ValidationError(where + ".mode: expected a string");
    try {
      s.mode = parse_mode(j["mode"].get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ".mode: " + e.what());
    }
  }
  const char* base_key = j.contains("base") ? "base" : "space";
  if (!j.contains(base_key)) throw ValidationError(where + ".base: missing");
  if (!j[base_key].is_string()) throw ValidationError(where + "." + base_key + ": expected a string");
  s.base = j[base_key].get<std::string>();
  if (j.contains("euler")) s.euler = class_from_json(j["euler"], where + ".euler");
  if (j.contains("flux")) s.flux = class_from_json(j["flux"], where + ".flux");
  if (j.contains("b")) s.b = class_from_json(j["b"], where + ".b");
  if (j.contains("generator")) s.generator = class_from_json(j["generator"], where + ".generator");
  if (j.contains("max_degree")) {
    if (!j["max_degree"].is_number_integer()) throw ValidationError(where + ".max_degree: expected an integer");
    s.max_degree = j["max_degree"].get<int>();
  }
  return s;
}

std::vector<JobSpec> parse_jobs(const json& doc) {
  if (doc.is_object() && doc.contains("schema_version") && doc["schema_version"] != 1)
    throw ValidationError("schema_version: only version 1 is supported");
  std::vector<JobSpec> out;
  if (doc.is_object() && doc.contains("jobs")) {
    const json& jobs = doc["jobs"];
    if (!jobs.is_array()) throw ValidationError("jobs: expected an array");
    for (std::size_t i = 0; i < jobs.size(); ++i) out.push_back(parse_job(jobs[i], "jobs[" + std::to_string(i) + "]"));
    return out;
  }
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(parse_job(doc[i], "[" + std::to_string(i) + "]"));
    return out;
  }
  json single = doc;
  if (single.is_object()) single.erase("schema_version");
  out.push_back(parse_job(single));
  return out;
}

std::vector<JobSpec> parse_jobs_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("job file: ") + e.what());
  }
  return parse_jobs(doc);
}

}  // namespace tdual
