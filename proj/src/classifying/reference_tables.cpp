#include "tdual/classifying/reference_tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "tdual/errors.hpp"

#ifndef TDUAL_REFERENCE_TABLES_PATH
#define TDUAL_REFERENCE_TABLES_PATH "fixtures/reference_tables.json"
#endif

namespace tdual {

namespace {

using nlohmann::json;

FgGroup group_from_json(const json& j) {
  std::vector<Int> t;
  for (const auto& x : j.at("torsion")) t.emplace_back(x.get<long>());
  return FgGroup(j.at("rank").get<std::size_t>(), std::move(t));
}

IntMatrix matrix_from_json(const json& j) {
  const std::size_t r = j.size();
  const std::size_t c = r ? j[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = j[i][k].get<long>();
  return m;
}

ReferenceTable table_from_json(const json& j) {
  ReferenceTable t;
  for (const auto& g : j.at("groups")) t.groups.push_back(group_from_json(g));
  t.names = j.at("names").get<std::vector<std::vector<std::string>>>();
  if (t.names.size() != t.groups.size()) throw ValidationError("reference table: names and groups differ in length");
  for (std::size_t k = 0; k < t.groups.size(); ++k)
    if (t.names[k].size() != t.groups[k].generator_count())
      throw ValidationError("reference table: degree " + std::to_string(k) + " has " +
                            std::to_string(t.names[k].size()) + " names for " + t.groups[k].to_string());
  if (j.contains("cup")) t.cup = j.at("cup").get<std::map<std::string, std::map<std::string, std::string>>>();
  if (j.contains("pushforward")) t.pushforward = j.at("pushforward").get<std::map<std::string, std::string>>();
  if (j.contains("aliases")) t.aliases = j.at("aliases").get<std::map<std::string, std::string>>();
  return t;
}

std::string engine_name(const ReferenceTable& ref, const std::string& n) {
  auto it = ref.aliases.find(n);
  return it == ref.aliases.end() ? n : it->second;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return "[" + s + "]";
}

void compare_tables(const std::vector<FgGroup>& groups, const std::vector<std::vector<std::string>>& names,
                    const ReferenceTable& ref, std::vector<std::string>& out) {
  for (std::size_t k = 0; k < ref.groups.size(); ++k) {
    const std::string h = "H^" + std::to_string(k);
    if (k >= groups.size()) {
      out.push_back(h + ": not computed");
      continue;
    }
    if (groups[k] != ref.groups[k]) {
      out.push_back(h + ": computed " + groups[k].to_string() + " " + join(names[k]) + ", reference " +
                    ref.groups[k].to_string() + " " + join(ref.names[k]));
      continue;
    }
    std::vector<std::string> want;
    for (const auto& n : ref.names[k]) want.push_back(engine_name(ref, n));
    std::vector<std::string> got = names[k];
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) out.push_back(h + ": generators " + join(names[k]) + ", reference " + join(ref.names[k]));
  }
}

}  // namespace

ReferenceTables load_reference_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open reference tables " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  ReferenceTables r;
  try {
    for (const auto& [k, v] : j.at("cohomology").items()) r.cohomology.emplace(k, table_from_json(v));
    for (const auto& [k, v] : j.at("homotopy").items()) {
      std::vector<FgGroup> pi;
      for (const auto& g : v) pi.push_back(group_from_json(g));
      r.homotopy.emplace(k, std::move(pi));
    }
    for (const auto& [k, v] : j.at("pi1_actions").items()) r.pi1_actions.emplace(k, matrix_from_json(v));
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return r;
}

std::string default_reference_tables_path() {
  if (const char* p = std::getenv("TDUAL_REFERENCE_TABLES")) return p;
  return TDUAL_REFERENCE_TABLES_PATH;
}

const ReferenceTables& reference_tables() {
  static const ReferenceTables r = load_reference_tables(default_reference_tables_path());
  return r;
}

GradedCohomology graded_from_reference(const std::string& space, const ReferenceTable& t) {
  GradedCohomology g;
  g.space = space;
  g.simply_connected = false;
  g.max_degree = static_cast<int>(t.groups.size()) - 1;
  g.groups = t.groups;
  g.names = t.names;
  if (g.max_degree < 2) return g;
  for (const auto& [u, _] : t.cup)
    if (std::find(t.names[2].begin(), t.names[2].end(), u) == t.names[2].end())
      throw ValidationError(space + ": cup data for unknown class " + u);
  for (int k = 0; k + 2 <= g.max_degree; ++k) {
    std::vector<std::optional<Hom>> row;
    for (const auto& u : t.names[2]) {
      IntMatrix m(t.groups[static_cast<std::size_t>(k + 2)].generator_count(),
                  t.groups[static_cast<std::size_t>(k)].generator_count());
      auto it = t.cup.find(u);
      for (std::size_t j = 0; j < t.names[static_cast<std::size_t>(k)].size() && it != t.cup.end(); ++j) {
        auto e = it->second.find(t.names[static_cast<std::size_t>(k)][j]);
        if (e != it->second.end()) m.set_column(j, parse_combination(t.names[static_cast<std::size_t>(k + 2)], e->second));
      }
      row.emplace_back(Hom(t.groups[static_cast<std::size_t>(k)], t.groups[static_cast<std::size_t>(k + 2)], std::move(m)));
    }
    g.cup2.push_back(std::move(row));
  }
  return g;
}

std::vector<std::string> compare_with_reference(const GradedCohomology& computed, const ReferenceTable& ref) {
  std::vector<std::string> out;
  compare_tables(std::vector<FgGroup>(computed.groups.begin(), computed.groups.end()), computed.names, ref, out);
  return out;
}

std::vector<std::string> compare_with_reference(const UniversalBundle& computed, const ReferenceTable& ref) {
  const TotalSpaceCohomology& t = computed.total;
  std::vector<std::vector<std::string>> names;
  for (int k = 0; k <= t.max_degree(); ++k) names.push_back(t.names(k));
  std::vector<std::string> out;
  compare_tables(t.groups(), names, ref, out);
  for (const auto& [gen, expr] : ref.pushforward) {
    const std::string n = engine_name(ref, gen);
    bool found = false;
    for (int k = 1; k <= t.max_degree() && !found; ++k) {
      auto idx = std::find(t.names(k).begin(), t.names(k).end(), n);
      if (idx == t.names(k).end()) continue;
      found = true;
      std::vector<Int> c(t.group(k).generator_count(), 0);
      c[static_cast<std::size_t>(idx - t.names(k).begin())] = 1;
      GroupElement pushed = pushforward_of(t, k, t.element(k, c));
      const auto& base_names = computed.bundle.base.generator_names(k - 1);
      std::vector<Int> want;
      try {
        want = parse_combination(base_names, engine_name(ref, expr));
      } catch (const ValidationError&) {
        out.push_back("pushforward of " + gen + ": reference value " + expr + " is not a class of the base");
        continue;
      }
      if (pushed.coords() != want)
        out.push_back("pushforward of " + gen + ": computed " + combination_name(base_names, pushed.coords()) +
                      ", reference " + expr);
    }
    if (!found) out.push_back("pushforward of " + gen + ": no generator " + n + " in the computed table");
  }
  return out;
}

UniversalBundleCheck check_universal_bundles(const UniversalBundleTables& tables, const ReferenceTables& refs) {
  return UniversalBundleCheck{compare_with_reference(tables.e32, refs.cohomology.at("E32")),
                              compare_with_reference(tables.e32_hat, refs.cohomology.at("E32_hat"))};
}

const UniversalBundleTables& universal_bundle_tables_checked() {
  const UniversalBundleTables& t = universal_bundle_tables();
  UniversalBundleCheck c = check_universal_bundles(t, reference_tables());
  if (!c.ok()) {
    std::string msg = "universal bundle tables disagree with the reference:";
    for (const auto& s : c.e32) msg += "\n  E32 " + s;
    for (const auto& s : c.e32_hat) msg += "\n  E32_hat " + s;
    throw SelfTestMismatch(msg);
  }
  return t;
}

}  // namespace tdual
