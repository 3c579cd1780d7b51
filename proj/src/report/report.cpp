#include "tdual/report/report.hpp"

#include <algorithm>
#include <sstream>

#include "tdual/catalog/space_catalog.hpp"
#include "tdual/classifying/classifying_spaces.hpp"
#include "tdual/classifying/reference_tables.hpp"
#include "tdual/duality/tduality.hpp"
#include "tdual/errors.hpp"
#include "tdual/gysin/gysin.hpp"

namespace tdual {

using nlohmann::json;

bool ReportDocument::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw ValidationError("unknown format '" + s + "' (json, text)");
}

namespace {

json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long>());
}

json ints_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(ints_json(m.row(i)));
  return rows;
}

std::string coords_text(const std::vector<Int>& c) {
  if (c.size() == 1) return c[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].get_str();
  return s + ")";
}

json element_json(const GroupElement& e, const std::vector<std::string>& names) {
  return json{{"coords", ints_json(e.coords())}, {"name", combination_name(names, e.coords())}};
}

std::string element_text(const GroupElement& e, const std::vector<std::string>& names) {
  std::string c = coords_text(e.coords());
  std::string n = combination_name(names, e.coords());
  return c == n ? c : c + " = " + n;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string degree_key(int k) { return "H" + std::to_string(k); }

json table_json(const std::vector<FgGroup>& groups, const std::vector<std::vector<std::string>>& names) {
  json g = json::object(), n = json::object();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    g[degree_key(static_cast<int>(k))] = group_to_json(groups[k]);
    n[degree_key(static_cast<int>(k))] = names[k];
  }
  return json{{"groups", g}, {"generators", n}};
}

json table_json(const GradedCohomology& c) {
  return table_json(std::vector<FgGroup>(c.groups.begin(), c.groups.end()), c.names);
}

json table_json(const TotalSpaceCohomology& t) {
  std::vector<std::vector<std::string>> names;
  for (int k = 0; k <= t.max_degree(); ++k) names.push_back(t.names(k));
  return table_json(t.groups(), names);
}

void table_lines(const std::string& label, const std::vector<FgGroup>& groups,
                 const std::vector<std::vector<std::string>>& names, std::vector<std::string>& out) {
  std::vector<std::string> gs;
  for (const auto& g : groups) gs.push_back(g.to_string());
  out.push_back(label + ": H^0..H^" + std::to_string(groups.size() - 1) + " = " + join(gs, " | "));
  for (std::size_t k = 0; k < groups.size(); ++k)
    if (!names[k].empty())
      out.push_back("  H^" + std::to_string(k) + " = " + groups[k].to_string() + "  [" + join(names[k], ", ") + "]");
}

void table_lines(const std::string& label, const GradedCohomology& c, std::vector<std::string>& out) {
  table_lines(label, std::vector<FgGroup>(c.groups.begin(), c.groups.end()), c.names, out);
}

void table_lines(const std::string& label, const TotalSpaceCohomology& t, std::vector<std::string>& out) {
  std::vector<std::vector<std::string>> names;
  for (int k = 0; k <= t.max_degree(); ++k) names.push_back(t.names(k));
  table_lines(label, t.groups(), names, out);
}

void add_flag(ReportDocument& d, const std::string& f) {
  if (!d.has_flag(f)) d.flags.push_back(f);
}

GroupElement resolve(const ClassSpec& spec, const FgGroup& g, const std::vector<std::string>& names,
                     const std::string& field, const std::string& where) {
  if (!spec.given()) return GroupElement::zero(g);
  if (spec.coords) {
    if (spec.coords->size() != g.generator_count())
      throw ValidationError(field + ": expected " + std::to_string(g.generator_count()) + " coordinates for " + where +
                            " = " + g.to_string() + " [" + join(names, ", ") + "], got " +
                            std::to_string(spec.coords->size()));
    return GroupElement(g, *spec.coords);
  }
  try {
    return GroupElement(g, parse_combination(names, spec.expression));
  } catch (const ValidationError& e) {
    throw ValidationError(field + ": " + e.what() + " in " + where);
  }
}

struct Setup {
  CatalogSpace space;
  GradedCohomology base;
  CircleBundle bundle;
  TotalSpaceCohomology total;
};

Setup setup(const JobSpec& spec, int min_top) {
  CatalogSpace space = CatalogSpace::parse(spec.base);
  int top = spec.max_degree ? *spec.max_degree : default_max_degree(space) - 1;
  if (top < min_top) top = min_top;
  if (top + 1 > kCatalogMaxDegree)
    throw DegreeOverflow("max_degree " + std::to_string(top) + " needs base cohomology through degree " +
                         std::to_string(top + 1) + "; the catalog stops at " + std::to_string(kCatalogMaxDegree));
  GradedCohomology base = cohomology_of(space, top + 1);
  GroupElement e = resolve(spec.euler, base.group(2), base.generator_names(2), "euler", "H^2(" + space.name() + ")");
  CircleBundle bundle(base, e);
  TotalSpaceCohomology total = total_space_cohomology(bundle, top);
  return Setup{space, std::move(base), std::move(bundle), std::move(total)};
}

json triple_json(const Triple& t) {
  const GradedCohomology& w = t.bundle.base;
  return json{{"base", w.space},
              {"euler", element_json(t.bundle.euler, w.generator_names(2))},
              {"b", element_json(t.b, t.total.names(2))},
              {"flux", element_json(t.flux, t.total.names(3))},
              {"cohomology", table_json(t.total)},
              {"ambiguous_degrees", t.total.ambiguous_degrees()}};
}

json cosets_json(const CosetPartition& cp, const TotalSpaceCohomology& t) {
  json reps = nullptr;
  if (cp.representatives) {
    reps = json::array();
    for (const auto& r : *cp.representatives) reps.push_back(element_json(r, t.names(2)));
  }
  return json{{"generator", element_json(cp.generator, t.names(2))},
              {"quotient", group_to_json(cp.quotient.group)},
              {"projection", matrix_json(cp.quotient.projection.matrix())},
              {"section", matrix_json(cp.quotient.section)},
              {"representatives", reps}};
}

void run_dualize(const JobSpec& spec, ReportDocument& d) {
  Setup s = setup(spec, 3);
  const int top = s.total.max_degree();
  GroupElement b = resolve(spec.b, s.total.group(2), s.total.names(2), "b", "H^2 of the total space");
  GroupElement h = resolve(spec.flux, s.total.group(3), s.total.names(3), "flux", "H^3 of the total space");
  Triple t = make_triple(s.bundle, top, b.coords(), h.coords());
  d.result["source"] = triple_json(t);
  d.summary.push_back("base: " + s.base.space + (s.base.simply_connected ? "" : " (not simply connected)"));
  d.summary.push_back("source bundle class: " + element_text(t.bundle.euler, s.base.generator_names(2)));
  d.summary.push_back("source flux: " + element_text(t.flux, t.total.names(3)));
  d.summary.push_back("source b-class: " + element_text(t.b, t.total.names(2)));
  table_lines("source total space", t.total, d.summary);
  if (!t.total.ambiguous_degrees().empty()) add_flag(d, kFlagAmbiguousExtension);

  std::optional<DualityReport> maybe;
  try {
    maybe.emplace(dualize(t));
  } catch (const BNotLiftable& e) {
    add_flag(d, kFlagBNotLiftable);
    d.error = e.what();
    d.result["dual"] = nullptr;
    return;
  }
  const DualityReport& r = *maybe;
  d.result["dual"] = triple_json(r.dual);
  d.result["flux_ambiguity"] = json{{"group", group_to_json(r.flux_ambiguity.group)},
                                    {"inclusion", matrix_json(r.flux_ambiguity.inclusion.matrix())}};
  d.result["b_base"] = element_json(r.b_base, s.base.generator_names(2));
  json iso = nullptr;
  if (r.coset_iso) iso = matrix_json(r.coset_iso->matrix());
  const bool verified = verify_coset_isomorphism(t, r);
  d.result["cosets"] = json{{"source", cosets_json(r.source_cosets, t.total)},
                            {"target", cosets_json(r.target_cosets, r.dual.total)},
                            {"isomorphism", iso},
                            {"verified", verified}};

  d.summary.push_back("dual base bundle class: " + element_text(r.dual.bundle.euler, s.base.generator_names(2)));
  table_lines("dual total space", r.dual.total, d.summary);
  d.summary.push_back("dual flux: " + element_text(r.dual.flux, r.dual.total.names(3)) + " (modulo im q* = " +
                      r.flux_ambiguity.group.to_string() + ")");
  d.summary.push_back("dual b-class: " + element_text(r.dual.b, r.dual.total.names(2)) + " (coset representative)");
  d.summary.push_back("b-coset quotients: " + r.source_cosets.quotient.group.to_string() + " -> " +
                      r.target_cosets.quotient.group.to_string() +
                      (verified ? ", isomorphism verified" : ", isomorphism NOT verified"));
  for (const auto& f : r.flags) add_flag(d, f);
  for (const auto& n : r.notes) d.notes.push_back(n);
}

void run_cohomology(const JobSpec& spec, ReportDocument& d) {
  Setup s = setup(spec, 0);
  const TotalSpaceCohomology& t = s.total;
  json maps = json::object();
  for (int k = 0; k <= t.max_degree(); ++k)
    maps[degree_key(k)] = json{{"pullback", matrix_json(t.degree(k).pullback.matrix())},
                               {"pushforward", matrix_json(t.degree(k).pushforward.matrix())}};
  std::vector<std::string> failures = exactness_failures(s.bundle, t);
  d.result = json{{"base", json{{"space", s.base.space}, {"cohomology", table_json(s.base)}}},
                  {"euler", element_json(s.bundle.euler, s.base.generator_names(2))},
                  {"total", table_json(t)},
                  {"maps", maps},
                  {"ambiguous_degrees", t.ambiguous_degrees()},
                  {"exactness_failures", failures}};
  d.summary.push_back("bundle over " + s.base.space + " with euler class " +
                      element_text(s.bundle.euler, s.base.generator_names(2)));
  table_lines("base", s.base, d.summary);
  table_lines("total space", t, d.summary);
  d.summary.push_back(failures.empty() ? "Gysin sequence exact in every checked position"
                                       : "exactness failures: " + join(failures, "; "));
  if (!t.ambiguous_degrees().empty()) {
    add_flag(d, kFlagAmbiguousExtension);
    std::vector<std::string> ks;
    for (int k : t.ambiguous_degrees()) ks.push_back(std::to_string(k));
    d.notes.push_back("split form reported where the extension is not determined: degrees " + join(ks, ", "));
  }
}

void run_cosets(const JobSpec& spec, ReportDocument& d) {
  Setup s = setup(spec, spec.flux.given() ? 3 : 2);
  const TotalSpaceCohomology& t = s.total;
  GroupElement gen = GroupElement::zero(t.group(2));
  if (spec.generator.given()) {
    gen = resolve(spec.generator, t.group(2), t.names(2), "generator", "H^2 of the total space");
  } else if (spec.flux.given()) {
    GroupElement h = resolve(spec.flux, t.group(3), t.names(3), "flux", "H^3 of the total space");
    gen = pullback_of(t, 2, pushforward_of(t, 3, h));
  }
  CosetPartition cp = coset_partition(t, gen);
  d.result = json{{"ambient", group_to_json(t.group(2))}, {"ambient_generators", t.names(2)}, {"cosets", cosets_json(cp, t)}};
  d.summary.push_back("H^2 of the total space: " + t.group(2).to_string() + " [" + join(t.names(2), ", ") + "]");
  d.summary.push_back("generator: " + element_text(gen, t.names(2)));
  d.summary.push_back("quotient: " + cp.quotient.group.to_string());
  if (cp.representatives) {
    std::vector<std::string> reps;
    for (const auto& r : *cp.representatives) reps.push_back(combination_name(t.names(2), r.coords()));
    d.summary.push_back(std::to_string(reps.size()) + " cosets: " + join(reps, ", "));
  } else {
    d.summary.push_back("cosets not listed: quotient is infinite or larger than the enumeration limit");
  }
}

json action_json(const std::vector<DegreeAction>& acts) {
  json out = json::array();
  for (const auto& a : acts) {
    DegreeAction sq = a.source == a.target ? squared(a) : a;
    json j{{"degree", a.degree},
           {"source", a.source},
           {"target", a.target},
           {"matrix", matrix_json(a.matrix)},
           {"undetermined", a.undetermined()}};
    if (a.source == a.target) j["squared"] = json{{"matrix", matrix_json(sq.matrix)}, {"undetermined", sq.undetermined()}};
    out.push_back(j);
  }
  return out;
}

void action_lines(const std::string& label, const std::vector<DegreeAction>& acts, std::vector<std::string>& out) {
  for (const auto& a : acts) {
    std::vector<std::string> images;
    for (std::size_t j = 0; j < a.source.size(); ++j)
      images.push_back(a.source[j] + " -> " +
                       (a.determined[j] ? combination_name(a.target, a.matrix.column(j)) : std::string("?")));
    out.push_back(label + " H^" + std::to_string(a.degree) + ": " + (images.empty() ? "0" : join(images, ", ")));
  }
}

void run_tables(const JobSpec& spec, ReportDocument& d) {
  const ReferenceTables& refs = reference_tables();
  const std::string& which = spec.base;
  if (which == "R2" || which == "R32") {
    const GradedCohomology& c = which == "R2" ? r2_cohomology() : r32_cohomology();
    MappingTorusData data = which == "R2" ? r2_data() : r32_data();
    std::vector<std::string> diff = compare_with_reference(c, refs.cohomology.at(which));
    HomotopyTable pi;
    for (auto& h : homotopy_tables())
      if (h.space == which) pi = h;
    std::vector<std::string> pi_diff;
    if (pi.pi != refs.homotopy.at(which)) pi_diff.push_back("homotopy groups differ from the reference");
    if (pi.pi1_action_on_pi2 != refs.pi1_actions.at(which)) pi_diff.push_back("pi_1 action differs from the reference");
    json pis = json::object();
    for (std::size_t i = 0; i < pi.pi.size(); ++i) pis["pi" + std::to_string(i + 1)] = group_to_json(pi.pi[i]);
    json actions = json::array();
    for (const auto& a : data.actions) actions.push_back(matrix_json(a.automorphism().matrix()));
    d.result = json{{"space", which},
                    {"cohomology", table_json(c)},
                    {"cover", table_json(data.cover)},
                    {"cover_actions", actions},
                    {"ambiguous_degrees", mapping_torus_ambiguous_degrees(data)},
                    {"homotopy", json{{"groups", pis}, {"pi1_action_on_pi2", matrix_json(pi.pi1_action_on_pi2)}}},
                    {"reference_mismatches", diff},
                    {"homotopy_mismatches", pi_diff}};
    table_lines(which, c, d.summary);
    std::vector<std::string> ps;
    for (const auto& g : pi.pi) ps.push_back(g.to_string());
    d.summary.push_back("homotopy pi_1..pi_" + std::to_string(pi.pi.size()) + " = " + join(ps, " | "));
    for (const auto& m : diff) d.summary.push_back("differs from reference: " + m);
    for (const auto& m : pi_diff) d.summary.push_back("differs from reference: " + m);
    if (!diff.empty() || !pi_diff.empty()) add_flag(d, kFlagFixtureMismatch);
    return;
  }
  if (which == "E32" || which == "E32_hat") {
    const UniversalBundleTables& u = universal_bundle_tables();
    UniversalBundleTables ur = universal_bundle_tables(graded_from_reference("R32", refs.cohomology.at("R32")));
    UniversalBundleCheck c = check_universal_bundles(u, refs);
    UniversalBundleCheck cr = check_universal_bundles(ur, refs);
    auto one = [&](const UniversalBundle& b, const UniversalBundle& br, const std::vector<std::string>& diff,
                   const std::vector<std::string>& diff_r) {
      return json{{"euler", element_json(b.bundle.euler, b.bundle.base.generator_names(2))},
                  {"cohomology", table_json(b.total)},
                  {"reference_mismatches", diff},
                  {"over_reference_base", json{{"cohomology", table_json(br.total)}, {"reference_mismatches", diff_r}}}};
    };
    d.result = json{{"space", which}};
    if (which == "E32") d.result["E32"] = one(u.e32, ur.e32, c.e32, cr.e32);
    d.result["E32_hat"] = one(u.e32_hat, ur.e32_hat, c.e32_hat, cr.e32_hat);
    auto lines = [&](const UniversalBundle& b, const UniversalBundle& br, const std::vector<std::string>& diff,
                     const std::vector<std::string>& diff_r) {
      table_lines(b.name + " over computed R32", b.total, d.summary);
      for (const auto& m : diff) d.summary.push_back("  differs from reference: " + m);
      table_lines(b.name + " over reference R32 table", br.total, d.summary);
      for (const auto& m : diff_r) d.summary.push_back("  differs from reference: " + m);
      if (!diff.empty() || !diff_r.empty()) add_flag(d, kFlagFixtureMismatch);
    };
    if (which == "E32") lines(u.e32, ur.e32, c.e32, cr.e32);
    lines(u.e32_hat, ur.e32_hat, c.e32_hat, cr.e32_hat);
    return;
  }
  if (which == "T32") {
    T32Action t = t32_cohomology_action();
    d.result = json{{"space", which}, {"base", action_json(t.base)}, {"bundle", action_json(t.bundle)}};
    action_lines("R32", t.base, d.summary);
    action_lines("E32 -> E32_hat", t.bundle, d.summary);
    d.notes.push_back("'?' marks images not fixed by the available data");
    return;
  }
  throw ValidationError("tables: unknown space '" + which + "' (R2, R32, E32, E32_hat, T32)");
}

}  // namespace

json group_to_json(const FgGroup& g) {
  return json{{"rank", g.free_rank()}, {"torsion", ints_json(g.torsion())}};
}

FgGroup group_from_json(const json& j) {
  std::vector<Int> t;
  for (const auto& x : j.at("torsion")) t.push_back(int_from_json(x));
  return FgGroup(j.at("rank").get<std::size_t>(), std::move(t));
}

ReportDocument run_job(const JobSpec& spec) {
  ReportDocument d;
  d.input = spec.to_json();
  d.result = json::object();
  try {
    switch (spec.mode) {
      case JobMode::Dualize:
        run_dualize(spec, d);
        break;
      case JobMode::Cohomology:
        run_cohomology(spec, d);
        break;
      case JobMode::ClassifyingTables:
        run_tables(spec, d);
        break;
      case JobMode::CosetPartition:
        run_cosets(spec, d);
        break;
    }
  } catch (const ValidationError& e) {
    d.error = e.what();
  } catch (const UnknownSpace& e) {
    d.error = e.what();
  } catch (const DegreeOverflow& e) {
    d.error = e.what();
  } catch (const MismatchedGroups& e) {
    d.error = e.what();
  }
  return d;
}

json report_to_json(const ReportDocument& r) {
  return json{{"schema_version", kSchemaVersion},
              {"input", r.input},
              {"result", r.result},
              {"flags", r.flags},
              {"notes", r.notes},
              {"summary", r.summary},
              {"error", r.error ? json(*r.error) : json(nullptr)}};
}

ReportDocument report_from_json(const json& j) {
  if (j.at("schema_version") != kSchemaVersion) throw ValidationError("report: unsupported schema_version");
  ReportDocument r;
  r.input = j.at("input");
  r.result = j.at("result");
  r.flags = j.at("flags").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.summary = j.at("summary").get<std::vector<std::string>>();
  if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  return r;
}

namespace {

std::string text_of(const ReportDocument& r) {
  std::ostringstream os;
  std::string mode = r.input.value("mode", "dualize");
  os << "== " << mode << " " << r.input.value("base", "") << " ==\n";
  for (const auto& s : r.summary) os << s << "\n";
  os << "flags: " << (r.flags.empty() ? "none" : join(r.flags, ", ")) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (r.error) os << "error: " << *r.error << "\n";
  return os.str();
}

}  // namespace

std::string emit(const ReportDocument& report, Format format) {
  if (format == Format::Text) return text_of(report);
  return report_to_json(report).dump(2) + "\n";
}

std::string emit(const std::vector<ReportDocument>& reports, Format format) {
  if (reports.size() == 1) return emit(reports[0], format);
  if (format == Format::Text) {
    std::string s;
    for (std::size_t i = 0; i < reports.size(); ++i) s += (i ? "\n" : "") + text_of(reports[i]);
    return s;
  }
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return json{{"schema_version", kSchemaVersion}, {"reports", arr}}.dump(2) + "\n";
}

std::vector<ReportDocument> parse_reports(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
  std::vector<ReportDocument> out;
  if (j.contains("reports")) {
    if (j.at("schema_version") != kSchemaVersion) throw ValidationError("report: unsupported schema_version");
    for (const auto& r : j.at("reports")) out.push_back(report_from_json(r));
  } else {
    out.push_back(report_from_json(j));
  }
  return out;
}

}  // namespace tdual
