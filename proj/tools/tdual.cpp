#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdual/catalog/space_catalog.hpp"
#include "tdual/errors.hpp"
#include "tdual/report/batch.hpp"

using namespace tdual;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitConjecture = 3;

struct Options {
  std::string format = "text";
  std::optional<int> max_degree;
  bool strict = false;
};

int finish(const std::vector<ReportDocument>& reports, const Options& o) {
  std::cout << emit(reports, parse_format(o.format));
  for (const auto& r : reports)
    if (r.error) return kExitValidation;
  if (o.strict)
    for (const auto& r : reports)
      if (r.has_flag("CONJECTURE")) return kExitConjecture;
  return kExitOk;
}

ClassSpec class_arg(const std::string& s) { return s.empty() ? ClassSpec{} : ClassSpec::parse_text(s); }

std::string catalog_listing(const std::string& name) {
  CatalogSpace s = CatalogSpace::parse(name);
  GradedCohomology g = cohomology_of(s);
  std::ostringstream os;
  os << s.name() << (s.simply_connected() ? "" : " (not simply connected)") << ", dimension " << s.dimension() << "\n";
  for (int k = 0; k <= g.max_degree; ++k) {
    os << "  H^" << k << " = " << g.group(k).to_string();
    if (!g.generator_names(k).empty()) {
      os << "  [";
      for (std::size_t i = 0; i < g.generator_names(k).size(); ++i) os << (i ? ", " : "") << g.generator_names(k)[i];
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tdual: exact T-duality of circle bundles with H-flux and B-class"};
  app.require_subcommand(1);
  Options o;
  std::string fmt_help = "Output format: json or text";
  app.add_option("--format", o.format, fmt_help)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--max-degree", o.max_degree, "Highest total-space degree to compute");
  app.add_flag("--strict", o.strict, "Exit 3 when a result is only conjectural (non simply connected base)");

  std::string jobfile;
  auto* run = app.add_subcommand("run", "Run every job in a JSON job file");
  run->add_option("jobfile", jobfile, "Job file")->required();

  std::string base, euler, flux, b, generator;
  auto* dual = app.add_subcommand("dualize", "T-dualize a triple over a catalog space");
  auto* coh = app.add_subcommand("cohomology", "Total-space cohomology of a circle bundle");
  auto* cos = app.add_subcommand("cosets", "Partition H^2 of the total space into cosets");
  for (auto* sc : {dual, coh, cos}) {
    sc->add_option("--base", base, "Catalog space (point, S<n>, T2, Sigma<g>, RP<n>, CP<n>, KZ2_<n>)")->required();
    sc->add_option("--euler", euler, "Euler class: coordinates (\"1,0\") or expression (\"2*vol\")");
  }
  dual->add_option("--flux", flux, "H-flux in H^3 of the total space");
  dual->add_option("--b", b, "B-class in H^2 of the total space");
  cos->add_option("--flux", flux, "Use p*p_!(H) as the coset generator");
  cos->add_option("--generator", generator, "Coset generator in H^2 of the total space");

  std::string table;
  auto* tables = app.add_subcommand("tables", "Classifying-space tables");
  tables->add_option("space", table, "R2, R32, E32, E32_hat or T32")
      ->required()
      ->check(CLI::IsMember({"R2", "R32", "E32", "E32_hat", "T32"}));

  std::string space;
  auto* catalog = app.add_subcommand("catalog", "Generator order of a catalog space");
  catalog->add_option("space", space, "Catalog space")->required();

  for (auto* sc : {run, dual, coh, cos, tables, catalog}) {
    sc->add_option("--format", o.format, fmt_help)->check(CLI::IsMember({"json", "text"}));
    sc->add_option("--max-degree", o.max_degree, "Highest total-space degree to compute");
    sc->add_flag("--strict", o.strict, "Exit 3 on conjectural results");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*catalog) {
      std::cout << catalog_listing(space);
      return kExitOk;
    }
    std::vector<JobSpec> jobs;
    if (*run) {
      std::ifstream in(jobfile);
      if (!in) throw ValidationError("cannot read job file " + jobfile);
      std::stringstream ss;
      ss << in.rdbuf();
      jobs = parse_jobs_text(ss.str());
      if (o.max_degree)
        for (auto& j : jobs)
          if (!j.max_degree) j.max_degree = o.max_degree;
    } else {
      JobSpec j;
      j.base = *tables ? table : base;
      j.mode = *dual ? JobMode::Dualize
               : *coh ? JobMode::Cohomology
               : *cos ? JobMode::CosetPartition
                      : JobMode::ClassifyingTables;
      j.euler = class_arg(euler);
      j.flux = class_arg(flux);
      j.b = class_arg(b);
      j.generator = class_arg(generator);
      j.max_degree = o.max_degree;
      jobs.push_back(std::move(j));
    }
    return finish(run_jobs(jobs), o);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnknownSpace& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
