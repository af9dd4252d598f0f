// qrefl: list the catalog, solve an entry, or run a verification table.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <regex>

#include "qrefl/catalog.hpp"
#include "qrefl/error.hpp"
#include "qrefl/verify.hpp"

namespace {

using namespace qrefl;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Range {
  int lo = 2;
  int hi = 12;
};

Range parse_range(const std::string& text) {
  static const std::regex re(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorKind::BadParameter, "--n-range expects LO..HI");
  Range r{std::stoi(m[1]), std::stoi(m[2])};
  if (r.lo > r.hi) throw Error(ErrorKind::BadParameter, "--n-range has LO > HI");
  return r;
}

json entry_json(const CatalogEntry& e) {
  json gens = json::array();
  for (const auto& g : e.generators) gens.push_back(format(g));
  json j{{"id", e.id.str()},
         {"family", to_string(e.id.family)},
         {"params", e.id.params},
         {"generators", gens},
         {"expected_order", e.expected_order},
         {"expected_reflection_count", e.expected_reflection_count},
         {"expected_solutions", to_json(e.expected_solutions)},
         {"notes", e.notes}};
  if (e.expected_L_size) j["L_size"] = *e.expected_L_size;
  if (e.expected_H_size) j["H_size"] = *e.expected_H_size;
  return j;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadParameter, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Systems of imprimitivity of rank-two reflection groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string n_range = "2..12";
  double eps = 1e-9;
  std::string fmt = "text";
  std::size_t cap = kDefaultClosureCap;
  std::string output;
  bool serial = false;
  app.add_option("--n-range", n_range, "parameter range LO..HI for parametric families")->capture_default_str();
  app.add_option("--tolerance", eps, "comparison tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", fmt, "text or structured (JSON)")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--cap", cap, "closure size limit")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--output", output, "write the report to a file instead of stdout");
  app.add_flag("--serial", serial, "evaluate batch entries one at a time");

  auto* cmd_catalog = app.add_subcommand("catalog", "list catalog entries with expected values");
  std::string filter = "all";
  int single_n = 0;
  cmd_catalog->add_option("filter", filter, "all, Dn, Gnp2, ST, Gnabr or GKLH")->capture_default_str();
  cmd_catalog->add_option("--n", single_n, "restrict to one n (dicyclic parameter for GKLH)");

  auto* cmd_solve = app.add_subcommand("solve", "solve one entry and compare with its expected systems");
  std::string id;
  cmd_solve->add_option("id", id, "e.g. D(7), G(4,2,2), ST12, G(2,1,1,2), GT(L12,C2), G(D4,D4,D2)")
      ->required();

  auto* cmd_verify = app.add_subcommand("verify", "run one verification table");
  std::string table;
  cmd_verify->add_option("table", table)->required()->check(CLI::IsMember(verify_table_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool structured = fmt == "structured";
  VerifyOptions opts;
  try {
    const Range r = parse_range(n_range);
    opts.n_lo = r.lo;
    opts.n_hi = r.hi;
    opts.tolerance = eps;
    opts.cap = cap;
    opts.parallel = !serial;
    set_tolerance(eps);

    if (*cmd_catalog) {
      std::optional<Family> family;
      if (filter != "all") {
        family = family_from_string(filter);
        if (!family) throw Error(ErrorKind::BadParameter, "unknown filter '" + filter + "'");
      }
      CatalogOptions copts{opts.n_lo, opts.n_hi, 4};
      if (single_n > 0) {
        if (family == Family::GKLH) {
          copts.dicyclic_n = single_n;
        } else {
          copts.n_lo = copts.n_hi = single_n;
        }
      }
      const auto entries = catalog(family, copts);
      if (structured) {
        json arr = json::array();
        for (const auto& e : entries) arr.push_back(entry_json(e));
        emit(arr.dump(2) + "\n", output);
      } else {
        std::string text;
        for (const auto& e : entries) {
          text += e.id.str() + "  order " + std::to_string(e.expected_order) + "  reflections " +
                  std::to_string(e.expected_reflection_count) + "  systems " + e.expected_solutions.render() +
                  "\n";
        }
        text += std::to_string(entries.size()) + " entries\n";
        emit(text, output);
      }
      return kPass;
    }

    if (*cmd_solve) {
      CatalogEntry entry;
      try {
        entry = make_entry(id);
      } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
      }
      const Report report = solve_report(entry, opts);
      emit(print_report(report, structured), output);
      return report.passed() ? kPass : kMismatch;
    }

    const auto reports = verify_table(table, opts);
    emit(print_reports(reports, structured), output);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
    return ok ? kPass : kMismatch;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ErrorKind::BadParameter ? kUsage : kMismatch;
  }
}
