#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "doily/catalog.hpp"
#include "doily/census.hpp"
#include "doily/encoding.hpp"
#include "doily/hyperplanes.hpp"
#include "doily/structure_json.hpp"
#include "doily/symmetry.hpp"
#include "verification.hpp"

namespace doily::cli {

namespace {

struct Source {
  std::string catalog;
  std::string input;
};

void add_source_options(CLI::App* cmd, Source& source) {
  auto* catalog = cmd->add_option("--catalog", source.catalog, "desargues, doily or fano");
  auto* input = cmd->add_option("--input", source.input, "structure JSON file");
  catalog->excludes(input);
  input->excludes(catalog);
}

LabeledStructure load_source(const Source& source) {
  if (!source.catalog.empty()) {
    auto id = parse_catalog_name(source.catalog);
    if (!id) throw ValidationError("unknown catalog entry '" + source.catalog + "'");
    CatalogEntry entry = catalog_entry(*id);
    return {entry.structure, entry.labels};
  }
  if (!source.input.empty()) return load_structure(source.input);
  throw ValidationError("one of --catalog or --input is required");
}

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : (word.back() == 's' ? "es" : "s"));
}

std::string join(const std::vector<int>& values, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

int cmd_verify_paper(const std::string& json_path, bool long_run, const std::string& desargues_path,
                     std::ostream& out) {
  VerifyOptions options;
  options.long_run = long_run;
  if (!desargues_path.empty()) {
    options.desargues_override = load_structure(desargues_path).structure.renamed("desargues");
  }
  const VerificationReport report = verify_paper(options);
  for (const ClaimEntry& c : report.claims) {
    const char* tag = c.status == ClaimStatus::kPass      ? "PASS"
                      : c.status == ClaimStatus::kSkipped ? "SKIP"
                                                          : "FAIL";
    out << "[" << tag << "] " << c.id << ": " << c.description << "\n";
    if (c.status != ClaimStatus::kPass) {
      out << "       expected " << c.expected.dump() << "\n       observed " << c.observed.dump()
          << "\n";
    }
  }
  if (const ClaimEntry* census = report.find("hyperplane-census-15");
      census && census->observed.contains("summary")) {
    out << "hyperplanes: " << census->observed["total"] << " ("
        << census->observed["summary"].get<std::string>() << ")\n";
  }
  if (const ClaimEntry* failed = report.first_failure()) {
    out << "overall: FAIL (first failing claim: " << failed->id << ")\n";
  } else {
    out << "overall: PASS\n";
  }
  if (!json_path.empty()) write_text_file(json_path, render_json(report.to_json()));
  return report.overall() ? kExitOk : kExitClaimFailure;
}

int cmd_hyperplanes(const Source& source, const std::string& json_path, std::ostream& out) {
  const LabeledStructure loaded = load_source(source);
  const HyperplaneFamily family = enumerate_hyperplanes(loaded.structure);
  out << loaded.structure.name() << ": " << plural(family.size(), "hyperplane") << " ("
      << family.count(HyperplaneClass::kPerp) << " perp, "
      << family.count(HyperplaneClass::kTriangle) << " triangle, "
      << family.count(HyperplaneClass::kOther) << " other)\n";
  if (family.size() > 0) out << "id  size  class     points\n";
  for (const Hyperplane& h : family.members) {
    out << std::left << std::setw(4) << h.id << std::setw(6) << h.points.size() << std::setw(10)
        << class_name(h.kind) << join(h.points.members()) << "\n";
  }
  if (!json_path.empty()) write_text_file(json_path, render_json(family_to_json(family)));
  return kExitOk;
}

int cmd_encode(bool check_isomorphism, const std::string& export_path, std::ostream& out) {
  const CatalogEntry host = desargues();
  const DerivedGeometry d = build_derived(host);
  const ConfigurationCheck c = validate_configuration(d.structure);
  out << "derived geometry: " << d.structure.num_points() << " points / "
      << d.structure.num_lines() << " lines, " << c.line_size << " points per line, "
      << c.point_degree << " lines per point\n";
  out << "xor-closed triples: " << d.scan.xor_closed.size() << " (" << d.scan.accepted.size()
      << " accepted, " << d.scan.rejected.size() << " rejected by the non-collinear filter)\n";
  for (const Line& line : d.structure.lines()) out << "  line " << join(line) << "\n";

  nlohmann::json exported = derived_to_json(d);
  if (check_isomorphism) {
    const IsomorphismWitness w = certify_isomorphism(d, doily());
    out << "isomorphic to doily; witness: " << join(w.point_map) << "\n";
    exported["witness"] = w.point_map;
  }
  if (!export_path.empty()) write_text_file(export_path, render_json(exported));
  return kExitOk;
}

int cmd_enumerate(int v, const std::string& filter, bool long_run, const std::string& json_path,
                  std::ostream& out) {
  const CensusResult census = enumerate_v3(v, {.long_run = long_run});
  const CensusSummary summary = census_properties(census);
  out << "v=" << v << ": " << plural(census.total, "class") << "\n";

  std::vector<int> shown;
  if (filter == "flag-transitive") {
    shown = summary.flag_transitive;
  } else if (filter == "noncollinear-line") {
    shown = summary.noncollinear_line;
  } else {
    shown.resize(census.members.size());
    for (std::size_t i = 0; i < shown.size(); ++i) shown[i] = static_cast<int>(i);
  }
  if (!filter.empty()) out << plural(shown.size(), "class") << (shown.size() == 1 ? " matches" : " match") << " --filter " << filter << "\n";

  std::vector<CatalogEntry> catalog{desargues(), doily(), fano()};
  for (int i : shown) {
    const CensusMember& m = census.members[i];
    const MemberProperties& p = summary.per_member[i];
    out << "  " << m.structure.name() << "  flag-transitive=" << (p.flag_transitive ? "yes" : "no")
        << "  noncollinear-line=" << (p.noncollinear_triples_are_lines ? "yes" : "no")
        << "  connected=" << (p.connected ? "yes" : "no");
    for (const CatalogEntry& e : catalog) {
      if (e.structure.num_points() == v && find_isomorphism(m.structure, e.structure)) {
        out << "  isomorphic-to=" << catalog_name(e.id);
      }
    }
    out << "\n";
  }
  if (!json_path.empty()) write_text_file(json_path, render_json(census_to_json(census, summary)));
  return kExitOk;
}

int cmd_export(const Source& source, const std::string& format, const std::string& out_path,
               std::ostream& out) {
  const LabeledStructure loaded = load_source(source);
  std::string text;
  if (format == "json") {
    text = render_json(structure_to_json(loaded.structure, loaded.labels));
  } else if (format == "dot") {
    text = levi_dot(loaded.structure, loaded.labels);
  } else {
    throw CLI::ValidationError("--format", "unknown format '" + format + "'");
  }
  write_text_file(out_path, text);
  out << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

std::string levi_dot(const IncidenceStructure& s, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph \"" << s.name() << "\" {\n";
  for (int p = 0; p < s.num_points(); ++p) {
    const std::string label = p < static_cast<int>(labels.size()) ? labels[p] : std::to_string(p);
    out << "  p" << p << " [shape=circle, label=\"" << label << "\"];\n";
  }
  for (int l = 0; l < s.num_lines(); ++l) {
    out << "  l" << l << " [shape=box, label=\"L" << l << "\"];\n";
  }
  for (int l = 0; l < s.num_lines(); ++l) {
    for (int p : s.line(l)) out << "  p" << p << " -- l" << l << ";\n";
  }
  out << "}\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incidence-geometry verification toolkit", "doily"};
  app.require_subcommand(1);

  std::string json_path;
  bool long_run = false;
  std::string desargues_path;
  auto* verify = app.add_subcommand("verify-paper", "run every verification claim");
  verify->add_option("--json", json_path, "write the report as JSON");
  verify->add_flag("--long-run", long_run, "also run the 15_3 census claims");
  verify->add_option("--desargues-input", desargues_path,
                     "replace the catalog Desargues structure (test hook)")
      ->group("");

  Source hyper_source;
  std::string hyper_json;
  auto* hyper = app.add_subcommand("hyperplanes", "list geometric hyperplanes");
  add_source_options(hyper, hyper_source);
  hyper->add_option("--json", hyper_json, "write the family as JSON");

  bool check_iso = false;
  std::string encode_export;
  auto* encode = app.add_subcommand("encode", "build the hyperplane geometry of Desargues");
  encode->add_flag("--check-isomorphism", check_iso, "certify isomorphism with the doily");
  encode->add_option("--export", encode_export, "write the derived geometry as JSON");

  int v = 0;
  std::string filter;
  bool enum_long_run = false;
  std::string enum_json;
  auto* enumerate = app.add_subcommand("enumerate", "census of v_3 configurations");
  enumerate->add_option("--v", v, "number of points")->required();
  enumerate->add_option("--filter", filter, "flag-transitive or noncollinear-line")
      ->check(CLI::IsMember({"flag-transitive", "noncollinear-line"}));
  enumerate->add_flag("--long-run", enum_long_run, "allow v above 11");
  enumerate->add_option("--json", enum_json, "write the census as JSON");

  Source export_source;
  std::string format;
  std::string out_path;
  auto* exporter = app.add_subcommand("export", "write a structure as JSON or DOT");
  add_source_options(exporter, export_source);
  exporter->add_option("--format", format, "json or dot")->required();
  exporter->add_option("--out", out_path, "output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify_paper(json_path, long_run, desargues_path, out);
    if (*hyper) return cmd_hyperplanes(hyper_source, hyper_json, out);
    if (*encode) return cmd_encode(check_iso, encode_export, out);
    if (*enumerate) return cmd_enumerate(v, filter, enum_long_run, enum_json, out);
    if (*exporter) return cmd_export(export_source, format, out_path, out);
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitClaimFailure;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace doily::cli
