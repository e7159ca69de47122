#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "lie/chevalley.hpp"
#include "lie/controllability.hpp"
#include "lie/elements.hpp"
#include "lie/json_io.hpp"
#include "lie/lemma_lab.hpp"
#include "lie/rootsys.hpp"

namespace {

using lie::io::Json;

struct Options {
  std::string algebra;
  std::string input;
  std::string tolerance;
  std::string grid = "type=A..G,rank<=4,theta=all";
  std::string out;
  bool json = false;
  bool strict = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read input file " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::runtime_error("cannot write output file " + opt.out);
  out << payload;
}

Json parse_document(const Options& opt) {
  std::string text = read_input(opt.input);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(opt.input + ": " + e.what());
  }
}

/// Tolerance flag -> the JSON value the system schema uses.
Json tolerance_flag_value(const std::string& flag) {
  if (flag == "exact") return Json("exact");
  std::size_t used = 0;
  double eps = 0;
  try {
    eps = std::stod(flag, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("--tolerance must be 'exact' or a positive number, got '" + flag +
                                "'");
  }
  if (used != flag.size() || !(eps > 0)) {
    throw std::invalid_argument("--tolerance must be 'exact' or a positive number, got '" + flag +
                                "'");
  }
  return Json(eps);
}

lie::LieAlgebra build_algebra(const std::string& label) {
  return lie::LieAlgebra::build(lie::DynkinType::parse(label));
}

int run_roots(const Options& opt) {
  lie::RootSystem rs = lie::RootSystem::build(lie::DynkinType::parse(opt.algebra));
  if (opt.json) {
    Json doc = Json::object();
    doc["algebra"] = rs.type().to_string();
    doc["count"] = static_cast<int>(rs.positive_roots().size());
    Json list = Json::array();
    for (const lie::Root& r : rs.positive_roots()) list.push_back(r.to_string());
    doc["positive"] = std::move(list);
    emit(opt, doc.dump() + "\n");
    return 0;
  }
  std::ostringstream os;
  os << rs.type().to_string() << ": " << rs.positive_roots().size() << " positive roots\n";
  for (const lie::Root& r : rs.positive_roots()) {
    os << r.to_string() << " (height " << r.height() << ")\n";
  }
  emit(opt, os.str());
  return 0;
}

int run_algebra(const Options& opt) {
  lie::LieAlgebra lie = build_algebra(opt.algebra);
  const lie::RootSystem& rs = lie.roots();
  Json dominant = Json::array();
  for (const lie::Root& d : rs.dominant_roots()) dominant.push_back(d.to_string());
  if (opt.json) {
    Json doc = Json::object();
    doc["algebra"] = rs.type().to_string();
    doc["rank"] = rs.rank();
    doc["dim"] = lie.dim();
    doc["positive_roots"] = static_cast<int>(rs.positive_roots().size());
    doc["highest_root"] = rs.highest_root().to_string();
    doc["dominant_roots"] = std::move(dominant);
    doc["normalized_to_killing_ratio"] = lie::rat_to_string(lie.normalized_to_killing_ratio());
    emit(opt, doc.dump() + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "algebra: " << rs.type().to_string() << "\n"
     << "rank: " << rs.rank() << "\n"
     << "dim: " << lie.dim() << "\n"
     << "positive roots: " << rs.positive_roots().size() << "\n"
     << "highest root: " << rs.highest_root().to_string() << "\n"
     << "dominant roots:";
  for (const lie::Root& d : rs.dominant_roots()) os << " " << d.to_string();
  os << "\nnormalized form = " << lie::rat_to_string(lie.normalized_to_killing_ratio())
     << " * Killing-dual form\n";
  emit(opt, os.str());
  return 0;
}

int run_weyl_orbits(const Options& opt) {
  lie::RootSystem rs = lie::RootSystem::build(lie::DynkinType::parse(opt.algebra));
  std::vector<std::pair<lie::Root, std::vector<lie::Root>>> orbits;
  std::size_t covered = 0;
  for (const lie::Root& d : rs.dominant_roots()) {
    orbits.emplace_back(d, rs.weyl_orbit(d));
    covered += orbits.back().second.size();
  }
  if (covered != rs.all_roots().size()) {
    throw std::logic_error("orbits of the dominant roots do not partition the root set");
  }
  if (opt.json) {
    Json doc = Json::object();
    doc["algebra"] = rs.type().to_string();
    doc["count"] = static_cast<int>(orbits.size());
    Json list = Json::array();
    for (const auto& [rep, members] : orbits) {
      Json orbit = Json::object();
      orbit["representative"] = rep.to_string();
      orbit["size"] = static_cast<int>(members.size());
      Json roots = Json::array();
      for (const lie::Root& r : members) roots.push_back(r.to_string());
      orbit["roots"] = std::move(roots);
      list.push_back(std::move(orbit));
    }
    doc["orbits"] = std::move(list);
    emit(opt, doc.dump() + "\n");
    return 0;
  }
  std::ostringstream os;
  os << rs.type().to_string() << ": " << orbits.size() << " Weyl orbit(s)\n";
  for (const auto& [rep, members] : orbits) {
    os << "representative " << rep.to_string() << ", size " << members.size() << ":";
    for (const lie::Root& r : members) os << " " << r.to_string();
    os << "\n";
  }
  emit(opt, os.str());
  return 0;
}

int run_decompose(const Options& opt) {
  lie::LieAlgebra lie = build_algebra(opt.algebra);
  lie::TolerancePolicy policy = lie::TolerancePolicy::exact_mode();
  if (!opt.tolerance.empty()) {
    policy = lie::io::tolerance_from_json(tolerance_flag_value(opt.tolerance), "--tolerance");
  }
  Json doc = parse_document(opt);
  lie::AlgebraElement x = lie::io::element_from_json(lie, doc, policy, "");

  std::vector<std::string> flags;
  lie::FlagSink sink(&flags);
  bool in_cartan = lie::is_in_cartan(x, sink);
  Json element = lie::io::element_to_json(x);

  Json out = Json::object();
  out["algebra"] = lie.roots().type().to_string();
  out["in_cartan"] = in_cartan;
  out["cartan"] = element["cartan"];
  out["roots"] = element["roots"];
  if (in_cartan) {
    lie::Spectrum spec = lie::ad_spectrum(lie::cartan_part(x), sink);
    out["spectrum"] = lie::io::spectrum_to_json(spec, policy.exact);
  } else {
    out["spectrum"] = Json();
  }
  out["flags"] = flags;
  if (opt.json) {
    emit(opt, out.dump() + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "algebra: " << out["algebra"].get<std::string>() << "\n"
     << "in cartan: " << (in_cartan ? "yes" : "no") << "\n"
     << "cartan part: " << out["cartan"].dump() << "\n"
     << "root components: " << out["roots"].dump() << "\n";
  if (in_cartan) os << "spectrum: " << out["spectrum"].dump() << "\n";
  for (const std::string& f : flags) os << "flag: " << f << "\n";
  emit(opt, os.str());
  return 0;
}

std::string render_certificate_text(const lie::ctrl::Certificate& cert) {
  std::ostringstream os;
  os << "verdict: " << lie::ctrl::to_string(cert.verdict) << "\n";
  if (!cert.theorem_used.empty()) os << "theorem: " << cert.theorem_used << "\n";
  if (cert.witness_root) os << "witness: " << cert.witness_root->to_string() << "\n";
  os << "bracket closure: generated " << cert.larc.generated_dim << " of " << cert.larc.dim_g;
  if (!cert.larc.trace.empty()) {
    os << " (rank trace";
    for (int r : cert.larc.trace) os << " " << r;
    os << ")";
  }
  os << "\nchecklist:\n";
  for (const auto& item : cert.checklist) {
    os << "  [" << (item.passed ? "pass" : "fail") << "] " << item.condition << ": "
       << item.evidence << "\n";
  }
  if (!cert.confidence_flags.empty()) {
    os << "flags:\n";
    for (const auto& f : cert.confidence_flags) os << "  " << f << "\n";
  }
  if (!cert.inference.empty()) {
    os << "inference:\n";
    for (const auto& line : cert.inference) os << "  " << line << "\n";
  }
  return os.str();
}

int run_check(const Options& opt) {
  Json doc = parse_document(opt);
  if (!opt.tolerance.empty()) doc["tolerance"] = tolerance_flag_value(opt.tolerance);

  lie::DynkinType type =
      opt.algebra.empty() ? lie::io::system_type(doc) : lie::DynkinType::parse(opt.algebra);
  lie::LieAlgebra lie = lie::LieAlgebra::build(type);
  lie::ctrl::SystemSpec sys = lie::io::system_from_json(lie, doc);
  lie::ctrl::Certificate cert = lie::ctrl::decide(sys);

  if (opt.json) {
    emit(opt, lie::io::certificate_to_json(lie, cert, sys.policy).dump() + "\n");
  } else {
    emit(opt, render_certificate_text(cert));
  }
  if (opt.strict && (cert.verdict == lie::ctrl::Verdict::INCONCLUSIVE ||
                     cert.verdict == lie::ctrl::Verdict::NOT_CONTROLLABLE)) {
    return 1;
  }
  return 0;
}

int run_verify_lemmas(const Options& opt) {
  lie::lab::GridSpec grid = lie::lab::GridSpec::parse(opt.grid);
  std::vector<lie::lab::LemmaReport> reports = lie::lab::run_all(grid);
  int failures = 0;
  for (const auto& rep : reports) failures += rep.pass ? 0 : 1;

  if (opt.json) {
    emit(opt, lie::io::reports_to_json(reports).dump() + "\n");
  } else {
    // Aggregate in first-seen order so the summary is deterministic.
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, int>> counts;
    for (const auto& rep : reports) {
      if (!counts.count(rep.lemma)) order.push_back(rep.lemma);
      auto& c = counts[rep.lemma];
      (rep.pass ? c.first : c.second)++;
    }
    std::ostringstream os;
    os << "grid: " << opt.grid << "\n"
       << "reports: " << reports.size() << ", failures: " << failures << "\n";
    for (const std::string& lemma : order) {
      os << "  " << lemma << ": " << counts[lemma].first << " pass, " << counts[lemma].second
         << " fail\n";
    }
    if (failures == 0) {
      os << "all lemmas hold\n";
    } else {
      for (const auto& rep : reports) {
        if (!rep.pass) {
          os << "FAIL " << rep.lemma << " " << rep.algebra << " " << rep.params << ": "
             << rep.counterexample << "\n";
        }
      }
    }
    emit(opt, os.str());
  }
  return failures > 0 && opt.strict ? 1 : 0;
}

int run_dump_constants(const Options& opt) {
  lie::LieAlgebra lie = build_algebra(opt.algebra);
  std::ostringstream os;
  lie.dump_constants(os);
  emit(opt, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Chevalley-basis toolkit: root systems, bilinear-system "
      "controllability certificates, and flag-geometry lemma checks."};
  app.require_subcommand(1);
  Options opt;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "write the report to this file instead of stdout");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit a JSON document instead of text");
  };
  auto add_algebra = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--algebra", opt.algebra, "Dynkin label, e.g. A2, G2, E8");
    if (required) o->required();
  };

  CLI::App* roots = app.add_subcommand("roots", "list the positive roots");
  add_algebra(roots, true);
  add_json(roots);
  add_out(roots);

  CLI::App* algebra = app.add_subcommand("algebra", "summarize the built algebra");
  add_algebra(algebra, true);
  add_json(algebra);
  add_out(algebra);

  CLI::App* orbits = app.add_subcommand("weyl-orbits", "list the Weyl orbits of the root set");
  add_algebra(orbits, true);
  add_json(orbits);
  add_out(orbits);

  CLI::App* decompose =
      app.add_subcommand("decompose", "read an element document and print its decomposition");
  add_algebra(decompose, true);
  decompose->add_option("--input", opt.input, "element JSON file, or - for stdin")->required();
  decompose->add_option("--tolerance", opt.tolerance, "'exact' or a positive epsilon");
  add_json(decompose);
  add_out(decompose);

  CLI::App* check =
      app.add_subcommand("check", "decide controllability for a system document");
  add_algebra(check, false);
  check->add_option("--input", opt.input, "system JSON file, or - for stdin")->required();
  check->add_option("--tolerance", opt.tolerance,
                    "override the document's tolerance: 'exact' or a positive epsilon");
  check->add_flag("--strict", opt.strict,
                  "exit 1 when the verdict is INCONCLUSIVE or NOT_CONTROLLABLE");
  add_json(check);
  add_out(check);

  CLI::App* lemmas = app.add_subcommand("verify-lemmas", "run the lemma grid");
  lemmas->add_option("--grid", opt.grid, "grid description, e.g. type=A..G,rank<=4,theta=all");
  lemmas->add_flag("--strict", opt.strict, "exit 1 when any lemma fails");
  add_json(lemmas);
  add_out(lemmas);

  CLI::App* dump = app.add_subcommand("dump-constants",
                                      "dump all structure constants in the line format");
  add_algebra(dump, true);
  add_out(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return run_roots(opt);
    if (algebra->parsed()) return run_algebra(opt);
    if (orbits->parsed()) return run_weyl_orbits(opt);
    if (decompose->parsed()) return run_decompose(opt);
    if (check->parsed()) return run_check(opt);
    if (lemmas->parsed()) return run_verify_lemmas(opt);
    if (dump->parsed()) return run_dump_constants(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
