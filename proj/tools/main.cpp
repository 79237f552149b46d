#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybfox/fox.hpp"
#include "ybfox/model_file.hpp"
#include "ybfox/presets.hpp"
#include "ybfox/solution.hpp"
#include "ybfox/wada.hpp"

namespace {

using nlohmann::ordered_json;

enum class Format { human, structured };

struct CommonOpts {
  std::string format = "human";
  Format fmt() const { return format == "structured" ? Format::structured : Format::human; }
};

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ybfox::ModelError("cannot open output file: " + out_path);
  out << text;
}

std::pair<int, int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw ybfox::ModelError("range must be written lo..hi, got '" + text + "'");
  int lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    const std::string hi_text = text.substr(dots + 2);
    hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ybfox::ModelError("range must be written lo..hi, got '" + text + "'");
  }
  if (lo > hi) throw ybfox::ModelError("empty range " + text);
  if (lo < -100 || hi > 100) throw ybfox::ModelError("range exponents must stay within -100..100");
  return {lo, hi};
}

ordered_json report_json(const ybfox::RelationReport& r) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"id", e.id},
                       {"holds", e.holds},
                       {"required", e.required},
                       {"lhs", e.lhs},
                       {"rhs", e.rhs}});
  ordered_json notes = ordered_json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return {{"entries", std::move(entries)},
          {"notes", std::move(notes)},
          {"ok", r.all_required_hold()}};
}

// ---------------------------------------------------------------- derive

struct DeriveOpts {
  std::string word;
  std::string generator;
  std::string alphabet = "x,y";
  CommonOpts common;
};

int run_derive(const DeriveOpts& o) {
  std::vector<std::string> names;
  std::stringstream ss(o.alphabet);
  for (std::string part; std::getline(ss, part, ',');) names.push_back(part);
  const auto alphabet = ybfox::Alphabet::make(names);

  int gen = -1;
  for (int i = 0; i < alphabet->size(); ++i)
    if (alphabet->name(i) == o.generator) gen = i;
  if (gen < 0)
    throw ybfox::ParseError("generator '" + o.generator + "' is not in the alphabet", 0);

  const ybfox::FreeWord w = ybfox::parse_word(o.word, alphabet);
  const std::string result = ybfox::format_element(ybfox::fox_derivative(w, gen));
  if (o.common.fmt() == Format::structured) {
    const ordered_json doc = {{"subcommand", "derive"},
                              {"word", ybfox::format_word(w)},
                              {"generator", o.generator},
                              {"derivative", result}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << result << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  std::string u, v;
  std::string mode = "all";
  CommonOpts common;
};

int run_verify(const VerifyOpts& o) {
  const ybfox::WadaPair pair(ybfox::parse_word(o.u, ybfox::Alphabet::rank2()),
                             ybfox::parse_word(o.v, ybfox::Alphabet::rank2()));

  ybfox::RelationReport combined;
  bool pass = true;
  if (o.mode == "braid" || o.mode == "all") {
    const auto r = ybfox::verify_braid_relations(pair);
    pass = pass && r.all_required_hold();
    combined.append(r);
  }
  if (o.mode == "lemma1" || o.mode == "all") {
    const auto r = ybfox::verify_lemma1(pair);
    pass = pass && r.all_required_hold();
    combined.append(r);
  }
  if (o.mode == "rack" || o.mode == "all") {
    ybfox::RelationReport r = ybfox::rack_check(pair);
    if (o.mode == "all") {
      // informational in combined mode: a braid pair need not be a rack
      for (auto& e : r.entries) e.required = false;
    } else {
      pass = pass && r.all_required_hold();
    }
    combined.append(r);
  }

  if (o.common.fmt() == Format::structured)
    std::cout << ybfox::render_report_json(combined) << "\n";
  else
    std::cout << ybfox::render_report_text(combined);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- catalog

struct CatalogOpts {
  std::string m_range = "-2..2";
  CommonOpts common;
};

int run_catalog(const CatalogOpts& o) {
  const auto [lo, hi] = parse_m_range(o.m_range);
  const auto pairs = ybfox::wada_catalog(lo, hi);
  bool pass = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  for (const auto& p : pairs) {
    const bool ok = ybfox::verify_braid_relations(p).all_required_hold();
    pass = pass && ok;
    if (o.common.fmt() == Format::structured)
      rows.push_back({{"label", p.label},
                      {"u", ybfox::format_word(p.u)},
                      {"v", ybfox::format_word(p.v)},
                      {"braid", ok ? "PASS" : "FAIL"}});
    else
      text << p.label << "  (" << ybfox::format_word(p.u) << ", " << ybfox::format_word(p.v)
           << ")  braid-" << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (o.common.fmt() == Format::structured) {
    const ordered_json doc = {{"subcommand", "catalog"}, {"pairs", std::move(rows)}, {"ok", pass}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- models

struct ModelOpts {
  std::string pair_text;
  std::string preset;
  std::string model_file;
  bool unchecked = false;
};

void add_model_flags(CLI::App* cmd, ModelOpts& o) {
  cmd->add_option("--pair", o.pair_text, "Pair \"u,v\" in the word grammar");
  auto* preset = cmd->add_option("--preset", o.preset, "Model preset <group>:<module>");
  auto* file = cmd->add_option("--model-file", o.model_file, "Model description file");
  preset->excludes(file);
  cmd->add_flag("--unchecked", o.unchecked,
                "Skip the braid-relation gate (negative experiments)");
}

struct BuiltModel {
  std::string label;
  ybfox::WadaPair pair;
  ybfox::FiniteGroup group;
  ybfox::GModule module;
};

BuiltModel resolve_model(const ModelOpts& o) {
  std::optional<ybfox::WadaPair> pair;
  if (!o.pair_text.empty()) pair = ybfox::parse_pair(o.pair_text);

  if (!o.preset.empty()) {
    ybfox::Preset p = ybfox::parse_preset(o.preset);
    if (!pair) throw ybfox::ModelError("a preset model needs --pair \"u,v\"");
    return {p.name, std::move(*pair), std::move(p.group), std::move(p.module)};
  }
  if (!o.model_file.empty()) {
    ybfox::ModelFile f = ybfox::load_model_file(o.model_file);
    if (!pair) pair = f.pair;
    if (!pair)
      throw ybfox::ModelError("model file has no pair section; pass --pair \"u,v\"");
    if (!f.module)
      throw ybfox::ModelError("model file has no module section");
    return {o.model_file, std::move(*pair), std::move(f.group), std::move(*f.module)};
  }
  throw ybfox::ModelError("no model: pass --preset or --model-file");
}

// ---------------------------------------------------------------- build

struct BuildOpts {
  ModelOpts model;
  std::string out_path;
};

int run_build(const BuildOpts& o) {
  const BuiltModel m = resolve_model(o.model);
  const ybfox::ExtendedSolution s =
      ybfox::extended_solution(m.pair, m.group, m.module, o.model.unchecked);
  std::ostringstream body;
  ybfox::write_solution(s, body);
  emit(body.str(), o.out_path);
  if (!o.out_path.empty())
    std::cout << "wrote " << o.out_path << ": |G|=" << m.group.order()
              << " m=" << m.module.modulus() << " k=" << m.module.rank()
              << " carrier=" << s.map.carrier << " pairs=" << s.map.out.size() << "\n";
  return 0;
}

// ---------------------------------------------------------------- check

struct CheckOpts {
  std::string file;
  ModelOpts model;
  bool verbose = false;
  long long budget = ybfox::kDefaultTripleBudget;
  CommonOpts common;
};

std::string point_str(long long p, int m, int k) {
  int g;
  std::vector<int> vec;
  ybfox::decode_point(p, m, k, g, vec);
  std::string s = std::to_string(g) + ":(";
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vec[i]);
  }
  return s + ")";
}

int run_check(const CheckOpts& o) {
  ybfox::SquareMap map;
  int n = 0, m = 0, k = 0;
  std::optional<ybfox::ExtendedSolution> ext;
  std::string source;

  if (!o.file.empty()) {
    if (o.verbose)
      throw ybfox::ModelError(
          "--verbose recomputes the table from a pair and model; it cannot be used with a "
          "solution file");
    std::ifstream in(o.file);
    if (!in) throw ybfox::ModelError("cannot open solution file: " + o.file);
    ybfox::SolutionFile f = ybfox::read_solution(in);
    map = std::move(f.map);
    n = f.group_order;
    m = f.modulus;
    k = f.rank;
    source = o.file;
  } else {
    BuiltModel built = resolve_model(o.model);
    ext = ybfox::extended_solution(built.pair, built.group, built.module, o.model.unchecked);
    map = ext->map;
    n = built.group.order();
    m = built.module.modulus();
    k = built.module.rank();
    source = built.label + " pair (" + ybfox::format_word(built.pair.u) + ", " +
             ybfox::format_word(built.pair.v) + ")";
  }

  const ybfox::SybeVerdict verdict = ybfox::check_sybe(map, o.budget);
  const ybfox::BijectivityVerdict bij = ybfox::check_bijective(map);
  std::optional<ybfox::SybeVerdict> decomposition;
  if (o.verbose && ext) decomposition = ybfox::check_sybe_verbose(*ext, o.budget);

  const bool pass = verdict.pass && (!decomposition || decomposition->pass);

  auto points = [&](const std::array<long long, 3>& t) {
    return point_str(t[0], m, k) + " " + point_str(t[1], m, k) + " " + point_str(t[2], m, k);
  };

  if (o.common.fmt() == Format::structured) {
    ordered_json doc = {{"subcommand", "check"},
                        {"source", source},
                        {"group_order", n},
                        {"modulus", m},
                        {"rank", k},
                        {"carrier", map.carrier},
                        {"triples", verdict.triples}};
    ordered_json sybe = {{"pass", verdict.pass}};
    if (!verdict.pass) {
      sybe["witness"] = verdict.witness;
      sybe["lhs"] = verdict.lhs;
      sybe["rhs"] = verdict.rhs;
    }
    doc["sybe"] = std::move(sybe);
    ordered_json bijective = {{"pass", bij.bijective}};
    if (!bij.bijective) {
      bijective["first_input"] = bij.first_input;
      bijective["second_input"] = bij.second_input;
    }
    doc["bijective"] = std::move(bijective);
    if (decomposition) {
      ordered_json d = {{"pass", decomposition->pass}};
      if (!decomposition->pass) {
        d["witness"] = decomposition->witness;
        d["detail"] = decomposition->detail;
      }
      doc["decomposition"] = std::move(d);
    }
    doc["ok"] = pass;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "source: " << source << "\n";
    std::cout << "carrier: " << map.carrier << " (|G|=" << n << " m=" << m << " k=" << k
              << ")\n";
    std::cout << "triples: " << verdict.triples << "\n";
    std::cout << "sybe: " << (verdict.pass ? "PASS" : "FAIL") << "\n";
    if (!verdict.pass) {
      std::cout << "witness: " << points(verdict.witness) << "\n";
      std::cout << "lhs: " << points(verdict.lhs) << "\n";
      std::cout << "rhs: " << points(verdict.rhs) << "\n";
    }
    std::cout << "bijective: " << (bij.bijective ? "yes" : "no") << "\n";
    if (!bij.bijective)
      std::cout << "collision: (" << bij.first_input[0] << "," << bij.first_input[1] << ") and ("
                << bij.second_input[0] << "," << bij.second_input[1] << ")\n";
    if (decomposition) {
      std::cout << "decomposition: " << (decomposition->pass ? "PASS" : "FAIL");
      if (decomposition->pass)
        std::cout << " (A=A', B=B', C=C' on all triples)";
      std::cout << "\n";
      if (!decomposition->pass)
        std::cout << "decomposition witness: " << points(decomposition->witness) << "\n"
                  << "decomposition detail: " << decomposition->detail << "\n";
    }
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- export-report

struct ExportOpts {
  std::string m_range = "-2..2";
  std::string out_path;
  CommonOpts common;
};

int run_export_report(const ExportOpts& o) {
  const auto [lo, hi] = parse_m_range(o.m_range);
  const auto pairs = ybfox::wada_catalog(lo, hi);
  bool pass = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  for (const auto& p : pairs) {
    const auto braid = ybfox::verify_braid_relations(p);
    const auto lemma = ybfox::verify_lemma1(p);
    const auto rack = ybfox::rack_check(p);
    pass = pass && braid.all_required_hold() && lemma.all_required_hold();
    if (o.common.fmt() == Format::structured) {
      rows.push_back({{"label", p.label},
                      {"u", ybfox::format_word(p.u)},
                      {"v", ybfox::format_word(p.v)},
                      {"braid", report_json(braid)},
                      {"lemma1", report_json(lemma)},
                      {"rack", report_json(rack)}});
    } else {
      text << "== " << p.label << " (" << ybfox::format_word(p.u) << ", "
           << ybfox::format_word(p.v) << ") ==\n";
      text << ybfox::render_report_text(braid);
      text << ybfox::render_report_text(lemma);
      text << ybfox::render_report_text(rack);
    }
  }
  std::string body;
  if (o.common.fmt() == Format::structured) {
    const ordered_json doc = {
        {"subcommand", "export-report"}, {"pairs", std::move(rows)}, {"ok", pass}};
    body = doc.dump(2) + "\n";
  } else {
    body = text.str();
  }
  emit(body, o.out_path);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wada-pair calculus: free derivatives, braid/rack verification, and "
               "exhaustive Yang-Baxter checks on finite models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ybfox 0.1.0");

  DeriveOpts derive_opts;
  auto* derive = app.add_subcommand("derive", "Free derivative of a word");
  derive->add_option("word", derive_opts.word, "Word in the word grammar")->required();
  derive->add_option("generator", derive_opts.generator, "Generator to differentiate by")
      ->required();
  derive->add_option("--alphabet", derive_opts.alphabet, "Comma-separated generator names")
      ->capture_default_str();
  add_format_flag(derive, derive_opts.common);

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "Check pair identities");
  verify->add_option("u", verify_opts.u, "u word over (x, y)")->required();
  verify->add_option("v", verify_opts.v, "v word over (x, y)")->required();
  verify->add_option("--mode", verify_opts.mode, "Which identity family")
      ->check(CLI::IsMember({"braid", "lemma1", "rack", "all"}))
      ->capture_default_str();
  add_format_flag(verify, verify_opts.common);

  CatalogOpts catalog_opts;
  auto* catalog = app.add_subcommand("catalog", "List the classified pairs");
  catalog->add_option("--m", catalog_opts.m_range, "Family exponent range lo..hi")
      ->capture_default_str();
  add_format_flag(catalog, catalog_opts.common);

  BuildOpts build_opts;
  auto* build = app.add_subcommand("build", "Tabulate an extended solution");
  add_model_flags(build, build_opts.model);
  build->add_option("--out", build_opts.out_path, "Output file (stdout when omitted)");

  CheckOpts check_opts;
  auto* check = app.add_subcommand("check", "Exhaustive Yang-Baxter check");
  check->add_option("file", check_opts.file, "Solution file written by build");
  add_model_flags(check, check_opts.model);
  check->add_flag("--verbose", check_opts.verbose,
                  "Also compare the A/B/C against A'/B'/C' decomposition per triple");
  check->add_option("--budget", check_opts.budget, "Triple-evaluation budget")
      ->capture_default_str();
  add_format_flag(check, check_opts.common);

  ExportOpts export_opts;
  auto* export_report = app.add_subcommand("export-report", "Full catalog verification report");
  export_report->add_option("--m", export_opts.m_range, "Family exponent range lo..hi")
      ->capture_default_str();
  export_report->add_option("--out", export_opts.out_path, "Output file (stdout when omitted)");
  add_format_flag(export_report, export_opts.common);

  try {
    app.parse(argc, argv);
    if (derive->parsed()) return run_derive(derive_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (catalog->parsed()) return run_catalog(catalog_opts);
    if (build->parsed()) return run_build(build_opts);
    if (check->parsed()) return run_check(check_opts);
    if (export_report->parsed()) return run_export_report(export_opts);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ybfox::BraidGateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << ybfox::render_report_text(e.report());
    return 1;
  } catch (const ybfox::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
