#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitspace/classifier.hpp"
#include "orbitspace/format.hpp"
#include "orbitspace/invariants.hpp"
#include "orbitspace/pao.hpp"
#include "orbitspace/surgery.hpp"
#include "orbitspace/torus.hpp"

namespace {

using nlohmann::json;
using namespace orbitspace;

constexpr int kExitOk = 0;
constexpr int kExitIllegal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPipeline = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json report_json(const ValidationReport& report) {
  json j;
  j["legal"] = report.legal;
  j["violations"] = json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back(
        {{"rule", v.rule}, {"message", v.message}, {"where", v.where}});
  }
  return j;
}

json pair_json(const WeightPair& p) { return json::array({p.m, p.n}); }

json trace_json(const RewriteTrace& trace) {
  json moves = json::array();
  for (const auto& mv : trace.moves) {
    moves.push_back({{"side", to_string(mv.side)},
                     {"before", pair_json(mv.before)},
                     {"after", pair_json(mv.after)},
                     {"k", mv.k},
                     {"flipped", mv.flipped}});
  }
  return {{"initial", pair_json(trace.initial)},
          {"terminal", pair_json(trace.terminal)},
          {"moves", moves}};
}

json homeo_json(const HomeoVerdict& h) {
  json summands = json::array();
  for (Summand s : h.word.summands) summands.push_back(to_string(s));
  return {{"b2", h.b2},
          {"exact", h.exact},
          {"word", to_string(h.word)},
          {"summands", summands}};
}

json classification_json(const ClassificationResult& r) {
  json steps = json::array();
  for (const auto& step : r.trace) {
    steps.push_back({{"rule", to_string(step.rule)},
                     {"input", step.input_digest},
                     {"output", step.output_digest},
                     {"citation", step.citation}});
  }
  json j;
  j["homeo"] = homeo_json(r.homeo);
  if (r.diffeo) {
    j["diffeo"] = to_string(*r.diffeo);
  } else {
    j["diffeo"] = nullptr;
  }
  j["trace"] = steps;
  return j;
}

int cmd_validate(const std::string& path, bool as_json) {
  const OrbitSpaceData o = parse_orbit_file(read_file(path));
  const ValidationReport report = validate(o);
  if (as_json) {
    std::cout << report_json(report).dump(2) << "\n";
  } else if (report.legal) {
    std::cout << "legal\n";
  } else {
    for (const auto& v : report.violations) {
      std::cout << v.rule << (v.where.empty() ? "" : " at " + v.where) << ": "
                << v.message << "\n";
    }
  }
  return report.legal ? kExitOk : kExitIllegal;
}

int cmd_invariants(const std::string& path) {
  const OrbitSpaceData o = parse_orbit_file(read_file(path));
  json j;
  j["chi"] = euler_char_fixed_set(o);
  j["profile"] = to_string(fixed_set_profile(o).tag);
  j["b2"] = second_betti(o);
  j["admissible"] = admissible_positively_curved(o);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_reduce(int m, int n, bool as_json) {
  const RewriteTrace trace = reduce({m, n});
  if (as_json) {
    std::cout << trace_json(trace).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "reduce (" << trace.initial.m << "," << trace.initial.n
            << ") -> (" << trace.terminal.m << "," << trace.terminal.n << ") in "
            << trace.moves.size() << " moves\n";
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const auto& mv = trace.moves[i];
    std::cout << "  " << i + 1 << ". (" << mv.before.m << "," << mv.before.n
              << ") -> (" << mv.after.m << "," << mv.after.n << ")  side="
              << to_string(mv.side) << " k=" << mv.k
              << (mv.flipped ? " (orientation flip)" : "") << "\n";
  }
  return kExitOk;
}

int cmd_classify(const std::string& path, bool homeo_only, bool curved,
                 bool as_json) {
  const OrbitSpaceData o = parse_orbit_file(read_file(path));
  if (curved) {
    const ClassificationResult r = classify_diffeo_positively_curved(o);
    if (as_json) {
      std::cout << classification_json(r).dump(2) << "\n";
    } else {
      std::cout << "diffeomorphism verdict: " << to_string(*r.diffeo) << "\n";
      for (const auto& step : r.trace) {
        std::cout << "  " << to_string(step.rule) << " " << step.input_digest
                  << " -> " << step.output_digest << "  [" << step.citation
                  << "]\n";
      }
    }
    return kExitOk;
  }
  (void)homeo_only;
  const HomeoVerdict h = classify_homeo(o);
  if (as_json) {
    json j;
    j["homeo"] = homeo_json(h);
    std::cout << j.dump(2) << "\n";
  } else if (h.exact) {
    std::cout << "homeomorphism verdict: " << to_string(h.word)
              << (h.b2 == 1 ? " (orientation unresolved)" : "") << "\n";
  } else {
    std::cout << "homeomorphism verdict: b2 = " << h.b2
              << " connected sum, summand split unresolved\n";
  }
  return kExitOk;
}

int cmd_decompose(const std::string& path, int circle, int junction,
                  const std::string& out_prefix, bool as_json) {
  const OrbitSpaceData o = parse_orbit_file(read_file(path));
  const Decomposition d =
      split_circle(o, static_cast<std::size_t>(circle), junction);
  const std::string x = serialize_orbit_file(d.x_part);
  const std::string y = serialize_orbit_file(d.y_part);
  if (!out_prefix.empty()) {
    for (const auto& [suffix, text] :
         {std::pair{".x.orbit", x}, std::pair{".y.orbit", y}}) {
      std::ofstream out(out_prefix + suffix, std::ios::binary);
      if (!out) throw Error("cannot write file: " + out_prefix + suffix);
      out << text;
    }
    std::cout << out_prefix << ".x.orbit " << out_prefix << ".y.orbit\n";
  } else if (as_json) {
    json j;
    j["junction"] = d.split_point;
    j["x"] = x;
    j["y"] = y;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << x << "\n" << y;
  }
  return kExitOk;
}

int cmd_model(const std::string& kind, int a, int b, bool as_json) {
  if (kind == "d2xs2") {
    const LocalOrbitData d = model_d2xs2_orbit_data(a, b);
    json strata = json::array();
    for (const auto& s : d.strata) {
      strata.push_back(
          {{"locus", to_string(s.locus)}, {"multiplicity", s.multiplicity}});
    }
    json j;
    j["fixed_points"] = d.fixed_points;
    j["strata"] = strata;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  const OrbitSpaceData o =
      (kind == "s4") ? linear_s4_orbit_data(a, b) : linear_cp2_orbit_data(a, b);
  if (as_json) {
    json j;
    j["file"] = serialize_orbit_file(o);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << serialize_orbit_file(o);
  }
  return kExitOk;
}

int cmd_enumerate(int max_mult, int max_pairs, const std::string& census_path,
                  bool as_json) {
  const Census census = build_census(max_mult, max_pairs);
  const std::string csv = census_csv(census);
  if (!census_path.empty()) {
    std::ofstream out(census_path, std::ios::binary);
    if (!out) throw Error("cannot write census file: " + census_path);
    out << csv;
  }
  if (as_json) {
    json rows = json::array();
    for (const auto& row : census.rows) {
      rows.push_back({{"serialization", row.serialization},
                      {"chi", row.chi},
                      {"profile", row.profile},
                      {"b2", row.b2},
                      {"verdict", row.verdict},
                      {"steps", row.steps}});
    }
    json j;
    j["rows"] = rows;
    j["excluded_unrealizable"] = census.enumeration.excluded_unrealizable;
    std::cout << j.dump(2) << "\n";
  } else if (census_path.empty()) {
    std::cout << csv;
  } else {
    std::cout << census.rows.size() << " configurations written to "
              << census_path << " (" << census.enumeration.excluded_unrealizable
              << " admissible configurations excluded as unrealizable)\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted orbit spaces of circle actions on simply connected "
               "4-manifolds: validation, invariants, rewriting, classification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "check legality of an orbit file");
  validate_cmd->add_option("file", file, "orbit file ('-' for stdin)")->required();

  auto* invariants_cmd =
      app.add_subcommand("invariants", "chi, profile, b2 and admissibility (JSON)");
  invariants_cmd->add_option("file", file)->required();

  int m = 0, n = 0;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "run the replacement reduction on a weight pair");
  reduce_cmd->add_option("m", m)->required();
  reduce_cmd->add_option("n", n)->required();

  bool homeo = false, curved = false;
  auto* classify_cmd = app.add_subcommand("classify", "classify an orbit file");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_flag("--homeo", homeo, "homeomorphism verdict (default)");
  classify_cmd->add_flag("--curved", curved,
                         "positively curved diffeomorphism pipeline");

  int circle = 0, junction = 0;
  std::string out_prefix;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "split a weighted circle into X and Y parts");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--circle", circle, "circle index")->required();
  decompose_cmd->add_option("--at", junction, "junction index")->required();
  decompose_cmd->add_option("--out", out_prefix,
                            "write <prefix>.x.orbit and <prefix>.y.orbit");

  std::string model_kind;
  int a = 1, b = 1;
  auto* model_cmd =
      app.add_subcommand("model", "orbit data of a linear model action");
  model_cmd->add_option("kind", model_kind, "s4, cp2 or d2xs2")
      ->required()
      ->check(CLI::IsMember({"s4", "cp2", "d2xs2"}));
  model_cmd->add_option("a", a)->required();
  model_cmd->add_option("b", b)->required();

  int max_mult = 12, max_pairs = 4;
  std::string census_path;
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "census of admissible configurations with verdicts");
  enumerate_cmd->add_option("--max-mult", max_mult, "multiplicity bound")->required();
  enumerate_cmd->add_option("--max-pairs", max_pairs, "arc/circle size bound")->required();
  enumerate_cmd->add_option("--census", census_path, "write CSV census here");

  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();  // allow --json after the subcommand name
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, as_json);
    if (invariants_cmd->parsed()) return cmd_invariants(file);
    if (reduce_cmd->parsed()) return cmd_reduce(m, n, as_json);
    if (classify_cmd->parsed()) return cmd_classify(file, homeo, curved, as_json);
    if (decompose_cmd->parsed())
      return cmd_decompose(file, circle, junction, out_prefix, as_json);
    if (model_cmd->parsed()) return cmd_model(model_kind, a, b, as_json);
    if (enumerate_cmd->parsed())
      return cmd_enumerate(max_mult, max_pairs, census_path, as_json);
  } catch (const PipelineStuckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPipeline;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIllegal;
  }
  return kExitUsage;
}
