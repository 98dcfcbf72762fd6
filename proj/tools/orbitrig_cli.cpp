#include "orbitrig/orbitrig.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

// Exit codes: 0 ok, 1 malformed input or usage, 2 validation failure, 3 internal error.
int exit_code(orbitrig_status s) {
  switch (s) {
    case ORBITRIG_OK: return 0;
    case ORBITRIG_VALIDATION: return 2;
    case ORBITRIG_INTERNAL: return 3;
    default: return 1;
  }
}

struct Failure {
  int code;
};

void check(orbitrig_status s) {
  if (s == ORBITRIG_OK) return;
  std::cerr << orbitrig_last_error_detail() << "\n";
  throw Failure{exit_code(s)};
}

void usage_error(const std::string& message) {
  json detail{{"status", "schema"}, {"kind", "Usage"}, {"message", message}, {"violations", json::array()}};
  std::cerr << detail.dump() << "\n";
  throw Failure{1};
}

struct FrameworkDeleter {
  void operator()(orbitrig_framework* fw) const { orbitrig_free(fw); }
};
using FrameworkPtr = std::unique_ptr<orbitrig_framework, FrameworkDeleter>;

struct StringDeleter {
  void operator()(char* s) const { orbitrig_string_free(s); }
};

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) usage_error("cannot write " + path);
}

FrameworkPtr load(const std::string& path) {
  const std::string text = read_input(path);
  orbitrig_framework* fw = nullptr;
  check(orbitrig_parse(text.c_str(), &fw));
  return FrameworkPtr(fw);
}

std::string summary_text(const std::string& report_json) {
  const json report = json::parse(report_json);
  std::ostringstream out;
  const auto& fw = report["framework"];
  out << "framework: d=" << fw["dimension"].get<int>() << " n=" << fw["vertices"].get<int>()
      << " edges=" << fw["edges"].get<int>() << " |G|=" << fw["group_order"].get<int>() << "\n";
  const auto& k = report["counts"];
  out << "counts: r=" << k["r"].get<long>() << " c=" << k["c"].get<long>() << " m=" << k["m"].get<long>()
      << "\n";
  out << "orbit rank: " << report["rank"].get<long>()
      << "  fully symmetric flexes: " << report["dims"]["fully_symmetric_flexes"].get<long>()
      << "  fully symmetric stresses: " << report["dims"]["fully_symmetric_stresses"].get<long>() << "\n";
  for (const auto& v : report["verdicts"]) {
    out << "  [" << v["rule"].get<std::string>() << "] " << v["conclusion"].get<std::string>() << ": "
        << v["detail"].get<std::string>() << "\n";
  }
  if (report.contains("tensegrity")) {
    const auto& t = report["tensegrity"];
    out << "tensegrity: " << t["outcome"].get<std::string>()
        << " (underlying rigid: " << (t["underlying_rigid"].get<bool>() ? "yes" : "no") << ")\n";
  }
  for (const auto& w : report["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-adapted rigidity analysis of bar-joint frameworks"};
  app.require_subcommand(1);

  std::string input;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  bool as_json = false;
  bool generic = false;
  bool tensegrity = false;
  std::string svg_path;
  auto* analyze = app.add_subcommand("analyze", "Analyze a framework document");
  analyze->add_option("input", input, "Framework document, or - for stdin")->required();
  auto* tol_opt = analyze->add_option("--tolerance", tolerance, "Relative and absolute rank tolerance")
                      ->check(CLI::Range(1e-300, 0.5));
  analyze->add_option("--seed", seed, "Seed for generic resampling and stress search");
  analyze->add_flag("--json", as_json, "Print the full JSON report");
  analyze->add_option("--svg", svg_path, "Also draw the framework (planar only) to this file");
  analyze->add_flag("--generic", generic, "Resample a symmetry-generic configuration first");
  analyze->add_flag("--tensegrity", tensegrity, "Search for a proper fully symmetric self-stress");

  std::string cone_input;
  double height = 1.0;
  auto* cone = app.add_subcommand("cone", "Cone a framework into one dimension higher");
  cone->add_option("input", cone_input, "Framework document, or - for stdin")->required();
  cone->add_option("--height", height, "Apex height along the new axis");

  std::string example_name;
  std::uint64_t example_seed = 1;
  auto* example = app.add_subcommand("example", "Print a catalog framework as a document");
  example->add_option("name", example_name, "Catalog entry")->required();
  example->add_option("--seed", example_seed, "Seed for sampled entries");

  std::string draw_input;
  std::string draw_out;
  bool draw_flex = false;
  auto* draw = app.add_subcommand("draw", "Draw a planar framework as SVG");
  draw->add_option("input", draw_input, "Framework document, or - for stdin")->required();
  draw->add_flag("--flex", draw_flex, "Overlay velocity arrows of a fully symmetric flex");
  draw->add_option("--out", draw_out, "Output file (default stdout)");

  bool list_json = false;
  auto* list = app.add_subcommand("catalog-list", "List catalog entries");
  list->add_flag("--json", list_json, "Print as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      const auto fw = load(input);
      orbitrig_analyze_options opts;
      orbitrig_analyze_options_init(&opts);
      if (tol_opt->count() > 0) opts.tolerance = tolerance;
      opts.seed = seed;
      opts.generic = generic ? 1 : 0;
      opts.tensegrity = tensegrity ? 1 : 0;
      char* report = nullptr;
      check(orbitrig_analyze(fw.get(), &opts, &report));
      const std::string text = take(report);
      if (!svg_path.empty()) {
        char* svg = nullptr;
        check(orbitrig_draw_svg(fw.get(), 1, &svg));
        write_output(svg_path, take(svg));
      }
      std::cout << (as_json ? text : summary_text(text));
    } else if (*cone) {
      const auto fw = load(cone_input);
      orbitrig_framework* raw = nullptr;
      check(orbitrig_cone(fw.get(), height, &raw));
      const FrameworkPtr coned(raw);
      char* doc = nullptr;
      check(orbitrig_to_json(coned.get(), &doc));
      std::cout << take(doc);
    } else if (*example) {
      orbitrig_framework* raw = nullptr;
      check(orbitrig_example(example_name.c_str(), example_seed, &raw));
      const FrameworkPtr fw(raw);
      char* doc = nullptr;
      check(orbitrig_to_json(fw.get(), &doc));
      std::cout << take(doc);
    } else if (*draw) {
      const auto fw = load(draw_input);
      char* svg = nullptr;
      check(orbitrig_draw_svg(fw.get(), draw_flex ? 1 : 0, &svg));
      write_output(draw_out, take(svg));
    } else if (*list) {
      char* text = nullptr;
      check(orbitrig_catalog_list(&text));
      const std::string listing = take(text);
      if (list_json) {
        std::cout << listing;
      } else {
        for (const auto& entry : json::parse(listing)) {
          std::cout << entry["name"].get<std::string>() << "  " << entry["summary"].get<std::string>() << "\n";
        }
      }
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    json detail{{"status", "internal"}, {"kind", "Internal"}, {"message", e.what()}, {"violations", json::array()}};
    std::cerr << detail.dump() << "\n";
    return 3;
  }
  std::cout.flush();
  return std::cout ? 0 : 3;
}
