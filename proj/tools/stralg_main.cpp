// Command line front end: generic decompositions, up-and-down graphs,
// matchings, semigroup ring classification, rigidity checks and the
// generator/relation bound scan.  All output is deterministic given the
// arguments and --seed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "stralg/fixtures.hpp"
#include "stralg/json_io.hpp"

using namespace stralg;

namespace {

Band band_from_args(const std::vector<int>& dims) {
  return Band::from_display(dims);
}

Component component_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--spec", "cannot open " + path);
  Json j = Json::parse(in);
  return Component::make(parse_display(j.at("beta").get<std::vector<int>>()),
                         parse_display(j.at("r").get<std::vector<int>>()),
                         parse_display(j.at("s").get<std::vector<int>>()));
}

Matching matching_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--matching", "cannot open " + path);
  Json j = Json::parse(in);
  int n = j.at("n").get<int>();
  std::vector<std::pair<MatchPoint, MatchPoint>> pairs;
  auto parse_point = [](const std::string& s) {
    return MatchPoint{std::stoi(s.substr(1)), s[0] == 'y'};
  };
  for (const auto& pr : j.at("theta"))
    pairs.push_back({parse_point(pr[0].get<std::string>()),
                     parse_point(pr[1].get<std::string>())});
  return Matching::from_pairs(n, pairs);
}

void print_decomposition_text(const Decomposition& d) {
  std::cout << "beta = " << Json(to_display(d.beta)).dump() << ", " << d.summand_count()
            << " summand(s)\n";
  for (const auto& s : d.summands) {
    std::cout << "  " << s.multiplicity << " x " << kind_name(s.kind) << " "
              << Json(to_display(s.dims)).dump();
    if (s.kind == Kind::band) std::cout << " band" << Json(to_display(s.band_data)).dump();
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string algebra band component toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  uint64_t seed = 1;
  uint64_t field_prime = kDefaultPrime;
  int degree_bound = 4;
  int trials = 5;
  int n_max = 6;
  bool strict = false;
  app.add_option("--format", format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", seed, "seed for all randomness");
  app.add_option("--field-prime", field_prime,
                 "prime for the coefficient field (0: derive from seed)");
  app.add_option("--degree-bound", degree_bound, "total degree bound for relations");
  app.add_option("--trials", trials, "number of rigidity trials");
  app.add_option("--n-max", n_max, "largest n for scans");
  app.add_flag("--strict", strict, "exit nonzero on provisional classifications");

  std::vector<int> dims;
  std::string spec_file, matching_file;

  auto* cmd_decompose = app.add_subcommand("decompose", "generic decomposition of a component");
  cmd_decompose->add_option("dims", dims, "band data m_n .. m_1");
  cmd_decompose->add_option("--spec", spec_file, "JSON file with beta/r/s (display order)");

  auto* cmd_graph = app.add_subcommand("graph", "up-and-down graph (dot or json)");
  cmd_graph->add_option("dims", dims, "band data m_n .. m_1");
  cmd_graph->add_option("--spec", spec_file, "JSON file with beta/r/s (display order)");

  auto* cmd_matching = app.add_subcommand("matching", "matching of a band component");
  cmd_matching->add_option("dims", dims, "band data m_n .. m_1");

  auto* cmd_ring = app.add_subcommand("ring", "semigroup ring of a matching or band");
  cmd_ring->add_option("dims", dims, "band data m_n .. m_1");
  cmd_ring->add_option("--matching", matching_file, "JSON file with a matching");

  auto* cmd_ext = app.add_subcommand("ext", "generic rigidity report for a component");
  cmd_ext->add_option("dims", dims, "band data m_n .. m_1");
  cmd_ext->add_option("--spec", spec_file, "JSON file with beta/r/s (display order)");

  auto* cmd_scan = app.add_subcommand("scan", "generator/relation bound scan");

  auto* cmd_fixtures = app.add_subcommand("fixtures", "run the pinned example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_decompose->parsed() || cmd_graph->parsed() || cmd_ext->parsed()) {
      Component comp;
      if (!spec_file.empty())
        comp = component_from_file(spec_file);
      else if (!dims.empty())
        comp = band_component(band_from_args(dims));
      else
        throw CLI::RequiredError("dims or --spec");

      if (cmd_graph->parsed()) {
        UpDownGraph g = build_updown_graph(comp);
        if (format == "json")
          std::cout << json_graph(g).dump(2) << "\n";
        else
          std::cout << to_dot(g);
        return 0;
      }
      if (cmd_decompose->parsed()) {
        Decomposition d = generic_decomposition(comp);
        if (format == "json")
          std::cout << json_decomposition(d).dump(2) << "\n";
        else
          print_decomposition_text(d);
        return 0;
      }
      FieldSpec field{false, field_prime};
      RigidityReport rep = verify_rigidity(comp, trials, seed, field);
      std::cout << json_rigidity(rep).dump(2) << "\n";
      return rep.failures == 0 ? 0 : 1;
    }

    if (cmd_matching->parsed()) {
      if (dims.empty()) throw CLI::RequiredError("dims");
      Matching t = extract_matching(band_from_args(dims));
      Json j = json_matching(t);
      auto p = matching_predicates(t);
      j["symmetric"] = p.symmetric;
      j["even"] = p.even;
      j["unmixed"] = p.unmixed;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_ring->parsed()) {
      Matching t = !matching_file.empty() ? matching_from_file(matching_file)
                                          : extract_matching(band_from_args(dims));
      RingAnalysis a = analyze_ring(t, degree_bound);
      std::cout << json_ring(a).dump(2) << "\n";
      return (strict && !a.classification.stabilized) ? 1 : 0;
    }

    if (cmd_scan->parsed()) {
      ConjectureScan s = conjecture_scan(n_max, degree_bound);
      std::cout << json_scan(s).dump(2) << "\n";
      return 0;
    }

    if (cmd_fixtures->parsed()) {
      auto results = run_fixtures();
      int failures = 0;
      for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass) std::cout << " -- " << r.detail;
        std::cout << "\n";
        failures += !r.pass;
      }
      std::cout << (failures ? "FAILURES: " : "all passed: ")
                << (failures ? failures : static_cast<int>(results.size())) << "\n";
      return failures ? 1 : 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
