// mac: command-line front end for the moment-angle complex toolkit.
//
//   mac classify      --input K.json
//   mac nonfaces      --input K.json
//   mac betti         --input K.json
//   mac oracle-betti  --input K.json
//   mac ring          --input K.json
//   mac loop-ranks    --input K.json [--truncation 24] [--delta 0.05]
//   mac crosscheck    --input K.json
//   mac generate <family> <size> [--seed S]
//
// Exit codes: 0 success, 2 input/ghost-vertex error, 3 resource limit, 1 other.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mac/mac.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input = "-";
  int limit_n = 20;
  std::uint64_t limit_cells = 2'000'000;
  std::uint64_t seed = 0;
  std::string format = "json";
  int truncation = 24;
  double delta = 0.05;
  std::string family;
  int size = 0;
};

struct ComplexDeleter {
  void operator()(mac_complex* k) const { mac_complex_free(k); }
};
using ComplexHandle = std::unique_ptr<mac_complex, ComplexDeleter>;

struct Failure {
  mac_status status;
  std::string message;
};

int exit_code(mac_status status) {
  switch (status) {
    case MAC_OK: return 0;
    case MAC_ERROR_INPUT:
    case MAC_ERROR_GHOST_VERTEX:
    case MAC_ERROR_NOT_APPLICABLE: return 2;
    case MAC_ERROR_RESOURCE: return 3;
    default: return 1;
  }
}

void check(mac_status status) {
  if (status != MAC_OK) throw Failure{status, mac_last_error()};
}

std::string read_input(const std::string& input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') return input;  // inline JSON
  if (input == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream file(input);
  if (!file) throw Failure{MAC_ERROR_INPUT, "cannot open input file '" + input + "'"};
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

ComplexHandle load_complex(const Options& opts) {
  mac_complex* raw = nullptr;
  check(mac_complex_from_json(read_input(opts.input).c_str(), &raw));
  return ComplexHandle(raw);
}

Json take_json(mac_status status, char** text) {
  check(status);
  std::unique_ptr<char, decltype(&mac_string_free)> owned(*text, &mac_string_free);
  return Json::parse(owned.get());
}

std::string join_ints(const Json& arr, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i > 0) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

std::string set_text(const Json& arr) { return "{" + join_ints(arr) + "}"; }

std::string poincare_text(const Json& betti) {
  std::string out;
  for (std::size_t d = 0; d < betti.size(); ++d) {
    const auto b = betti[d].get<std::int64_t>();
    if (b == 0) continue;
    if (!out.empty()) out += " + ";
    std::string term = d == 0 ? "1" : "t^" + std::to_string(d);
    out += b == 1 ? term : std::to_string(b) + (d == 0 ? "" : "·" + term);
  }
  return out;
}

// Human rendering of each report.
std::string render_text(const std::string& command, const Json& r) {
  std::ostringstream out;
  if (command == "classify") {
    if (r["kind"] == "elliptic") {
      out << "elliptic: Z(K) ≅ ";
      bool first = true;
      for (const auto& d : r["spheres"]) {
        out << (first ? "" : " × ") << "S^" << d.get<int>();
        first = false;
      }
      const int disk = r["disk"].get<int>();
      if (disk > 0 || first) out << (first ? "" : " × ") << "D^" << disk;
      out << '\n';
    } else {
      out << "hyperbolic: witness I = " << set_text(r["witness_I"]) << ", M_I =";
      for (const auto& m : r["witness_nonfaces"]) out << ' ' << set_text(m);
      out << '\n';
    }
  } else if (command == "nonfaces") {
    out << "minimal non-faces (" << r["members"].size() << "):";
    for (const auto& m : r["members"]) out << ' ' << set_text(m);
    out << "\nsupport: " << set_text(r["support"]) << "\ncomponents: " << r["components"].size() << '\n';
    for (const auto& c : r["components"]) {
      out << "  ν = " << set_text(c["support"]) << ":";
      for (const auto& m : c["members"]) out << ' ' << set_text(m);
      out << '\n';
    }
  } else if (command == "betti") {
    out << "Poincaré polynomial: " << poincare_text(r["betti"]) << '\n';
    for (const auto& e : r["entries"]) {
      out << "  I = " << set_text(e["I"]) << "  H̃^" << e["j"].get<int>() << " = Q^" << e["dim"].get<int>() << '\n';
    }
  } else if (command == "oracle-betti") {
    out << "cells: " << r["cells"].get<std::uint64_t>() << "\nPoincaré polynomial: " << poincare_text(r["betti"])
        << '\n';
  } else if (command == "ring") {
    out << (r["trivial"].get<bool>() ? "trivial ring" : "nontrivial ring") << " ("
        << r["certificate"]["kind"].get<std::string>() << ")\n";
    if (r["certificate"].contains("product")) {
      const auto& c = r["certificate"];
      out << "  " << set_text(c["left"]["I"]) << " (degree " << c["left"]["degree"] << ") * " << set_text(c["right"]["I"])
          << " (degree " << c["right"]["degree"] << ") ≠ 0 in degree " << c["product"]["degree"] << '\n';
    }
  } else if (command == "loop-ranks") {
    out << r["model"]["kind"].get<std::string>() << " of spheres " << set_text(r["model"]["dims"]) << '\n'
        << "ranks l_1..l_" << r["truncation"].get<int>() << ": " << join_ints(r["ranks"], " ") << '\n'
        << "growth: " << r["verdict"].get<std::string>();
    if (r.contains("ratio")) out << " (ratio " << r["ratio"].get<double>() << ")";
    out << '\n';
  } else if (command == "crosscheck") {
    out << "hochster: " << join_ints(r["hochster"], " ") << "\noracle:   " << join_ints(r["oracle"], " ")
        << "\n" << (r["equal"].get<bool>() ? "engines agree" : "ENGINES DISAGREE") << '\n';
  } else {
    out << "n = " << r["n"].get<int>() << ", facets:";
    for (const auto& f : r["facets"]) out << ' ' << set_text(f);
    out << '\n';
  }
  return out.str();
}

Json run_command(const std::string& command, const Options& opts) {
  mac_limits limits = mac_default_limits();
  limits.max_vertices = opts.limit_n;
  limits.max_cells = opts.limit_cells;
  if (const char* env = std::getenv("MAC_THREADS")) limits.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));

  char* text = nullptr;
  if (command == "generate") {
    mac_complex* raw = nullptr;
    check(mac_complex_generate(opts.family.c_str(), opts.size, opts.seed, &raw));
    ComplexHandle k(raw);
    return take_json(mac_report_complex(k.get(), &text), &text);
  }
  const ComplexHandle k = load_complex(opts);
  if (command == "classify") return take_json(mac_report_classify(k.get(), &text), &text);
  if (command == "nonfaces") return take_json(mac_report_nonfaces(k.get(), &text), &text);
  if (command == "betti") return take_json(mac_report_betti(k.get(), &limits, &text), &text);
  if (command == "oracle-betti") return take_json(mac_report_oracle_betti(k.get(), &limits, &text), &text);
  if (command == "ring") return take_json(mac_report_ring(k.get(), &limits, &text), &text);
  if (command == "crosscheck") return take_json(mac_report_crosscheck(k.get(), &limits, &text), &text);
  if (command == "loop-ranks") {
    return take_json(mac_report_loop_ranks(k.get(), &limits, opts.truncation, opts.delta, &text), &text);
  }
  throw Failure{MAC_ERROR_INPUT, "unknown command " + command};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational type of moment-angle complexes Z(K;(D²,S¹))", "mac"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) {
      sub->add_option("--input,-i", opts.input, "complex JSON file, '-' for stdin, or inline JSON")
          ->capture_default_str();
      sub->add_option("--limit-n", opts.limit_n, "largest n for 2^n subset enumerations")->capture_default_str();
      sub->add_option("--limit-cells", opts.limit_cells, "largest cell count for the cell oracle")
          ->capture_default_str();
    }
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };

  const std::pair<const char*, const char*> commands[] = {
      {"classify", "decide rational ellipticity of Z(K)"},
      {"nonfaces", "minimal non-faces and their intersection-graph components"},
      {"betti", "Betti numbers of Z(K) via full-subcomplex cohomology"},
      {"oracle-betti", "Betti numbers of Z(K) via its cellular chain complex"},
      {"ring", "decide whether the cohomology ring of Z(K) is trivial"},
      {"loop-ranks", "rational homotopy ranks of the elliptic model or hyperbolic witness"},
      {"crosscheck", "compare both Betti engines"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, true);
    if (std::string(name) == "loop-ranks") {
      sub->add_option("--truncation,-N", opts.truncation, "number of ranks")->capture_default_str();
      sub->add_option("--delta", opts.delta, "growth-ratio reporting threshold")->capture_default_str();
    }
  }
  CLI::App* gen = app.add_subcommand("generate", "emit a named or random complex");
  gen->add_option("family", opts.family, "simplex | boundary | cycle | cross_polytope | random")->required();
  gen->add_option("size", opts.size, "q for simplex/boundary, m for cycle, k for cross_polytope, n for random")
      ->required();
  gen->add_option("--seed", opts.seed, "seed for random")->capture_default_str();
  add_common(gen, false);

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const Json report = run_command(command, opts);
    std::cout << (opts.format == "text" ? render_text(command, report) : report.dump() + "\n");
    return 0;
  } catch (const Failure& f) {
    std::cerr << "mac " << command << ": " << mac_status_name(f.status) << ": " << f.message << '\n';
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "mac " << command << ": " << e.what() << '\n';
    return 1;
  }
}
