// Copyright 2026 The kfold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the libkfold C API. Vertex labels are
// 0-based everywhere except DIMACS export, which is 1-based per that
// format. Exit codes: 0 success, 1 failed verification or internal
// error, 2 validation/parse failure, 3 exact-search size cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfold.h"

namespace {

using nlohmann::json;

struct string_guard {
  char* s = nullptr;
  ~string_guard() { kfold_string_free(s); }
};

struct graph_guard {
  kfold_graph* g = nullptr;
  ~graph_guard() { kfold_graph_free(g); }
};

struct coloring_guard {
  kfold_coloring* c = nullptr;
  ~coloring_guard() { kfold_coloring_free(c); }
};

int exit_code(kfold_status status) {
  switch (status) {
    case KFOLD_OK:
      return 0;
    case KFOLD_INVALID_ARGUMENT:
    case KFOLD_PARSE_ERROR:
      return 2;
    case KFOLD_TOO_LARGE:
      return 3;
    case KFOLD_INTERNAL_ERROR:
      break;
  }
  return 1;
}

int fail(kfold_status status) {
  std::cerr << "error: " << kfold_last_error() << '\n';
  return exit_code(status);
}

struct FamilyArgs {
  std::string family = "web";
  std::int64_t n = 0;
  std::int64_t p = 0;

  kfold_family code() const {
    return family == "antiweb" ? KFOLD_ANTIWEB : KFOLD_WEB;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs* args,
                        bool required = true) {
  cmd->add_option("--family", args->family, "graph family")
      ->check(CLI::IsMember({"web", "antiweb"}))
      ->required(required);
  cmd->add_option("-n", args->n, "number of vertices")->required(required);
  cmd->add_option("-p", args->p, "distance parameter")->required(required);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_chik(const FamilyArgs& fam, std::int64_t k, bool as_json) {
  std::int64_t value = 0;
  kfold_status st = kfold_chi_k(fam.code(), fam.n, fam.p, k, &value);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (as_json) {
    json j{{"family", fam.family}, {"n", fam.n}, {"p", fam.p}, {"k", k},
           {"chi_k", value}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int run_minusv(const FamilyArgs& fam, std::int64_t k, bool as_json) {
  std::int64_t value = 0;
  kfold_status st = kfold_chi_k_minus_v(fam.code(), fam.n, fam.p, k, &value);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (as_json) {
    json j{{"family", fam.family}, {"n", fam.n}, {"p", fam.p}, {"k", k},
           {"chi_k_minus_v", value}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int run_color(const FamilyArgs& fam, std::int64_t k, bool as_json) {
  coloring_guard coloring;
  kfold_status st = kfold_color(fam.code(), fam.n, fam.p, k, &coloring.c);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  string_guard text;
  st = kfold_coloring_to_json(coloring.c, &text.s);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (as_json) {
    std::cout << text.s << '\n';
    return 0;
  }
  json doc = json::parse(text.s);
  std::cout << k << "-fold coloring of " << fam.family << " n=" << fam.n
            << " p=" << fam.p << ": " << doc["x"].get<std::int64_t>()
            << " colors\n";
  std::int64_t color = 1;
  for (const auto& cls : doc["classes"]) {
    std::cout << "color " << color++ << ':';
    for (const auto& v : cls) {
      std::cout << ' ' << v.get<std::int64_t>();
    }
    std::cout << '\n';
  }
  return 0;
}

int run_verify(const std::string& input, std::int64_t k_override,
               bool as_json) {
  std::string text;
  try {
    text = read_input(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  coloring_guard coloring;
  kfold_status st = kfold_coloring_from_json(text.c_str(), &coloring.c);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  json doc = json::parse(text, nullptr, false);
  std::string family = doc["family"].get<std::string>();
  std::int64_t n = doc["n"].get<std::int64_t>();
  std::int64_t p = doc["p"].get<std::int64_t>();
  std::int64_t k = k_override > 0 ? k_override : doc["k"].get<std::int64_t>();

  graph_guard graph;
  st = kfold_graph_create(family == "antiweb" ? KFOLD_ANTIWEB : KFOLD_WEB, n,
                          p, &graph.g);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  int valid = 0;
  string_guard report;
  st = kfold_verify(graph.g, coloring.c, k, &valid, &report.s);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (as_json) {
    std::cout << report.s << '\n';
  } else {
    json r = json::parse(report.s);
    if (valid) {
      std::cout << "valid " << k << "-fold coloring with "
                << r["x"].get<std::int64_t>() << " colors (min multiplicity "
                << r["min_multiplicity"].get<std::int64_t>() << ")\n";
    } else {
      std::cout << "INVALID " << k << "-fold coloring:";
      if (!r["stability_ok"].get<bool>()) {
        std::cout << " color " << r["first_unstable_color"].get<std::int64_t>()
                  << " is not a stable set;";
      }
      if (!r["multiplicity_ok"].get<bool>()) {
        std::cout << " vertex "
                  << r["first_deficient_vertex"].get<std::int64_t>()
                  << " has fewer than " << k << " colors;";
      }
      std::cout << '\n';
    }
  }
  return valid ? 0 : 1;
}

int run_critical(const FamilyArgs& fam, std::int64_t k, bool as_json) {
  string_guard text;
  kfold_status st =
      kfold_criticality_report(fam.code(), fam.n, fam.p, k, &text.s);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (as_json) {
    std::cout << text.s << '\n';
    return 0;
  }
  json r = json::parse(text.s);
  std::cout << (r["critical"].get<bool>() ? "critical (" : "not critical (")
            << r["witness"].get<std::string>() << ")\n";
  std::cout << "chi_k = " << r["chi_k"].get<std::int64_t>()
            << ", chi_k(G-v) = " << r["chi_k_minus_v"].get<std::int64_t>()
            << ", gap within [" << r["gap_bounds"][0].get<std::int64_t>()
            << ", " << r["gap_bounds"][1].get<std::int64_t>() << "]\n";
  return 0;
}

int run_bounds(const FamilyArgs& fam, std::int64_t k, bool as_json) {
  string_guard text;
  kfold_status st = kfold_bounds_report(fam.code(), fam.n, fam.p, k, &text.s);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (as_json) {
    std::cout << text.s << '\n';
    return 0;
  }
  json r = json::parse(text.s);
  auto flag = [](bool b) { return b ? "tight" : "strict"; };
  std::cout << "k*omega   = " << r["k_omega"].get<std::int64_t>() << " ("
            << flag(r["tight"]["omega"].get<bool>()) << ")\n"
            << "chi_k     = " << r["chi_k"].get<std::int64_t>() << '\n'
            << "k*chi     = " << r["k_chi"].get<std::int64_t>() << " ("
            << flag(r["tight"]["chi"].get<bool>()) << ")\n"
            << "chibar    = " << r["frac_chi"]["num"].get<std::int64_t>()
            << '/' << r["frac_chi"]["den"].get<std::int64_t>()
            << " (k*chibar " << (r["tight"]["frac"].get<bool>()
                                     ? "attained"
                                     : "not attained") << ")\n"
            << "ceil(k*n/alpha) = " << r["lex_lower"].get<std::int64_t>()
            << '\n';
  return 0;
}

int run_oracle(const FamilyArgs& fam, bool have_family,
               const std::string& input, std::int64_t k, bool via_lex,
               bool as_json) {
  graph_guard graph;
  kfold_status st = KFOLD_OK;
  if (!input.empty()) {
    std::string text;
    try {
      text = read_input(input);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
    st = kfold_graph_from_dimacs(text.c_str(), &graph.g);
  } else if (have_family) {
    st = kfold_graph_create(fam.code(), fam.n, fam.p, &graph.g);
  } else {
    std::cerr << "error: oracle needs either --input or --family/-n/-p\n";
    return 2;
  }
  if (st != KFOLD_OK) {
    return fail(st);
  }
  std::int64_t value = 0;
  st = via_lex ? kfold_exact_chi_k_via_lex(graph.g, k, &value)
               : kfold_exact_chi_k(graph.g, k, &value);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (as_json) {
    json j{{"k", k}, {"exact_chi_k", value}, {"via_lex", via_lex}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int run_table(const std::string& family, std::int64_t n_max, std::int64_t k) {
  kfold_family code = family == "antiweb" ? KFOLD_ANTIWEB : KFOLD_WEB;
  std::cout << "family,n,p,k,alpha,omega,chi_k,chi_k_minus_v,critical,"
               "chistar_critical,tight_omega,tight_chi,tight_frac\n";
  for (std::int64_t n = 2; n <= n_max; ++n) {
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
      std::int64_t a = 0, w = 0;
      kfold_status st = kfold_alpha(code, n, p, &a);
      if (st == KFOLD_OK) {
        st = kfold_omega(code, n, p, &w);
      }
      string_guard crit_text;
      if (st == KFOLD_OK) {
        st = kfold_criticality_report(code, n, p, k, &crit_text.s);
      }
      string_guard bounds_text;
      if (st == KFOLD_OK) {
        st = kfold_bounds_report(code, n, p, k, &bounds_text.s);
      }
      int chistar = 0;
      if (st == KFOLD_OK) {
        st = kfold_chistar_critical(code, n, p, &chistar);
      }
      if (st != KFOLD_OK) {
        return fail(st);
      }
      json crit = json::parse(crit_text.s);
      json bounds = json::parse(bounds_text.s);
      std::cout << family << ',' << n << ',' << p << ',' << k << ',' << a
                << ',' << w << ',' << crit["chi_k"].get<std::int64_t>() << ','
                << crit["chi_k_minus_v"].get<std::int64_t>() << ','
                << (crit["critical"].get<bool>() ? 1 : 0) << ',' << chistar
                << ',' << (bounds["tight"]["omega"].get<bool>() ? 1 : 0)
                << ',' << (bounds["tight"]["chi"].get<bool>() ? 1 : 0) << ','
                << (bounds["tight"]["frac"].get<bool>() ? 1 : 0) << '\n';
    }
  }
  return 0;
}

int run_export(const FamilyArgs& fam, const std::string& output) {
  graph_guard graph;
  kfold_status st = kfold_graph_create(fam.code(), fam.n, fam.p, &graph.g);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  string_guard text;
  st = kfold_graph_to_dimacs(graph.g, &text.s);
  if (st != KFOLD_OK) {
    return fail(st);
  }
  if (output.empty() || output == "-") {
    std::cout << text.s;
    return 0;
  }
  std::ofstream out(output);
  if (!out) {
    std::cerr << "error: cannot open '" << output << "' for writing\n";
    return 2;
  }
  out << text.s;
  return out ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal k-fold colorings of webs and antiwebs"};
  app.require_subcommand(1);
  // Let flags like --json appear after the subcommand as well.
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json,
               "emit machine-readable JSON instead of text");

  FamilyArgs fam;
  std::int64_t k = 1;

  auto* chik = app.add_subcommand("chik", "k-th chromatic number");
  add_family_options(chik, &fam);
  chik->add_option("-k", k, "fold count")->required();

  auto* color = app.add_subcommand("color", "optimal k-fold coloring");
  add_family_options(color, &fam);
  color->add_option("-k", k, "fold count")->required();

  std::string input;
  std::int64_t k_override = 0;
  auto* verify = app.add_subcommand(
      "verify", "check a coloring document against its graph");
  verify->add_option("--input", input,
                     "coloring JSON file ('-' for stdin)")
      ->default_val("-");
  verify->add_option("-k", k_override,
                     "fold count to check (default: the document's)");

  auto* minusv = app.add_subcommand(
      "minusv", "k-th chromatic number after deleting one vertex");
  add_family_options(minusv, &fam);
  minusv->add_option("-k", k, "fold count")->required();

  auto* critical = app.add_subcommand("critical",
                                      "decide chi_k-criticality");
  add_family_options(critical, &fam);
  critical->add_option("-k", k, "fold count")->required();

  auto* bounds = app.add_subcommand(
      "bounds", "chi_k against k*omega, k*chi and the fractional bound");
  add_family_options(bounds, &fam);
  bounds->add_option("-k", k, "fold count")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "exact chi_k by stable-set multicover search");
  FamilyArgs oracle_fam;
  add_family_options(oracle, &oracle_fam, /*required=*/false);
  std::string oracle_input;
  bool via_lex = false;
  oracle->add_option("--input", oracle_input, "DIMACS .col file to solve");
  oracle->add_option("-k", k, "fold count")->default_val("1");
  oracle->add_flag("--via-lex", via_lex,
                   "solve the lexicographic product with a k-clique instead");

  auto* table = app.add_subcommand(
      "table",
      "CSV survey over all valid (n, p); columns: family,n,p,k,alpha,"
      "omega,chi_k,chi_k_minus_v,critical,chistar_critical,tight_omega,"
      "tight_chi,tight_frac");
  std::string table_family;
  std::int64_t n_max = 0;
  table->add_option("--family", table_family, "graph family")
      ->check(CLI::IsMember({"web", "antiweb"}))
      ->required();
  table->add_option("--n-max", n_max, "largest n to include")->required();
  table->add_option("--k", k, "fold count")->default_val("1");

  auto* exp = app.add_subcommand("export", "write the graph as DIMACS .col");
  add_family_options(exp, &fam);
  std::string output;
  exp->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*chik) return run_chik(fam, k, as_json);
  if (*color) return run_color(fam, k, as_json);
  if (*verify) return run_verify(input, k_override, as_json);
  if (*minusv) return run_minusv(fam, k, as_json);
  if (*critical) return run_critical(fam, k, as_json);
  if (*bounds) return run_bounds(fam, k, as_json);
  if (*oracle) {
    bool have_family = oracle->count("--family") > 0;
    return run_oracle(oracle_fam, have_family, oracle_input, k, via_lex,
                      as_json);
  }
  if (*table) return run_table(table_family, n_max, k);
  if (*exp) return run_export(fam, output);
  return 2;
}
