// pseudoroots: command-line front end. Exit codes: 0 success / true,
// 1 property false, 2 input error, 3 singular matrix during computation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pseudoroots/divisor_graph.hpp"
#include "pseudoroots/duclosure.hpp"
#include "pseudoroots/errors.hpp"
#include "pseudoroots/hasse.hpp"
#include "pseudoroots/io.hpp"
#include "pseudoroots/pseudoroots.hpp"
#include "pseudoroots/verify.hpp"

namespace pr = pseudoroots;
namespace io = pseudoroots::io;
using nlohmann::json;

namespace {

struct Config {
  std::string format;
  std::string output;
  std::uint64_t seed = pr::verify::kDefaultSeed;
  std::optional<int> n;
  int dim = 2;
  int bound = 5;
  std::optional<int> cases;
  std::string kind;
  std::string graph_path;
  std::string second_path;
  std::string family_path;
  std::vector<std::string> orderings;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw pr::InputError("cannot write \"" + cfg.output + "\"");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? ", " : "") + items[k];
  return out + "}";
}

std::vector<std::string> vertex_ids(const pr::Digraph& g, const std::vector<pr::VertexIndex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex_id(v));
  return out;
}

std::vector<std::string> edge_ids(const pr::Digraph& g, const std::vector<pr::EdgeIndex>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(g.edge_id(e));
  return out;
}

std::string text_of_graph(const pr::Digraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (pr::VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.vertex_id(v);
    if (g.has_rank()) out << " rank " << g.rank(v);
    out << "\n";
  }
  out << "edges " << g.edge_count() << "\n";
  for (pr::EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out << "edge " << g.edge_id(e) << ": " << g.vertex_id(g.tail(e)) << " -> " << g.vertex_id(g.head(e)) << "\n";
  }
  return out.str();
}

std::string render_graph(const Config& cfg, const pr::Digraph& g) {
  if (cfg.format == "dot") return io::to_dot(g);
  if (cfg.format == "text") return text_of_graph(g);
  return io::graph_to_json(g).dump(2);
}

int cmd_gen(const Config& cfg) {
  if (cfg.kind == "roots") {
    if (!cfg.n) throw pr::InputError("gen roots needs -n");
    std::mt19937_64 rng(cfg.seed);
    const pr::RootSet rs = pr::random_generic_roots(*cfg.n, static_cast<std::size_t>(cfg.dim), rng, cfg.bound);
    if (cfg.format == "dot") throw pr::InputError("root sets have no DOT form");
    if (cfg.format == "text") {
      std::string text;
      for (int i = 1; i <= rs.n(); ++i) text += "x" + std::to_string(i) + " = " + rs.root(i).str() + "\n";
      emit(cfg, text);
    } else {
      emit(cfg, io::root_set_to_json(rs).dump(2));
    }
    return 0;
  }
  if (cfg.kind == "complex") {
    if (cfg.family_path.empty()) throw pr::InputError("gen complex needs --family FILE");
    const json j = io::parse_json_file(cfg.family_path);
    const json& arr = j.is_object() && j.contains("family") ? j.at("family") : j;
    if (!arr.is_array()) throw pr::InputError("family must be an array of integer arrays");
    std::vector<std::vector<int>> family;
    for (const auto& s : arr) {
      if (!s.is_array()) throw pr::InputError("family members must be arrays");
      std::vector<int> set;
      for (const auto& x : s) {
        if (!x.is_number_integer()) throw pr::InputError("family elements must be integers");
        set.push_back(x.get<int>());
      }
      family.push_back(std::move(set));
    }
    emit(cfg, render_graph(cfg, pr::complex_hasse(family)));
    return 0;
  }
  if (!cfg.n) throw pr::InputError("gen " + cfg.kind + " needs -n");
  if (cfg.kind == "boolean") {
    emit(cfg, render_graph(cfg, pr::boolean_lattice(*cfg.n)));
  } else {
    emit(cfg, render_graph(cfg, pr::partition_lattice(*cfg.n).graph));
  }
  return 0;
}

int cmd_check(const Config& cfg) {
  const pr::GraphSpec spec = io::graph_spec_from_json(io::parse_json_file(cfg.graph_path));
  const pr::ValidationReport report = pr::validate(spec);
  if (!report.ok()) {
    std::string text = "valid false\n";
    for (const auto& p : report.problems) text += "problem " + p + "\n";
    if (!report.cycle.empty()) text += "cycle " + braces(report.cycle) + "\n";
    std::cerr << text;
    return 2;
  }
  const pr::Digraph g(spec);
  const bool layered = report.layered();
  const auto modular = pr::is_modular(g);
  const auto srcs = vertex_ids(g, pr::sources(g));
  const auto snks = vertex_ids(g, pr::sinks(g));
  const bool pass = report.simple && report.acyclic && layered && modular.modular;
  if (cfg.format == "json") {
    json j = {{"simple", report.simple}, {"acyclic", report.acyclic}, {"layered", layered},
              {"modular", modular.modular}, {"sources", srcs},          {"sinks", snks}};
    if (!modular.modular) {
      j["modular_failure"] = {{"condition", modular.failed_condition}, {"witness", edge_ids(g, {modular.witness->first, modular.witness->second})}};
    }
    emit(cfg, j.dump(2));
  } else {
    std::string text;
    text += std::string("simple ") + (report.simple ? "true" : "false") + "\n";
    text += std::string("acyclic ") + (report.acyclic ? "true" : "false") + "\n";
    text += std::string("layered ") + (layered ? "true" : "false") + "\n";
    text += std::string("modular ") + (modular.modular ? "true" : "false") + "\n";
    if (!modular.modular) {
      text += "modular-witness condition " + std::to_string(modular.failed_condition) + " edges " +
              braces(edge_ids(g, {modular.witness->first, modular.witness->second})) + "\n";
    }
    text += "sources " + braces(srcs) + "\n";
    text += "sinks " + braces(snks) + "\n";
    emit(cfg, text);
  }
  return pass ? 0 : 1;
}

int cmd_closure(const Config& cfg, const pr::Digraph& g, const pr::EdgeSet& es) {
  const pr::Completion c = pr::completion(es);
  if (cfg.format == "dot") {
    emit(cfg, io::to_dot(g, c.edges));
  } else if (cfg.format == "json") {
    emit(cfg, json{{"edges", c.edges.ids()}, {"trace", io::trace_to_json(g, c.trace)}}.dump(2));
  } else {
    std::string text = "completion " + braces(c.edges.ids()) + "\n";
    for (const auto& s : c.trace.steps) {
      text += std::string("step ") + pr::to_char(s.kind) + " (" + g.edge_id(s.input.first) + ", " +
              g.edge_id(s.input.second) + ") -> (" + g.edge_id(s.output.first) + ", " + g.edge_id(s.output.second) +
              ") added " + braces(edge_ids(g, s.added)) + "\n";
    }
    emit(cfg, text);
  }
  return 0;
}

int cmd_sufficient(const Config& cfg, const pr::Digraph& g, const pr::EdgeSet& es) {
  const pr::SufficiencyReport r = pr::is_sufficient(es);
  if (cfg.format == "dot") {
    pr::EdgeSet path(g, r.path);
    emit(cfg, io::to_dot(g, path));
  } else if (cfg.format == "json") {
    emit(cfg, json{{"sufficient", r.sufficient}, {"path", io::path_to_json(g, r.path)},
                   {"completion", r.completion.edges.ids()}}
                  .dump(2));
  } else {
    std::string text = std::string("sufficient ") + (r.sufficient ? "true" : "false") + "\n";
    if (r.sufficient) text += "path " + braces(edge_ids(g, r.path)) + "\n";
    text += "completion " + braces(r.completion.edges.ids()) + "\n";
    emit(cfg, text);
  }
  return r.sufficient ? 0 : 1;
}

int cmd_ample(const Config& cfg, const pr::Digraph& g, const pr::EdgeSet& es) {
  const pr::AmpleReport r = pr::is_ample(es);
  if (cfg.format == "json") {
    json j = {{"ample", r.ample}};
    if (!r.ample) {
      j["failed_condition"] = r.failed_condition;
      j["witness"] = g.vertex_id(*r.uncovered);
    }
    emit(cfg, j.dump(2));
  } else {
    std::string text = std::string("ample ") + (r.ample ? "true" : "false") + "\n";
    if (!r.ample) {
      text += "failed-condition " + std::to_string(r.failed_condition) + "\n";
      text += "witness " + g.vertex_id(*r.uncovered) + "\n";
    }
    emit(cfg, text);
  }
  return r.ample ? 0 : 1;
}

std::vector<int> parse_ordering(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw pr::InputError("bad ordering \"" + text + "\"");
    }
  }
  if (static_cast<int>(out.size()) != n) throw pr::InputError("ordering \"" + text + "\" must list " + std::to_string(n) + " indices");
  return out;
}

int cmd_factor(const Config& cfg) {
  const pr::RootSet rs = io::root_set_from_json(io::parse_json_file(cfg.graph_path));
  const pr::PseudoRootTable table = pr::build_table(rs);
  const pr::Poly p = pr::canonical_polynomial(table);
  std::vector<std::vector<int>> orderings;
  for (const auto& o : cfg.orderings) orderings.push_back(parse_ordering(o, rs.n()));
  if (orderings.empty()) {
    orderings.emplace_back();
    for (int i = 1; i <= rs.n(); ++i) orderings.back().push_back(i);
  }
  json factorizations = json::array();
  std::string text = "P = " + p.str() + "\n";
  for (const auto& [edge, value] : table.entries()) text += "x_" + edge.str() + " = " + value.str() + "\n";
  for (const auto& ordering : orderings) {
    const auto factors = pr::defining_factors(table, ordering);
    const bool same = pr::from_linear_factors(factors, rs.dim()) == p;
    json fs = json::array();
    std::string line = "ordering";
    for (int i : ordering) line += " " + std::to_string(i);
    line += ":";
    for (const auto& f : factors) {
      fs.push_back(io::matrix_to_json(f));
      line += " (t - " + f.str() + ")";
    }
    text += line + (same ? "" : " MISMATCH") + "\n";
    factorizations.push_back({{"ordering", ordering}, {"factors", std::move(fs)}, {"matches", same}});
  }
  if (cfg.format == "json") {
    emit(cfg, json{{"polynomial", io::poly_to_json(p)}, {"table", io::table_to_json(table)},
                   {"factorizations", std::move(factorizations)}}
                  .dump(2));
  } else {
    emit(cfg, text);
  }
  return 0;
}

int cmd_derive(const Config& cfg, const pr::Digraph& g) {
  const pr::LabeledEdgeSet ls = io::labeled_set_from_json(g, io::parse_json_file(cfg.second_path));
  pr::Factorization f = [&] {
    try {
      return pr::derive_factorization(ls);
    } catch (const pr::NotSufficient& err) {
      if (cfg.format == "json") {
        emit(cfg, json{{"sufficient", false}, {"reason", err.what()}}.dump(2));
      } else {
        emit(cfg, std::string("sufficient false\nreason ") + err.what() + "\n");
      }
      throw;
    }
  }();
  if (cfg.format == "json") {
    json factors = json::array();
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      factors.push_back({{"edge", g.edge_id(f.path[k])}, {"value", io::matrix_to_json(f.factors[k])}, {"expr", f.traces[k].str()}});
    }
    json j = {{"sufficient", true}, {"path", io::path_to_json(g, f.path)}, {"factors", std::move(factors)},
              {"polynomial", io::poly_to_json(f.polynomial)}, {"closure", io::labeled_set_to_json(f.closure.labels)}};
    json skipped = json::array();
    for (const auto& s : f.closure.skipped) {
      skipped.push_back({{"kind", std::string(1, pr::to_char(s.kind))},
                         {"input", edge_ids(g, {s.input.first, s.input.second})},
                         {"reason", s.reason}});
    }
    j["skipped"] = std::move(skipped);
    emit(cfg, j.dump(2));
  } else {
    std::string text = "sufficient true\npath " + braces(edge_ids(g, f.path)) + "\n";
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      text += "factor " + g.edge_id(f.path[k]) + " = " + f.factors[k].str() + " via " + f.traces[k].str() + "\n";
    }
    text += "P = " + f.polynomial.str() + "\n";
    for (const auto& s : f.closure.skipped) text += std::string("skipped ") + pr::to_char(s.kind) + ": " + s.reason + "\n";
    emit(cfg, text);
  }
  return 0;
}

int cmd_divisors(const Config& cfg) {
  const pr::Poly p = io::poly_from_json(io::parse_json_file(cfg.graph_path));
  const auto candidates = io::named_matrices_from_json(io::parse_json_file(cfg.second_path));
  const pr::DivisorGraph dg = pr::build_divisor_graph(p, candidates);
  if (cfg.format == "dot") {
    emit(cfg, io::divisor_graph_to_dot(dg));
  } else if (cfg.format == "text") {
    std::string text = text_of_graph(dg.graph);
    for (pr::VertexIndex v = 0; v < dg.polys.size(); ++v) text += "poly " + dg.graph.vertex_id(v) + " = " + dg.polys[v].str() + "\n";
    for (pr::EdgeIndex e = 0; e < dg.labels.size(); ++e) text += "label " + dg.graph.edge_id(e) + " = " + dg.label_names[e] + "\n";
    for (const auto& u : dg.unused) text += "unused " + u + "\n";
    emit(cfg, text);
  } else {
    emit(cfg, io::divisor_graph_to_json(dg).dump(2));
  }
  return 0;
}

int cmd_verify(const Config& cfg) {
  std::vector<const pr::verify::Suite*> chosen;
  if (cfg.kind == "all") {
    for (const auto& s : pr::verify::suites()) chosen.push_back(&s);
  } else if (const auto* s = pr::verify::find_suite(cfg.kind)) {
    chosen.push_back(s);
  } else {
    std::string names;
    for (const auto& s : pr::verify::suites()) names += " " + s.name;
    throw pr::InputError("unknown suite \"" + cfg.kind + "\"; known:" + names + " all");
  }
  const pr::verify::Options opt{cfg.seed, cfg.n, cfg.cases};
  bool all_passed = true;
  json results = json::array();
  std::string text;
  for (const auto* s : chosen) {
    const auto result = s->run(opt);
    all_passed = all_passed && result.passed;
    results.push_back(pr::verify::to_json(result));
    text += (result.passed ? "PASS " : "FAIL ") + s->name + "\n";
    for (const auto& f : result.findings) text += "  " + f + "\n";
  }
  if (cfg.format == "json") {
    emit(cfg, json{{"seed", cfg.seed}, {"passed", all_passed}, {"suites", std::move(results)}}.dump(2));
  } else {
    emit(cfg, text);
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-roots of noncommutative polynomials: closures, sufficiency, factorizations"};
  app.require_subcommand(1, 1);
  Config cfg;
  const std::vector<std::string> formats{"json", "dot", "text"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "Generate a host graph or a random generic root set");
  gen->add_option("kind", cfg.kind, "boolean | partition | complex | roots")
      ->required()
      ->check(CLI::IsMember({"boolean", "partition", "complex", "roots"}));
  gen->add_option("-n", cfg.n, "Lattice size or number of roots");
  gen->add_option("-d,--dim", cfg.dim, "Root dimension (roots)")->check(CLI::PositiveNumber);
  gen->add_option("--bound", cfg.bound, "Entry bound for random roots")->check(CLI::PositiveNumber);
  gen->add_option("--family", cfg.family_path, "JSON array of subsets (complex)");
  gen->add_option("--seed", cfg.seed, "Random seed");
  add_common(gen);

  auto* check = app.add_subcommand("check", "Validate a graph; report layered/modular, sources and sinks");
  check->add_option("graph", cfg.graph_path, "Graph JSON")->required();
  add_common(check);

  std::vector<std::pair<std::string, CLI::App*>> set_commands;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"closure", "DU-completion of an edge set with its trace"},
           {"sufficient", "Sufficiency verdict with a source-to-sink path"},
           {"ample", "Ample-set verdict with a witness vertex"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", cfg.graph_path, "Host graph JSON")->required();
    sub->add_option("edges", cfg.second_path, "Edge set JSON")->required();
    add_common(sub);
    set_commands.emplace_back(name, sub);
  }

  auto* factor = app.add_subcommand("factor", "Canonical polynomial, pseudo-root table and factorizations");
  factor->add_option("roots", cfg.graph_path, "Root set JSON")->required();
  factor->add_option("--ordering", cfg.orderings, "Ordering such as 2,1,3 (repeatable)");
  add_common(factor);

  auto* derive = app.add_subcommand("derive", "Derive a factorization from a labeled edge set");
  derive->add_option("graph", cfg.graph_path, "Host graph JSON")->required();
  derive->add_option("labels", cfg.second_path, "Labeled edge set JSON")->required();
  add_common(derive);

  auto* divisors = app.add_subcommand("divisors", "Divisor graph of a monic polynomial");
  divisors->add_option("poly", cfg.graph_path, "Polynomial JSON")->required();
  divisors->add_option("candidates", cfg.second_path, "Labeled set or root set JSON")->required();
  add_common(divisors);

  auto* verify = app.add_subcommand("verify", "Run a verification suite (or all)");
  verify->add_option("suite", cfg.kind, "Suite name or all")->required();
  verify->add_option("-n", cfg.n, "Size parameter");
  verify->add_option("--cases", cfg.cases, "Number of random instances")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Random seed");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_gen(cfg);
    }
    if (*divisors) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_divisors(cfg);
    }
    if (cfg.format.empty()) cfg.format = "text";
    if (*check) return cmd_check(cfg);
    if (*factor) return cmd_factor(cfg);
    if (*verify) return cmd_verify(cfg);
    const pr::Digraph g = io::graph_from_json(io::parse_json_file(cfg.graph_path));
    if (*derive) return cmd_derive(cfg, g);
    const pr::EdgeSet es = io::edge_set_from_json(g, io::parse_json_file(cfg.second_path));
    for (const auto& [name, sub] : set_commands) {
      if (!*sub) continue;
      if (name == "closure") return cmd_closure(cfg, g, es);
      if (name == "sufficient") return cmd_sufficient(cfg, g, es);
      return cmd_ample(cfg, g, es);
    }
  } catch (const pr::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.exit_code();
  } catch (const json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
