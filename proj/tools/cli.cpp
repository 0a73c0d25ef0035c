#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance/acceptance.hpp"
#include "tolspace/builders.hpp"
#include "tolspace/error.hpp"
#include "tolspace/hopf.hpp"
#include "tolspace/json_io.hpp"

namespace tolspace::cli {

namespace {

namespace tj = tolspace::json;

// Usage problems that are not JSON parse errors: unreadable files, bad
// build expressions.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Prefixes the input path onto parse errors so the location is unambiguous.
template <typename F>
auto parse_input(const std::string& path, std::istream& in, F&& reader) {
  const std::string text = slurp(path, in);
  try {
    return reader(text);
  } catch (const ParseError& e) {
    throw ParseError((path == "-" ? std::string("<stdin>") : path) + " " + e.where(),
                     std::string(e.what()).substr(e.where().size() + 2));
  }
}

const std::map<std::string, std::function<ToleranceSpace()>>& named() {
  static const std::map<std::string, std::function<ToleranceSpace()>> m = {
      {"circle4", circle4},
      {"equator-fiber", equator_fiber_model},
      {"ex-sphere", homology_sphere_with_simple_edge},
      {"hopf-base", hopf_base},
      {"hopf-fiber", hopf_fiber},
      {"hopf-total", hopf_total},
      {"octahedron", [] { return sphere(2); }},
      {"order-sensitive", order_sensitive_graph},
  };
  return m;
}

int parse_count(const std::string& token, const std::string& text) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageError("'" + token + "': expected an integer after ':'");
  return n;
}

ToleranceSpace parse_expr(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw UsageError("build: expression ends early");
  const std::string tok = tokens[pos++];
  if (const auto colon = tok.find(':'); colon != std::string::npos) {
    const std::string kind = tok.substr(0, colon);
    const int n = parse_count(tok, tok.substr(colon + 1));
    try {
      if (kind == "cycle") return cycle(n);
      if (kind == "complete") return complete(n);
      if (kind == "sphere") return sphere(n);
    } catch (const InvalidArgument& e) {
      throw UsageError("'" + tok + "': " + e.what());
    }
    throw UsageError("unknown family '" + kind + "' (expected cycle, complete or sphere)");
  }
  if (tok == "cone") return cone(parse_expr(tokens, pos));
  if (tok == "suspension" || tok == "susp") return suspension(parse_expr(tokens, pos));
  if (tok == "join" || tok == "product") {
    const ToleranceSpace x = parse_expr(tokens, pos);
    const ToleranceSpace y = parse_expr(tokens, pos);
    return tok == "join" ? join(x, y) : product(x, y);
  }
  if (!tok.empty() && tok[0] == '@') {
    std::istringstream none;
    return parse_input(tok.substr(1), none, tj::read_graph);
  }
  if (const auto it = named().find(tok); it != named().end()) return it->second();
  throw UsageError("build: unknown token '" + tok + "'");
}

struct Common {
  std::string out_path;
  bool trace = false;
  std::size_t max_nodes = SearchLimits{}.max_nodes;
  int budget = EquivalenceBudget{}.extra_vertices;
};

SearchLimits limits_of(const Common& c) {
  SearchLimits l;
  l.max_nodes = c.max_nodes;
  return l;
}

EquivalenceBudget budget_of(const Common& c) {
  EquivalenceBudget b;
  b.extra_vertices = c.budget;
  b.max_nodes = std::min<std::size_t>(c.max_nodes, EquivalenceBudget{}.max_nodes);
  return b;
}

}  // namespace

std::vector<std::string> named_spaces() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : named()) out.push_back(name);
  return out;
}

ToleranceSpace build_space(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  ToleranceSpace x = parse_expr(tokens, pos);
  if (pos != tokens.size()) throw UsageError("build: unexpected token '" + tokens[pos] + "'");
  return x;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite tolerance spaces: simple homotopy moves, clique homology, digital spheres and the digital Hopf "
               "bundle.",
               "tolspace"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tolspace 0.1.0");

  Common common;
  std::string format = "json";
  std::vector<std::string> build_tokens;
  std::string input = "-", input2;
  int dim = -1;
  bool homology_only = false;
  std::string base;

  auto add_out = [&](CLI::App* s) { s->add_option("--out", common.out_path, "Write output here instead of stdout"); };
  auto add_trace = [&](CLI::App* s) { s->add_flag("--trace", common.trace, "Include full move traces"); };
  auto add_nodes = [&](CLI::App* s) {
    s->add_option("--max-nodes", common.max_nodes, "Search node limit")->check(CLI::PositiveNumber);
  };

  auto* build = app.add_subcommand("build", "Construct a space and print it as graph JSON");
  build->add_option("expr", build_tokens, "e.g. cycle:8 | sphere:2 | join cycle:8 cycle:8 | cone X | @file.json")
      ->required();
  build->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  add_out(build);

  auto* reduce = app.add_subcommand("reduce", "Reduce a space to a move-free core");
  reduce->add_option("graph", input, "Graph JSON file, - for stdin");
  add_out(reduce), add_trace(reduce), add_nodes(reduce);

  auto* contractible = app.add_subcommand("contractible", "Decide simple digital contractibility");
  contractible->add_option("graph", input, "Graph JSON file, - for stdin");
  add_out(contractible), add_trace(contractible), add_nodes(contractible);

  auto* equivalent = app.add_subcommand("equivalent", "Check simple digital equivalence of two spaces");
  equivalent->add_option("a", input, "First graph JSON")->required();
  equivalent->add_option("b", input2, "Second graph JSON")->required();
  equivalent->add_option("--budget", common.budget, "Extra vertices allowed during search")->check(CLI::NonNegativeNumber);
  add_out(equivalent), add_trace(equivalent), add_nodes(equivalent);

  auto* homology = app.add_subcommand("homology", "Reduced integral homology of the clique complex");
  homology->add_option("graph", input, "Graph JSON file, - for stdin");
  add_out(homology);

  auto* check_sphere = app.add_subcommand("check-sphere", "Digital (homology) sphere recognition");
  check_sphere->add_option("graph", input, "Graph JSON file, - for stdin");
  check_sphere->add_option("--dim", dim, "Sphere dimension")->required()->check(CLI::NonNegativeNumber);
  check_sphere->add_flag("--homology", homology_only, "Check for a digital homology sphere instead");
  check_sphere->add_option("--budget", common.budget, "Extra vertices for link equivalence")
      ->check(CLI::NonNegativeNumber);
  add_out(check_sphere), add_trace(check_sphere), add_nodes(check_sphere);

  auto* verify_hopf = app.add_subcommand("verify-hopf", "Verify the digital Hopf fibre bundle");
  add_out(verify_hopf), add_trace(verify_hopf), add_nodes(verify_hopf);

  auto* fiber_cmd = app.add_subcommand("fiber", "Fibre of a map over a base point");
  fiber_cmd->add_option("map", input, "Map JSON file, - for stdin")->required();
  fiber_cmd->add_option("base", base, "Base label")->required();
  add_out(fiber_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "Embed a space as a digital image in the cube [-1,1]^d");
  embed_cmd->add_option("graph", input, "Graph JSON file, - for stdin");
  add_out(embed_cmd);

  auto* check_group = app.add_subcommand("check-group", "Check a multiplication table for a digital group");
  check_group->add_option("table", input, "Table JSON file, - for stdin");
  add_out(check_group);

  auto* reproduce = app.add_subcommand("reproduce-paper", "Run the acceptance suite and print a pass/fail table");
  add_out(reproduce);

  std::vector<std::string> argv_store{"tolspace"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "tolspace 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  auto emit = [&](const tj::Json& j) { buffer << j.dump(2) << "\n"; };

  try {
    SearchContext ctx(limits_of(common));
    if (*build) {
      const ToleranceSpace x = build_space(build_tokens);
      if (format == "dot") {
        buffer << tj::to_dot(x);
      } else {
        emit(tj::to_json(x));
      }
    } else if (*reduce) {
      const ToleranceSpace x = parse_input(input, in, tj::read_graph);
      emit(tj::to_json(reduce_core(x, ctx), common.trace));
    } else if (*contractible) {
      const ToleranceSpace x = parse_input(input, in, tj::read_graph);
      const ContractibilityResult r = is_simple_contractible(x, ctx);
      emit(tj::to_json(r, common.trace));
      if (r.verdict != Verdict::Yes) code = kVerificationFailed;
    } else if (*equivalent) {
      const ToleranceSpace a = parse_input(input, in, tj::read_graph);
      const ToleranceSpace b = parse_input(input2, in, tj::read_graph);
      const EquivalenceVerdict v = check_equivalent(a, b, budget_of(common), {}, ctx);
      emit(tj::to_json(v, common.trace));
      if (v.kind != EquivalenceKind::Equivalent) code = kVerificationFailed;
    } else if (*homology) {
      emit(tj::to_json(reduced_homology(parse_input(input, in, tj::read_graph))));
    } else if (*check_sphere) {
      const ToleranceSpace x = parse_input(input, in, tj::read_graph);
      SphereOptions options;
      options.budget = budget_of(common);
      const SphereReport r = homology_only ? is_digital_homology_sphere(x, dim, options, ctx) : is_digital_sphere(x, dim, ctx);
      emit(tj::to_json(r, common.trace));
      if (r.verdict != Verdict::Yes) code = kVerificationFailed;
    } else if (*verify_hopf) {
      const BundleReport r = verify_hopf_bundle(ctx);
      emit(tj::to_json(r, common.trace));
      if (!r.pass) code = kVerificationFailed;
    } else if (*fiber_cmd) {
      const ToleranceMap p = parse_input(input, in, tj::read_map);
      emit(tj::to_json(fiber(p, base)));
    } else if (*embed_cmd) {
      emit(tj::to_json(embed(parse_input(input, in, tj::read_graph))));
    } else if (*check_group) {
      const MultiplicationTable t = parse_input(input, in, tj::read_table);
      const GroupCheck g = is_digital_group(t);
      tj::Json j = tj::Json::object();
      j["group"] = tj::to_json(g);
      if (g.ok && is_connected(t.carrier())) j["complete_carrier"] = verify_completeness_theorem(t);
      emit(j);
      if (!g.ok) code = kVerificationFailed;
    } else if (*reproduce) {
      const auto outcomes = acceptance::run_all([&](const std::string& s) { err << s << "\n" << std::flush; });
      buffer << acceptance::format_table(outcomes);
      for (const auto& o : outcomes)
        if (!o.pass) code = kVerificationFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownLabel& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (common.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(common.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << common.out_path << "'\n";
      return kUsage;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace tolspace::cli
