#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "dualgraph/classification.hpp"
#include "dualgraph/corpus.hpp"
#include "dualgraph/io.hpp"
#include "dualgraph/matrix.hpp"
#include "dualgraph/modification.hpp"
#include "dualgraph/self_similarity.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace dualgraph;

// Exit codes: 0 success or yes-verdict, 1 no-verdict / violation / failed
// precondition, 2 usage or parse error. Unexpected internal errors use 3.
constexpr int kExitNo = 1;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

WeightedGraph load_graph(const std::string& path) {
  return parse_graph(slurp(path));
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  bool json = false;
  std::string file;
  std::string name;
  int at = -1;
  std::vector<int> edge;
  int new_id = -1;
  int budget = -1;
  int k_max = kDefaultTowerCap;
  bool list = false;
  RoundTripOptions roundtrip;
};

int run_validate(const Options& opt) {
  WeightedGraph g = parse_graph_raw(slurp(opt.file));
  auto violation = g.validate();
  if (opt.json) {
    Json out{{"format_version", kFormatVersion}, {"valid", !violation}};
    if (violation) out["violation"] = violation->message;
    print_json(out);
  } else if (violation) {
    std::cerr << "invalid: " << violation->message << "\n";
  } else {
    std::cout << "valid\n";
  }
  return violation ? kExitNo : 0;
}

int run_blowup(const Options& opt) {
  WeightedGraph g = load_graph(opt.file);
  bool at_vertex = opt.at >= 0;
  bool at_edge = !opt.edge.empty();
  if (at_vertex == at_edge)
    throw CLI::ValidationError("blowup",
                               "give exactly one of --at or --edge");
  VertexId new_id = opt.new_id >= 0 ? opt.new_id : g.fresh_id();
  ModStep step = at_vertex
                     ? ModStep::at_vertex(opt.at, new_id)
                     : ModStep::at_edge(opt.edge[0], opt.edge[1], new_id);
  std::cout << serialize(apply_step(g, step));
  return 0;
}

int run_blowdown(const Options& opt) {
  WeightedGraph g = load_graph(opt.file);
  if (opt.at < 0)
    throw CLI::ValidationError("blowdown", "--at is required");
  BlowdownResult r = blowdown(g, opt.at);
  if (!opt.json) {
    const ModStep& s = r.undone;
    std::cerr << "undone: "
              << (s.kind == ModStep::Kind::Vertex
                      ? "vertex step at " + std::to_string(s.center_a)
                      : "edge step at [" + std::to_string(s.center_a) + "," +
                            std::to_string(s.center_b) + "]")
              << ", new id " << s.new_id << "\n";
  }
  std::cout << serialize(r.result);
  return 0;
}

int run_matrix(const Options& opt) {
  WeightedGraph g = load_graph(opt.file);
  IntersectionMatrix m = intersection_matrix(g);
  if (opt.json) {
    Json out{{"format_version", kFormatVersion}};
    out["order"] = m.vertex_order;
    Json rows = Json::array();
    for (int i = 0; i < m.entries.order(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < m.entries.order(); ++j)
        row.push_back(m.entries.at(i, j));
      rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    print_json(out);
  } else {
    for (int i = 0; i < m.entries.order(); ++i) {
      for (int j = 0; j < m.entries.order(); ++j)
        std::cout << (j ? " " : "") << m.entries.at(i, j);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_negdef(const Options& opt) {
  bool yes = is_negative_definite(load_graph(opt.file));
  if (opt.json) {
    print_json(Json{{"format_version", kFormatVersion},
                    {"negative_definite", yes}});
  } else {
    std::cout << (yes ? "negative definite\n" : "not negative definite\n");
  }
  return yes ? 0 : kExitNo;
}

int run_det(const Options& opt) {
  Bigint d = determinant(load_graph(opt.file));
  if (opt.json) {
    print_json(Json{{"format_version", kFormatVersion},
                    {"determinant", d.str()}});
  } else {
    std::cout << d << "\n";
  }
  return 0;
}

int run_is_regular(const Options& opt) {
  WeightedGraph g = load_graph(opt.file);
  auto witness = is_regular(g);
  if (opt.json) {
    Json out{{"format_version", kFormatVersion},
             {"verdict", witness ? "regular" : "not-regular"}};
    if (witness) out["blowdown_order"] = witness->blowdown_order;
    print_json(out);
  } else if (witness) {
    std::cout << "regular\n";
    std::cout << "blowdown order:";
    for (VertexId v : witness->blowdown_order) std::cout << " " << v;
    std::cout << "\n";
  } else {
    std::cout << "not regular\n";
  }
  return witness ? 0 : kExitNo;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::NoWithinBudget:
      return "no-within-budget";
    default:
      return "definitely-not";
  }
}

int report_no(const Options& opt, Verdict verdict, int budget,
              const std::string& reason, const std::string& what) {
  if (opt.json) {
    Json out{{"format_version", kFormatVersion},
             {"verdict", verdict_name(verdict)},
             {"budget", budget}};
    if (!reason.empty()) out["reason"] = reason;
    print_json(out);
  } else if (verdict == Verdict::DefinitelyNot) {
    std::cerr << "not " << what << ": " << reason << "\n";
  } else {
    std::cerr << "no " << what << " witness within budget " << budget << "\n";
  }
  return kExitNo;
}

int emit_witness(const Options& opt, const std::string& document,
                 Verdict verdict, int budget, const std::string& summary) {
  if (opt.json) {
    Json out{{"format_version", kFormatVersion},
             {"verdict", verdict_name(verdict)},
             {"budget", budget},
             {"witness", Json::parse(document)}};
    print_json(out);
  } else {
    std::cerr << summary << "\n";
    std::cout << document;
  }
  return 0;
}

int run_is_sandwiched(const Options& opt) {
  WeightedGraph g = load_graph(opt.file);
  int budget = opt.budget >= 0 ? opt.budget : default_leaf_budget(g);
  SandwichResult r = is_sandwiched(g, budget);
  if (r.verdict != Verdict::Yes)
    return report_no(opt, r.verdict, r.budget, r.reason, "sandwiched");
  if (auto violation = verify_sandwich_witness(g, *r.witness))
    throw std::logic_error("emitted witness failed verification: " +
                           violation->message);
  return emit_witness(opt, serialize_sandwich_witness(g, *r.witness),
                      r.verdict, r.budget,
                      "sandwiched with " + std::to_string(r.budget) +
                          " extra leaves");
}

int run_is_self_similar(const Options& opt) {
  WeightedGraph g = load_graph(opt.file);
  int budget = opt.budget >= 0 ? opt.budget : default_leaf_budget(g);
  SelfSimResult r = is_self_similar(g, budget);
  if (r.verdict != Verdict::Yes)
    return report_no(opt, r.verdict, r.budget, r.reason, "self-similar");
  if (auto violation = verify_witness(*r.witness))
    throw std::logic_error("emitted witness failed verification: " +
                           violation->message);
  return emit_witness(opt, serialize_selfsim_witness(*r.witness), r.verdict,
                      r.budget,
                      "self-similar via a " +
                          std::to_string(r.witness->seq.steps.size()) +
                          " step modification");
}

int run_verify_witness(const Options& opt) {
  WitnessDocument doc = parse_witness(slurp(opt.file));
  std::optional<Violation> violation;
  if (doc.kind == WitnessDocument::Kind::Sandwich)
    violation = verify_sandwich_witness(doc.graph, *doc.sandwich);
  else
    violation = verify_witness(*doc.selfsim);
  if (opt.json) {
    Json out{{"format_version", kFormatVersion}, {"valid", !violation}};
    if (violation) out["violation"] = violation->message;
    print_json(out);
  } else if (violation) {
    std::cerr << "invalid witness: " << violation->message << "\n";
  } else {
    std::cout << "witness ok\n";
  }
  return violation ? kExitNo : 0;
}

int run_extract(const Options& opt) {
  WitnessDocument doc = parse_witness(slurp(opt.file));
  if (doc.kind != WitnessDocument::Kind::SelfSimilar)
    throw ParseError("extract expects a self-similar witness document");
  if (auto violation = verify_witness(*doc.selfsim)) {
    std::cerr << "invalid witness: " << violation->message << "\n";
    return kExitNo;
  }
  auto extraction = extract_sandwich(*doc.selfsim, opt.k_max);
  if (!extraction) {
    if (opt.json) {
      print_json(Json{{"format_version", kFormatVersion},
                      {"extracted", false},
                      {"k_max", opt.k_max}});
    } else {
      std::cerr << "no admissible stage within " << opt.k_max
                << " iterations\n";
    }
    return kExitNo;
  }
  if (!opt.json)
    std::cerr << "extracted at stage " << extraction->depth << "\n";
  std::cout << serialize_extraction(*extraction);
  return 0;
}

int run_roundtrip(const Options& opt) {
  RoundTripReport report = run_roundtrip_suite(opt.roundtrip);
  if (opt.json) {
    Json out{{"format_version", kFormatVersion},
             {"total", report.total},
             {"passed", report.passed}};
    out["failures"] = report.failures;
    print_json(out);
  } else {
    std::cout << "passed " << report.passed << "/" << report.total << "\n";
    for (const std::string& f : report.failures) std::cerr << f << "\n";
  }
  return report.passed == report.total ? 0 : kExitNo;
}

int run_named(const Options& opt) {
  if (opt.list) {
    if (opt.json) {
      print_json(Json(named_graph_catalog()));
    } else {
      for (const std::string& name : named_graph_catalog())
        std::cout << name << "\n";
    }
    return 0;
  }
  if (opt.name.empty())
    throw CLI::ValidationError("named", "give a graph name or --list");
  std::cout << serialize(named_graph(opt.name), opt.name);
  return 0;
}

int run_export_dot(const Options& opt) {
  std::cout << export_dot(load_graph(opt.file));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted graph rewriting toolbox"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine readable output");

  int rc = 0;
  auto add = [&](const std::string& name, const std::string& help,
                 auto handler, bool takes_file = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (takes_file)
      sub->add_option("file", opt.file, "graph or witness document, - for stdin")
          ->required();
    sub->callback([&, handler]() { rc = handler(opt); });
    return sub;
  };

  add("validate", "check a graph document", run_validate);

  CLI::App* blowup = add("blowup", "apply one rewriting step", run_blowup);
  blowup->add_option("--at", opt.at, "center vertex id");
  blowup->add_option("--edge", opt.edge, "center edge endpoints")->expected(2);
  blowup->add_option("--new-id", opt.new_id, "id for the created vertex");

  CLI::App* blowdown =
      add("blowdown", "undo one rewriting step", run_blowdown);
  blowdown->add_option("--at", opt.at, "(0,1) vertex to contract")->required();

  add("matrix", "print the intersection matrix", run_matrix);
  add("negdef", "test negative definiteness", run_negdef);
  add("det", "print the intersection determinant", run_det);
  add("is-regular", "decide constructibility from a point", run_is_regular);

  CLI::App* sandwiched = add(
      "is-sandwiched", "decide embeddability into a regular graph",
      run_is_sandwiched);
  sandwiched->add_option("--budget", opt.budget,
                         "maximum number of extra leaves");

  CLI::App* selfsim =
      add("is-self-similar", "decide self-similarity", run_is_self_similar);
  selfsim->add_option("--budget", opt.budget,
                      "maximum number of extra leaves");

  add("verify-witness", "re-check a witness document", run_verify_witness);

  CLI::App* extract =
      add("extract", "recover a sandwich from a self-similar witness",
          run_extract);
  extract->add_option("--kmax", opt.k_max, "iteration cap");

  CLI::App* roundtrip = add("roundtrip", "run the randomized agreement suite",
                            run_roundtrip, false);
  roundtrip->add_option("--seed", opt.roundtrip.seed, "generator seed");
  roundtrip->add_option("--count", opt.roundtrip.count, "number of cases");
  roundtrip->add_option("--budget", opt.roundtrip.budget, "leaf budget");
  roundtrip->add_option("--depth", opt.roundtrip.max_depth,
                        "rewriting steps per generated graph");

  CLI::App* named =
      add("named", "print a graph from the builtin catalog", run_named, false);
  named->add_option("name", opt.name, "catalog name");
  named->add_flag("--list", opt.list, "list catalog names");

  add("export-dot", "render a graph document for graphviz", run_export_dot);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return rc;
}
