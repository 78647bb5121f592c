// pdpp: command-line front end.
//
// Exit codes: 0 yes / ok, 1 no / rejected, 2 indeterminate, 64 usage,
// 65 bad input data, 66 unreadable input, 70 internal error.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "pdpp/clconfig.hpp"
#include "pdpp/decomposition.hpp"
#include "pdpp/instance.hpp"
#include "pdpp/oracle.hpp"
#include "pdpp/reroute.hpp"
#include "pdpp/solver.hpp"

using namespace pdpp;
using json = nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kUnknown = 2, kUsage = 64, kDataErr = 65, kNoInput = 66, kSoftware = 70;

// Carries an exit code out of a command.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kNoInput, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Exit{kDataErr, path + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw Exit{kDataErr, path + ": " + e.what()};
  } catch (const EmbeddingError& e) {
    throw Exit{kDataErr, path + ": " + e.what()};
  }
}

DppInstance load_instance(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_instance(t); });
}

// "cycle v1 v2 ..." per line, innermost first; '#' starts a comment.
ConcentricCycles parse_cycles(const std::string& text) {
  ConcentricCycles cc;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word != "cycle") throw ParseError(no, 1, "expected 'cycle'");
    Cycle c;
    for (std::string t; ls >> t;) {
      try {
        size_t used = 0;
        long v = std::stol(t, &used);
        if (used != t.size() || v < 1) throw std::invalid_argument(t);
        c.vertices.push_back(static_cast<Vertex>(v));
      } catch (const std::exception&) {
        throw ParseError(no, 0, "bad vertex '" + t + "'");
      }
    }
    if (c.vertices.size() < 3) throw ParseError(no, 0, "a cycle needs at least three vertices");
    cc.cycles.push_back(std::move(c));
  }
  if (cc.cycles.empty()) throw ParseError(1, 0, "no cycles");
  return cc;
}

std::string solution_text(const Solution& s) { return write_solution(s); }

json solution_json(const Solution& s) {
  json j;
  j["answer"] = s.yes ? "yes" : "no";
  j["paths"] = s.paths;
  return j;
}

ReductionMode parse_mode(const std::string& m) { return m == "certified" ? ReductionMode::Certified : ReductionMode::Heuristic; }

// ---------------------------------------------------------------- solve

struct SolveFlags {
  std::vector<std::string> files;
  std::string engine = "pipeline";
  std::string mode = "heuristic";
  double epsilon = 1.0;
  long long budget = 0;  // 0: engine default
  int jobs = 1;
  bool json = false;
  std::string emit_decomposition;
};

struct SolveOutcome {
  int code = kSoftware;
  std::string out, err;
};

SolveOutcome solve_one(const std::string& path, const SolveFlags& f) {
  SolveOutcome o;
  try {
    auto inst = load_instance(path);
    json j;
    j["file"] = path;
    std::ostringstream out, err;
    std::optional<Solution> sol;
    std::string why;
    TreeDecomposition td;
    bool have_td = false;
    if (f.engine == "oracle") {
      auto r = solve_bruteforce(inst, f.budget > 0 ? f.budget : kDefaultOracleBudget);
      j["nodes"] = r.nodes;
      if (r.status == OracleStatus::BudgetExceeded)
        why = "oracle budget exceeded after " + std::to_string(r.nodes) + " nodes";
      else
        sol = r.solution;
    } else if (f.engine == "dp") {
      td = min_fill_tree_decomposition(inst.graph);
      have_td = true;
      auto r = dp_solve(inst, td, f.budget > 0 ? f.budget : kDefaultStateBudget);
      j["width"] = r.width;
      j["states"] = r.states;
      if (r.status == DpStatus::TooWide)
        why = "state budget exceeded at width " + std::to_string(r.width);
      else
        sol = r.solution;
    } else {
      PipelineOptions po;
      po.mode = parse_mode(f.mode);
      po.epsilon = f.epsilon;
      if (f.budget > 0) po.state_budget = f.budget;
      auto r = solve_pipeline(inst, po);
      json certs = json::array();
      for (const auto& c : r.certificates) {
        err << c.log_line() << '\n';
        certs.push_back({{"vertex", c.removed_vertex},
                         {"grid", c.grid_side()},
                         {"cycles", c.cycles.cycles.size()},
                         {"mode", to_string(c.mode)},
                         {"check", to_string(c.check)}});
      }
      j["certificates"] = certs;
      j["width"] = r.final_width;
      if (r.final_width >= 0) {
        td = r.final_decomposition;
        have_td = true;
      }
      if (r.status == PipelineStatus::Indeterminate)
        why = r.failure;
      else
        sol = r.solution;
    }
    if (!f.emit_decomposition.empty() && have_td) {
      std::ofstream dout(f.emit_decomposition);
      if (!dout) throw Exit{kNoInput, "cannot write " + f.emit_decomposition};
      dout << write_decomposition(td);
    }
    if (sol) {
      if (sol->yes && !verify_solution(inst, *sol).ok) throw Exit{kSoftware, path + ": solver returned an invalid solution"};
      o.code = sol->yes ? kYes : kNo;
      if (f.json) {
        auto s = solution_json(*sol);
        j.update(s);
      } else {
        out << solution_text(*sol);
      }
    } else {
      o.code = kUnknown;
      err << path << ": indeterminate: " << why << '\n';
      if (f.json) {
        j["answer"] = "unknown";
        j["reason"] = why;
      } else {
        out << "s dpp unknown\n";
      }
    }
    if (f.json) out << j.dump() << '\n';
    o.out = out.str();
    o.err = err.str();
  } catch (const Exit& e) {
    o.code = e.code;
    o.err = e.message + "\n";
  } catch (const std::exception& e) {
    o.code = kSoftware;
    o.err = path + ": internal error: " + e.what() + "\n";
  }
  return o;
}

int cmd_solve(const SolveFlags& f) {
  if (!(f.epsilon > 0.0) || f.epsilon > 1.0) throw Exit{kUsage, "--epsilon must be in (0, 1]"};
  if (f.jobs < 1) throw Exit{kUsage, "--jobs must be positive"};
  if (!f.emit_decomposition.empty() && f.files.size() != 1)
    throw Exit{kUsage, "--emit-decomposition takes a single input file"};
  std::vector<SolveOutcome> res(f.files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < f.files.size();) res[i] = solve_one(f.files[i], f);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(f.jobs, static_cast<int>(f.files.size())); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  // worst code wins: errors, then unknown, then no
  int code = kYes;
  auto rank = [](int c) { return c == kYes ? 0 : c == kNo ? 1 : c == kUnknown ? 2 : 3; };
  for (size_t i = 0; i < res.size(); ++i) {
    if (f.files.size() > 1 && !f.json) std::cout << "# " << f.files[i] << '\n';
    std::cout << res[i].out;
    std::cerr << res[i].err;
    if (rank(res[i].code) > rank(code) || (rank(res[i].code) == 3 && rank(code) == 3 && res[i].code > code))
      code = res[i].code;
  }
  return code;
}

// ---------------------------------------------------------------- reduce

struct ReduceFlags {
  std::string file;
  std::string mode = "heuristic";
  int max = 1;
  std::string output;
  bool json = false;
};

int cmd_reduce(const ReduceFlags& f) {
  if (f.max < 1) throw Exit{kUsage, "--max must be positive"};
  auto inst = load_instance(f.file);
  IrrelevantOptions io;
  io.mode = parse_mode(f.mode);
  int k = inst.k();
  long long side;
  if (k == 1)
    side = 5;
  else if (io.mode == ReductionMode::Certified)
    side = k <= 20 ? grid_side_for(k) : (1LL << 30);
  else
    side = concentric_side_bound(0, 2 * k);
  json certs = json::array();
  std::string last_failure;
  int done = 0;
  while (done < f.max) {
    if (side * side > inst.graph.num_vertices()) {
      last_failure = "graph too small for a " + std::to_string(side) + "-grid";
      break;
    }
    auto found = find_grid_minor(inst.graph, static_cast<int>(side));
    if (!found.model) {
      last_failure = "no " + std::to_string(side) + "x" + std::to_string(side) + " grid minor found";
      break;
    }
    auto r = find_irrelevant_vertex(inst, *found.model, io);
    if (!r.certificate) {
      last_failure = r.failure;
      break;
    }
    const auto& c = *r.certificate;
    if (f.json)
      certs.push_back({{"vertex", c.removed_vertex},
                       {"grid", c.grid_side()},
                       {"cycles", c.cycles.cycles.size()},
                       {"mode", to_string(c.mode)},
                       {"check", to_string(c.check)}});
    else
      std::cout << c.log_line() << '\n';
    inst.graph = inst.graph.without_vertex(c.removed_vertex);
    ++done;
  }
  if (f.json) std::cout << json{{"certificates", certs}, {"stopped", last_failure}}.dump() << '\n';
  if (done == 0) std::cerr << f.file << ": no reduction: " << last_failure << '\n';
  if (!f.output.empty()) {
    std::ofstream out(f.output);
    if (!out) throw Exit{kNoInput, "cannot write " + f.output};
    out << write_instance(inst);
  }
  return done > 0 ? kYes : kNo;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeFlags {
  std::string file, cycles, linkage;
  bool json = false;
};

int cmd_analyze(const AnalyzeFlags& f) {
  auto inst = load_instance(f.file);
  CLConfiguration q;
  q.cycles = parse_file(f.cycles, [](const std::string& t) { return parse_cycles(t); });
  if (!f.linkage.empty()) {
    auto s = parse_file(f.linkage, [](const std::string& t) { return parse_solution(t); });
    q.linkage.paths = s.paths;
  }
  const PlaneGraph& g = inst.graph;
  if (auto v = verify_configuration(g, q); !v.ok) throw Exit{kDataErr, "not a CL-configuration: " + v.violation};
  json j;
  auto segs = segments(g, q);
  j["segments"] = segs.size();
  auto conv = is_convex(g, q);
  j["convex"] = conv.convex;
  if (!conv.convex) j["violation"] = {{"clause", conv.clause}, {"level", conv.level}, {"segment", conv.segment}};
  auto tight = verify_tight(g, q.cycles);
  j["tight"] = tight.tight;
  j["touch_free"] = is_touch_free(g, q);
  j["extremal"] = count_extremal(g, q);
  if (!q.linkage.empty()) j["cost"] = linkage_cost(q.linkage, q.cycles.cycles);
  if (conv.convex) {
    auto t = segment_tree(g, q);
    j["leaves"] = t.leaves();
    j["height"] = t.height;
    j["real_height"] = t.real_height;
    j["dilation"] = t.dilation;
    auto types = segment_types(g, q);
    if (types.transitive)
      j["classes"] = types.classes.size();
    else
      j["classes_failure"] = types.failure;
  }
  if (f.json) {
    std::cout << j.dump() << '\n';
    return kYes;
  }
  std::cout << "segments: " << segs.size() << "\n";
  std::cout << "convex: " << (conv.convex ? "true" : "false");
  if (!conv.convex)
    std::cout << " (clause " << conv.clause << " at level " << conv.level << ", segment " << conv.segment << ")";
  std::cout << "\n";
  std::cout << "tight: " << (tight.tight ? "true" : "false") << "\n";
  std::cout << "touch-free: " << (j["touch_free"].get<bool>() ? "true" : "false") << "\n";
  std::cout << "extremal: " << j["extremal"] << "\n";
  if (j.contains("cost")) std::cout << "cost: " << j["cost"] << "\n";
  if (conv.convex) {
    std::cout << "leaves: " << j["leaves"] << "\n";
    std::cout << "height: " << j["height"] << "\n";
    std::cout << "real height: " << j["real_height"] << "\n";
    std::cout << "dilation: " << j["dilation"] << "\n";
    if (j.contains("classes"))
      std::cout << "classes: " << j["classes"] << "\n";
    else
      std::cout << "classes: not transitive (" << j["classes_failure"].get<std::string>() << ")\n";
  }
  return kYes;
}

// ---------------------------------------------------------------- route

struct RouteFlags {
  std::string file;
  int k = 0;
  bool partial = false;
  bool json = false;
};

int cmd_route(const RouteFlags& f) {
  if (f.k < 0) throw Exit{kUsage, "--k must be positive"};
  auto h = parse_file(f.file, [&](const std::string& t) { return parse_pattern(t, f.k); });
  auto chk = f.partial ? check_partial_pattern(h) : check_pattern(h);
  if (!chk.ok) {
    std::cerr << f.file << ": invalid pattern: " << chk.violation << '\n';
    if (f.json) std::cout << json{{"ok", false}, {"edge", chk.edge}, {"violation", chk.violation}}.dump() << '\n';
    return kNo;
  }
  auto r = f.partial ? route_partial(h.k, h) : route_pattern(h.k, h);
  if (!r.model) {
    std::cerr << f.file << ": cannot route: " << r.failure << '\n';
    if (f.json) std::cout << json{{"ok", false}, {"failure", r.failure}, {"required_side", required_side(h)}}.dump() << '\n';
    return kNo;
  }
  if (f.json) {
    std::cout << json{{"ok", true}, {"k", h.k}, {"paths", r.model->phi1}}.dump() << '\n';
    return kYes;
  }
  std::cout << "# " << h.k << "x" << h.k << " grid, vertex r*k+c+1\n";
  for (size_t e = 0; e < r.model->phi1.size(); ++e) {
    std::cout << "path " << e + 1;
    for (Vertex v : r.model->phi1[e]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kYes;
}

// ---------------------------------------------------------------- gen

struct GenFlags {
  std::string kind;
  int size = 0, vertices = 0, edges = 0, pairs = 1;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenFlags& f) {
  DppInstance inst;
  try {
    if (f.kind == "grid") {
      if (f.size < 2) throw Exit{kUsage, "gen grid needs --size >= 2"};
      inst = gen_grid_instance(f.size, f.pairs, f.seed);
    } else {
      if (f.vertices < 1) throw Exit{kUsage, "gen random needs --vertices"};
      int m = f.edges > 0 ? f.edges : 2 * f.vertices - 3;
      inst = gen_random_planar(f.vertices, m, f.pairs, f.seed);
    }
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
  std::string text = write_instance(inst);
  if (f.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.output);
    if (!out) throw Exit{kNoInput, "cannot write " + f.output};
    out << text;
  }
  return kYes;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& inst_path, const std::string& sol_path, bool as_json) {
  auto inst = load_instance(inst_path);
  auto sol = parse_file(sol_path, [](const std::string& t) { return parse_solution(t); });
  auto v = verify_solution(inst, sol);
  if (as_json)
    std::cout << json{{"ok", v.ok}, {"violation", v.violation}}.dump() << '\n';
  else
    std::cout << (v.ok ? std::string("ok") : "invalid: " + v.violation) << '\n';
  return v.ok ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar disjoint paths toolkit"};
  app.require_subcommand(1);

  SolveFlags sf;
  auto* solve = app.add_subcommand("solve", "solve instances");
  solve->add_option("files", sf.files, "instance files")->required();
  solve->add_option("--engine", sf.engine, "pipeline, dp or oracle")
      ->check(CLI::IsMember({"pipeline", "dp", "oracle"}));
  solve->add_option("--mode", sf.mode, "certified or heuristic")->check(CLI::IsMember({"certified", "heuristic"}));
  solve->add_option("--epsilon", sf.epsilon, "approximation parameter in (0, 1]");
  solve->add_option("--budget", sf.budget, "oracle nodes or DP states");
  solve->add_option("--jobs", sf.jobs, "parallel input files");
  solve->add_flag("--json", sf.json, "JSON output");
  solve->add_option("--emit-decomposition", sf.emit_decomposition, "write the decomposition used by the DP");

  ReduceFlags rf;
  auto* reduce = app.add_subcommand("reduce", "remove irrelevant vertices");
  reduce->add_option("file", rf.file, "instance file")->required();
  reduce->add_option("--mode", rf.mode, "certified or heuristic")->check(CLI::IsMember({"certified", "heuristic"}));
  reduce->add_option("--max", rf.max, "most vertices to remove");
  reduce->add_option("-o,--output", rf.output, "write the reduced instance");
  reduce->add_flag("--json", rf.json, "JSON output");

  AnalyzeFlags af;
  auto* analyze = app.add_subcommand("analyze", "report on a CL-configuration");
  analyze->add_option("file", af.file, "instance file (graph and embedding)")->required();
  analyze->add_option("--cycles", af.cycles, "cycle file, innermost first")->required();
  analyze->add_option("--linkage", af.linkage, "linkage in solution format");
  analyze->add_flag("--json", af.json, "JSON output");

  RouteFlags tf;
  auto* route = app.add_subcommand("route", "route a boundary pattern in a grid");
  route->add_option("file", tf.file, "pattern file")->required();
  route->add_option("--k", tf.k, "grid side (default: from the file)");
  route->add_flag("--partial", tf.partial, "allow unmatched boundary vertices");
  route->add_flag("--json", tf.json, "JSON output");

  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", gf.kind, "grid or random")->required()->check(CLI::IsMember({"grid", "random"}));
  gen->add_option("--size", gf.size, "grid side");
  gen->add_option("--vertices", gf.vertices, "random: vertex count");
  gen->add_option("--edges", gf.edges, "random: edge count");
  gen->add_option("--pairs", gf.pairs, "terminal pairs");
  gen->add_option("--seed", gf.seed, "random seed");
  gen->add_option("-o,--output", gf.output, "output file");

  std::string vinst, vsol;
  bool vjson = false;
  auto* verify = app.add_subcommand("verify", "check a solution");
  verify->add_option("instance", vinst)->required();
  verify->add_option("solution", vsol)->required();
  verify->add_flag("--json", vjson, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(sf);
    if (*reduce) return cmd_reduce(rf);
    if (*analyze) return cmd_analyze(af);
    if (*route) return cmd_route(tf);
    if (*gen) return cmd_gen(gf);
    if (*verify) return cmd_verify(vinst, vsol, vjson);
  } catch (const Exit& e) {
    std::cerr << "pdpp: " << e.message << '\n';
    return e.code;
  } catch (const ConfigurationError& e) {
    std::cerr << "pdpp: " << e.what() << '\n';
    return kDataErr;
  } catch (const std::exception& e) {
    std::cerr << "pdpp: internal error: " << e.what() << '\n';
    return kSoftware;
  }
  return kUsage;
}
