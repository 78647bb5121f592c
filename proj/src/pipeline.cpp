#include <stdexcept>

#include "pdpp/solver.hpp"

namespace pdpp {

const char* to_string(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::Yes: return "yes";
    case PipelineStatus::No: return "no";
    case PipelineStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

PipelineResult solve_pipeline(const DppInstance& inst, const PipelineOptions& opt) {
  if (!(opt.epsilon > 0.0) || opt.epsilon > 1.0) throw std::invalid_argument("solve_pipeline: epsilon must be in (0, 1]");
  check_terminals(inst.graph, inst.pairs);
  PipelineResult res;
  int k = inst.k();
  if (k == 0) {
    res.status = PipelineStatus::Yes;
    res.solution.yes = true;
    return res;
  }
  if (k == 1) {
    auto p = shortest_path(inst.graph, inst.pairs[0].first, inst.pairs[0].second);
    res.status = p ? PipelineStatus::Yes : PipelineStatus::No;
    if (p) res.solution = {true, {*p}};
    return res;
  }

  bool certified = opt.mode == ReductionMode::Certified;
  long long side;
  if (certified)
    side = k <= 20 ? grid_side_for(k) : (1LL << 30);
  else
    side = opt.heuristic_side > 0 ? opt.heuristic_side : concentric_side_bound(0, 2 * k);
  IrrelevantOptions iopt = opt.irrelevant;
  iopt.mode = opt.mode;

  DppInstance cur = inst;
  while (true) {
    // a q x q grid minor needs q^2 vertices
    bool look = side * side <= cur.graph.num_vertices() &&
                static_cast<int>(res.certificates.size()) < opt.max_reductions;
    BranchDecomposition bd;
    if (look) {
      auto dr = branch_decompose(cur.graph, static_cast<int>(side) - 1, opt.epsilon);
      if (dr.status == DecomposeStatus::TooWide) {
        auto found = find_irrelevant_vertex(cur, *dr.witness, iopt);
        if (found.certificate) {
          cur.graph = cur.graph.without_vertex(found.certificate->removed_vertex);
          res.certificates.push_back(std::move(*found.certificate));
          continue;
        }
        // a grid without a usable vertex: fall through to the DP
        bd = bd_from_td(cur.graph, min_fill_tree_decomposition(cur.graph));
      } else {
        bd = std::move(dr.bd);
      }
    } else {
      bd = bd_from_td(cur.graph, min_fill_tree_decomposition(cur.graph));
    }
    TreeDecomposition td = td_from_bd(cur.graph, bd);
    // the bd route can be wider than a direct elimination order
    TreeDecomposition mf = min_fill_tree_decomposition(cur.graph);
    if (mf.width < td.width) td = std::move(mf);
    res.final_width = td.width;
    auto dp = dp_solve(cur, td, opt.state_budget);
    res.final_decomposition = std::move(td);
    if (dp.status == DpStatus::TooWide) {
      res.status = PipelineStatus::Indeterminate;
      res.failure = std::string(certified ? "CERTIFIED_INFEASIBLE" : "TOO_WIDE") + ": width " +
                    std::to_string(res.final_width) + " exceeds the state budget";
      return res;
    }
    res.status = dp.status == DpStatus::Yes ? PipelineStatus::Yes : PipelineStatus::No;
    res.solution = std::move(dp.solution);
    return res;
  }
}

}  // namespace pdpp
