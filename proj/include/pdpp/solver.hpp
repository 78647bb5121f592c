#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pdpp/clconfig.hpp"
#include "pdpp/decomposition.hpp"
#include "pdpp/graph.hpp"
#include "pdpp/instance.hpp"
#include "pdpp/oracle.hpp"

namespace pdpp {

// Constants of the irrelevant-vertex argument. Both need k >= 2 to be
// meaningful (r(1) is negative).
long long depth_for(int k);      // r(k) = k * 2^(k+1) - 12
long long grid_side_for(int k);  // q(k) = 2 (r(k) + 1) ceil(sqrt(2k + 1))
// 26 * k^1.5 * 2^k
double treewidth_threshold(int k);
// 26 k^1.5 2^k >= 4.5 q(k) + 1, decided in exact integer arithmetic.
// Throws std::invalid_argument outside 2 <= k <= 20.
bool threshold_covers_grid(int k);

enum class DpStatus { Yes, No, TooWide };
const char* to_string(DpStatus s);

struct DpResult {
  DpStatus status = DpStatus::TooWide;
  Solution solution;        // when Yes; passes verify_solution
  long long states = 0;     // table entries over all nodes
  int width = 0;            // of the decomposition used
};

constexpr long long kDefaultStateBudget = 4'000'000;

// Bag-state DP over a nice decomposition built from td. Each bag vertex is
// free, saturated, or a fragment end whose other end is a bag vertex or a
// forgotten terminal of a given pair. Throws std::invalid_argument when td
// is not a tree decomposition of inst.graph.
DpResult dp_solve(const DppInstance& inst, const TreeDecomposition& td, long long state_budget = kDefaultStateBudget);

enum class ReductionMode { Certified, Heuristic };
const char* to_string(ReductionMode m);

// How a heuristic removal was checked. Certified removals need no check.
enum class RemovalCheck { Proof, Oracle, Unverified };
const char* to_string(RemovalCheck c);

struct ReductionCertificate {
  Vertex removed_vertex = 0;
  GridMinorModel grid_model;
  ConcentricCycles cycles;  // removed_vertex lies in the closed interior of C_0
  int k = 0;
  ReductionMode mode = ReductionMode::Certified;
  RemovalCheck check = RemovalCheck::Proof;

  int grid_side() const { return std::min(grid_model.rows, grid_model.cols); }
  // "irrelevant <v> grid <q> cycles <r+1> mode <m>"
  std::string log_line() const;
};

struct IrrelevantOptions {
  ReductionMode mode = ReductionMode::Certified;
  // heuristic mode: cross-check with the oracle when the graph has at most
  // this many non-isolated vertices
  int oracle_vertex_limit = 400;
  long long oracle_budget = 2'000'000;
  // heuristic mode: upper bound on the number of cycles minus one (-1: none)
  int max_depth = -1;
};

struct IrrelevantResult {
  std::optional<ReductionCertificate> certificate;
  std::string failure;
};

// model must be a verified grid minor of inst.graph.
// k = 1: one of the four 3x3 windows of a 5x5 model whose open interior holds
// no terminal. k >= 2, certified: needs side >= q(k) and uses r(k) + 1 cycles.
// Heuristic: the deepest family the model allows, removal cross-checked.
// The chosen vertex is the lowest id available.
IrrelevantResult find_irrelevant_vertex(const DppInstance& inst, const GridMinorModel& model,
                                        const IrrelevantOptions& opt = {});

enum class PipelineStatus { Yes, No, Indeterminate };
const char* to_string(PipelineStatus s);

struct PipelineOptions {
  ReductionMode mode = ReductionMode::Heuristic;
  double epsilon = 1.0;
  // heuristic mode: look for grids of this side (0: the side bound for a
  // single cycle, 2 ceil(sqrt(2k + 1)))
  int heuristic_side = 0;
  int max_reductions = 1000;
  long long state_budget = kDefaultStateBudget;
  IrrelevantOptions irrelevant;  // mode is overwritten by the pipeline mode
};

struct PipelineResult {
  PipelineStatus status = PipelineStatus::Indeterminate;
  Solution solution;
  std::vector<ReductionCertificate> certificates;
  std::string failure;  // CERTIFIED_INFEASIBLE or TOO_WIDE reason when indeterminate
  int final_width = -1;
  TreeDecomposition final_decomposition;
};

// Alternates grid search and irrelevant-vertex removal; once no grid is
// found, runs dp_solve on the remaining graph. k = 1 is a path search.
PipelineResult solve_pipeline(const DppInstance& inst, const PipelineOptions& opt = {});

}  // namespace pdpp
