#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pdpp/solver.hpp"

namespace pdpp {

namespace {

long long ceil_sqrt(long long x) {
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (s * s > x) --s;
  while (s * s < x) ++s;
  return s;
}

}  // namespace

long long depth_for(int k) {
  if (k < 1 || k > 40) throw std::invalid_argument("depth_for: k out of range");
  return static_cast<long long>(k) * (1LL << (k + 1)) - 12;
}

long long grid_side_for(int k) { return 2 * (depth_for(k) + 1) * ceil_sqrt(2LL * k + 1); }

double treewidth_threshold(int k) {
  if (k < 1) throw std::invalid_argument("treewidth_threshold: k must be positive");
  return 26.0 * std::pow(static_cast<double>(k), 1.5) * std::ldexp(1.0, k);
}

bool threshold_covers_grid(int k) {
  if (k < 2 || k > 20) throw std::invalid_argument("threshold_covers_grid: k must be in [2, 20]");
  // 26 k^1.5 2^k >= 4.5 q + 1  <=>  (52 * 2^k)^2 * k^3 >= (9q + 2)^2
  using i128 = __int128;
  i128 lhs = i128(52) * (i128(1) << k);
  lhs = lhs * lhs * k * k * k;
  i128 rhs = i128(9) * grid_side_for(k) + 2;
  return lhs >= rhs * rhs;
}

const char* to_string(ReductionMode m) { return m == ReductionMode::Certified ? "certified" : "heuristic"; }

const char* to_string(RemovalCheck c) {
  switch (c) {
    case RemovalCheck::Proof: return "proof";
    case RemovalCheck::Oracle: return "oracle";
    case RemovalCheck::Unverified: return "unverified";
  }
  return "?";
}

std::string ReductionCertificate::log_line() const {
  return "irrelevant " + std::to_string(removed_vertex) + " grid " + std::to_string(grid_side()) + " cycles " +
         std::to_string(cycles.cycles.size()) + " mode " + to_string(mode);
}

namespace {

// Deletion cannot make a NO instance solvable, so v is irrelevant iff
// G - v is YES or G is NO.
RemovalCheck oracle_check(const DppInstance& inst, Vertex v, const IrrelevantOptions& opt, bool& sound) {
  sound = true;
  int live = 0;
  for (Vertex x = 1; x <= inst.graph.num_vertices(); ++x) live += inst.graph.degree(x) > 0;
  if (live > opt.oracle_vertex_limit) return RemovalCheck::Unverified;
  DppInstance minus{inst.graph.without_vertex(v), inst.pairs};
  auto a = solve_bruteforce(minus, opt.oracle_budget);
  if (a.status == OracleStatus::Yes) return RemovalCheck::Oracle;
  if (a.status == OracleStatus::BudgetExceeded) return RemovalCheck::Unverified;
  auto b = solve_bruteforce(inst, opt.oracle_budget);
  if (b.status == OracleStatus::BudgetExceeded) return RemovalCheck::Unverified;
  sound = b.status == OracleStatus::No;
  return RemovalCheck::Oracle;
}

// Non-isolated, non-terminal vertices of a region, by id.
std::vector<Vertex> candidates(const DppInstance& inst, const DiskRegion& d, bool open) {
  auto terms = inst.terminals();
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= inst.graph.num_vertices(); ++v) {
    if (inst.graph.degree(v) == 0 || std::count(terms.begin(), terms.end(), v)) continue;
    auto w = d.where_vertex(v);
    if (w == DiskRegion::Where::Inside || (!open && w == DiskRegion::Where::On)) out.push_back(v);
  }
  return out;
}

IrrelevantResult single_pair(const DppInstance& inst, const GridMinorModel& model) {
  IrrelevantResult res;
  const PlaneGraph& g = inst.graph;
  if (std::min(model.rows, model.cols) < 5) {
    res.failure = "one pair needs a 5x5 grid minor";
    return res;
  }
  auto terms = inst.terminals();
  // four 3x3 windows with pairwise disjoint open interiors
  for (auto [top, left] : {std::pair{0, 0}, {0, 2}, {2, 0}, {2, 2}}) {
    auto c = model_ring_cycle(g, model, top, left, 3);
    if (!c) continue;
    auto d = closed_interior(g, *c);
    bool clean = std::none_of(terms.begin(), terms.end(),
                              [&](Vertex t) { return d.where_vertex(t) == DiskRegion::Where::Inside; });
    if (!clean) continue;
    auto cand = candidates(inst, d, true);
    if (cand.empty()) continue;
    ReductionCertificate cert;
    cert.removed_vertex = cand.front();
    cert.grid_model = model;
    cert.cycles.cycles = {*c};
    cert.k = 1;
    cert.mode = ReductionMode::Certified;
    cert.check = RemovalCheck::Proof;
    res.certificate = std::move(cert);
    return res;
  }
  res.failure = "every window has a terminal inside";
  return res;
}

}  // namespace

IrrelevantResult find_irrelevant_vertex(const DppInstance& inst, const GridMinorModel& model,
                                        const IrrelevantOptions& opt) {
  IrrelevantResult res;
  const PlaneGraph& g = inst.graph;
  int k = inst.k();
  if (k == 0) {
    res.failure = "no pairs: every vertex is irrelevant, nothing to certify";
    return res;
  }
  if (k == 1) return single_pair(inst, model);
  auto terms = inst.terminals();
  int side = std::min(model.rows, model.cols);
  int r = 0;
  if (opt.mode == ReductionMode::Certified) {
    if (k > 20 || side < grid_side_for(k)) {
      res.failure = "grid side " + std::to_string(side) + " below q(" + std::to_string(k) + ")";
      return res;
    }
    r = static_cast<int>(depth_for(k));
  } else {
    long long cap = k <= 20 ? depth_for(k) : (1LL << 30);
    if (opt.max_depth >= 0) cap = std::min<long long>(cap, opt.max_depth);
    r = -1;
    while (r + 1 <= cap && concentric_side_bound(r + 1, static_cast<int>(terms.size())) <= side) ++r;
    if (r < 0) {
      res.failure = "grid side " + std::to_string(side) + " too small for one cycle";
      return res;
    }
  }
  // the extraction needs this side; checked here as well as inside
  int bound = concentric_side_bound(r, static_cast<int>(terms.size()));
  if (side < bound) throw std::logic_error("find_irrelevant_vertex: side bound violated at extraction");
  if (opt.mode == ReductionMode::Certified && bound != grid_side_for(k))
    throw std::logic_error("find_irrelevant_vertex: q(k) differs from the side bound");
  auto cc = concentric_from_grid(g, model, terms, r);
  if (!cc.cycles) {
    res.failure = cc.failure;
    return res;
  }
  auto d0 = closed_interior(g, cc.cycles->cycles.front());
  auto cand = candidates(inst, d0, false);
  if (cand.empty()) {
    res.failure = "D_0 has no removable vertex";
    return res;
  }
  ReductionCertificate cert;
  cert.grid_model = model;
  cert.cycles = *cc.cycles;
  cert.k = k;
  cert.mode = opt.mode;
  if (opt.mode == ReductionMode::Certified) {
    cert.removed_vertex = cand.front();
    cert.check = RemovalCheck::Proof;
    res.certificate = std::move(cert);
    return res;
  }
  for (Vertex v : cand) {
    bool sound = true;
    auto chk = oracle_check(inst, v, opt, sound);
    if (!sound) continue;
    cert.removed_vertex = v;
    cert.check = chk;
    res.certificate = std::move(cert);
    return res;
  }
  res.failure = "the oracle rejects every vertex of D_0";
  return res;
}

}  // namespace pdpp
