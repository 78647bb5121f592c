#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "pdpp/graph.hpp"

namespace pdpp {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

std::vector<std::vector<Vertex>> planar_rotation(int n, const std::vector<Edge>& edges) {
  BGraph bg(n);
  for (auto e : edges) {
    if (e.u < 1 || e.v < 1 || e.u > n || e.v > n || e.u == e.v) throw EmbeddingError("edge outside vertex range");
    boost::add_edge(e.u - 1, e.v - 1, bg);
  }
  auto eidx = boost::get(boost::edge_index, bg);
  int k = 0;
  boost::graph_traits<BGraph>::edge_iterator ei, ee;
  for (boost::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(eidx, *ei, k++);

  std::vector<std::vector<BEdge>> emb(n);
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) throw EmbeddingError("graph is not planar");
  std::vector<std::vector<Vertex>> rot(n + 1);
  for (int i = 0; i < n; ++i)
    for (auto e : emb[i]) {
      int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      rot[i + 1].push_back((a == i ? b : a) + 1);
    }
  return rot;
}

}  // namespace

PlaneGraph embed(int n, const std::vector<Edge>& edges) { return PlaneGraph(n, planar_rotation(n, edges)); }

PlaneGraph embed(int n, const std::vector<Edge>& edges, Dart outer) {
  return PlaneGraph(n, planar_rotation(n, edges), outer);
}

}  // namespace pdpp
