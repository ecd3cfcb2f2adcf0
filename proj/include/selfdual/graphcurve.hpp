// Graph curves: a trivalent 3-connected graph G of genus g determines a
// configuration of 2g-2 lines in P^{g-1} (one per vertex, spanned by the
// cycle-matrix columns of its incident edges).  Slicing with a generic
// hyperplane yields 2g-2 points whose matroid depends only on G.  This
// header covers cycle matrices, slices, the graph->matroid map, cubic graph
// generation, graph6 I/O, and the small-genus census.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "selfdual/config.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/matroid.hpp"
#include "selfdual/matrix.hpp"

namespace sd {

// Simple undirected graph on vertices 0..vertex_count-1.  Edge order is
// meaningful: cycle-matrix columns follow it.  When oriented is true, an
// edge pair (u, v) is directed u -> v; otherwise low -> high is assumed.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  bool oriented = false;
};

// Throws BadInput on loops, parallel edges, or out-of-range endpoints.
void validate_graph(const SimpleGraph& g);

// All degrees 3 and no disconnecting vertex set of size <= 2 (brute force
// over singletons and pairs; intended for vertex_count <= 12).
bool is_trivalent_3connected(const SimpleGraph& g);

// A g x |E| matrix whose rows span the cycle space of the graph; entries in
// {-1, 0, 1}, one column per edge in input order.
struct CycleMatrix {
  SimpleGraph graph;
  RatMatrix mat;
  int genus() const { return mat.rows(); }
};

// Fundamental cycles of the BFS spanning tree rooted at vertex 0 (edges
// scanned in input order), one row per non-tree edge in input order.  Signs
// follow the stored orientation (low -> high when none).
// Throws NotConnected, BadInput.
CycleMatrix cycle_matrix(const SimpleGraph& g);

// Rows prescribed as closed vertex walks (consecutive vertices joined by an
// edge, last closing to first); signs follow the stored orientation.  The
// walks must be edge-disjoint per row and span the cycle space.
// Throws NotConnected, BadInput.
CycleMatrix cycle_matrix_from_cycles(const SimpleGraph& g,
                                     const std::vector<std::vector<int>>& cycles);

// One point per vertex: the vertex line (span of two independent incident
// columns c1, c2) meets {h.x = 0} in (h.c2) c1 - (h.c1) c2.  The g
// coordinates are then projected to g-1 by deleting delete_coord (default
// -1 = first index of largest |h_k|).  Column v of the result is vertex v.
// Throws DegenerateHyperplane when a vertex line lies inside the hyperplane,
// h is zero at the deleted coordinate, or the projected points drop rank;
// BadInput on shape violations.
Configuration graph_curve_slice(const CycleMatrix& c, const std::vector<Rat>& h,
                                int delete_coord = -1);

// The matroid of a generic hyperplane slice; element i is vertex i-1.
// Two slices with independent seeded hyperplanes (integer entries in
// [-10^6, 10^6]) must agree; degenerate or disagreeing pairs are retried.
// Throws NotTrivalent3Connected, GenericityNotCertified after retry_bound
// failed pairs.
Matroid matroid_of_graph(const SimpleGraph& g, std::uint64_t seed,
                         int retry_bound = 64);

// All trivalent 3-connected graphs with the given number of vertices, up to
// isomorphism, in canonical labeling sorted by canonical key.  Generated by
// closing K4 under edge insertion (subdivide two distinct edges, join the
// new vertices).  Throws BadInput unless vertex_count is even and in 4..12.
std::vector<SimpleGraph> generate_cubic_3connected(int vertex_count);

// Canonical form under vertex relabelings: the lex-max adjacency bit word
// over refinement-class-respecting permutations.  Key format "V:hex".
std::string graph_canonical_key(const SimpleGraph& g);
SimpleGraph canonical_graph(const SimpleGraph& g);
bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// graph6: printable encoding of simple graphs (63-offset bytes packing the
// upper adjacency triangle in colex column order).  Single-byte sizes only
// (vertex_count <= 62).  parse throws MalformedGraph6 naming the position
// of the first offending byte; write emits the graph as labeled.
SimpleGraph parse_graph6(const std::string& text);
std::string write_graph6(const SimpleGraph& g);

// Census of graph curves per genus: every generated graph with its basis
// count and matroid class, plus per-genus aggregation (distinct matroids,
// basis-count distribution, and which graphs share a matroid).
struct CensusRow {
  int genus = 0;
  std::string graph6;        // canonical labeling
  long basis_count = 0;
  std::string matroid_key;   // Matroid::canonical_key of the slice matroid
};

struct CensusGenusSummary {
  int genus = 0;
  int graph_count = 0;
  int matroid_count = 0;
  // basis count -> number of distinct matroid classes with that count
  std::map<long, int> matroids_per_basis_count;
  // matroid key -> canonical graph6 strings realizing it (fiber of the
  // graph -> matroid map), each fiber sorted
  std::map<std::string, std::vector<std::string>> fibering;
};

struct CensusTable {
  std::vector<CensusRow> rows;
  std::vector<CensusGenusSummary> genera;
};

// Genus range 4..7 (vertex counts 6..12).  Throws BadInput on a bad range;
// matroid failures propagate from matroid_of_graph.
CensusTable census(int g_min, int g_max, std::uint64_t seed);

}  // namespace sd
