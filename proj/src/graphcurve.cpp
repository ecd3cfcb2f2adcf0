#include "selfdual/graphcurve.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "selfdual/prng.hpp"

namespace sd {

namespace {

// Directed endpoints of edge j: stored orientation, or low -> high.
std::pair<int, int> directed_edge(const SimpleGraph& g, int j) {
  auto [u, v] = g.edges[j];
  if (!g.oriented && u > v) std::swap(u, v);
  return {u, v};
}

// Per vertex: (edge index, other endpoint), in edge input order.
std::vector<std::vector<std::pair<int, int>>> incidence(const SimpleGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count);
  for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
    auto [u, v] = g.edges[j];
    inc[u].push_back({j, v});
    inc[v].push_back({j, u});
  }
  return inc;
}

bool connected_avoiding(const SimpleGraph& g,
                        const std::vector<std::vector<std::pair<int, int>>>& inc,
                        const std::vector<char>& removed) {
  int start = -1;
  for (int v = 0; v < g.vertex_count; ++v)
    if (!removed[v]) {
      start = v;
      break;
    }
  if (start < 0) return true;
  std::vector<char> seen(g.vertex_count, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int found = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [j, w] : inc[v])
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++found;
        q.push(w);
      }
  }
  int alive = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (!removed[v]) ++alive;
  return found == alive;
}

int edge_between(const std::map<std::pair<int, int>, int>& index, int a, int b) {
  auto it = index.find({std::min(a, b), std::max(a, b)});
  return it == index.end() ? -1 : it->second;
}

std::map<std::pair<int, int>, int> edge_index(const SimpleGraph& g) {
  std::map<std::pair<int, int>, int> index;
  for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
    auto [u, v] = g.edges[j];
    index[{std::min(u, v), std::max(u, v)}] = j;
  }
  return index;
}

bool columns_independent(const RatMatrix& m, int a, int b) {
  // Two columns are dependent iff all 2x2 minors vanish and neither check
  // below finds a certifying pair; handles zero columns as dependent.
  bool a_zero = true, b_zero = true;
  for (int r = 0; r < m.rows(); ++r) {
    if (m.at(r, a) != 0) a_zero = false;
    if (m.at(r, b) != 0) b_zero = false;
  }
  if (a_zero || b_zero) return false;
  for (int r = 0; r < m.rows(); ++r)
    for (int s = r + 1; s < m.rows(); ++s)
      if (m.at(r, a) * m.at(s, b) - m.at(s, a) * m.at(r, b) != 0) return true;
  return false;
}

}  // namespace

void validate_graph(const SimpleGraph& g) {
  if (g.vertex_count < 1) throw BadInput("graph needs at least one vertex");
  std::map<std::pair<int, int>, int> seen;
  for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
    auto [u, v] = g.edges[j];
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
      throw BadInput("edge endpoint out of range");
    if (u == v) throw BadInput("loop at vertex " + std::to_string(u));
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (seen.count(key))
      throw BadInput("parallel edge {" + std::to_string(key.first) + "," +
                     std::to_string(key.second) + "}");
    seen[key] = j;
  }
}

bool is_trivalent_3connected(const SimpleGraph& g) {
  validate_graph(g);
  if (g.vertex_count < 4) return false;
  auto inc = incidence(g);
  for (int v = 0; v < g.vertex_count; ++v)
    if (inc[v].size() != 3) return false;
  std::vector<char> removed(g.vertex_count, 0);
  if (!connected_avoiding(g, inc, removed)) return false;
  for (int a = 0; a < g.vertex_count; ++a) {
    removed.assign(g.vertex_count, 0);
    removed[a] = 1;
    if (!connected_avoiding(g, inc, removed)) return false;
  }
  for (int a = 0; a < g.vertex_count; ++a)
    for (int b = a + 1; b < g.vertex_count; ++b) {
      removed.assign(g.vertex_count, 0);
      removed[a] = removed[b] = 1;
      if (!connected_avoiding(g, inc, removed)) return false;
    }
  return true;
}

CycleMatrix cycle_matrix(const SimpleGraph& g) {
  validate_graph(g);
  auto inc = incidence(g);
  int nv = g.vertex_count, ne = static_cast<int>(g.edges.size());

  std::vector<int> parent(nv, -1), parent_edge(nv, -1), depth(nv, 0);
  std::vector<char> visited(nv, 0), in_tree(ne, 0);
  std::queue<int> q;
  visited[0] = 1;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [j, w] : inc[v])
      if (!visited[w]) {
        visited[w] = 1;
        parent[w] = v;
        parent_edge[w] = j;
        depth[w] = depth[v] + 1;
        in_tree[j] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != nv) {
    for (int v = 0; v < nv; ++v)
      if (!visited[v])
        throw NotConnected("vertex " + std::to_string(v) +
                           " unreachable from vertex 0");
  }

  int genus = ne - nv + 1;
  RatMatrix mat(genus, ne);
  auto index = edge_index(g);
  int row = 0;
  for (int j = 0; j < ne; ++j) {
    if (in_tree[j]) continue;
    auto [u, v] = directed_edge(g, j);
    mat.at(row, j) = 1;
    // Tree walk v -> u: climb both endpoints to their common ancestor.
    std::vector<int> up_v{v}, up_u{u};
    int x = v, y = u;
    while (depth[x] > depth[y]) up_v.push_back(x = parent[x]);
    while (depth[y] > depth[x]) up_u.push_back(y = parent[y]);
    while (x != y) {
      up_v.push_back(x = parent[x]);
      up_u.push_back(y = parent[y]);
    }
    std::vector<int> walk(up_v);
    for (auto it = up_u.rbegin() + 1; it != up_u.rend(); ++it) walk.push_back(*it);
    for (std::size_t t = 0; t + 1 < walk.size(); ++t) {
      int a = walk[t], b = walk[t + 1];
      int f = edge_between(index, a, b);
      auto [fu, fv] = directed_edge(g, f);
      mat.at(row, f) = (a == fu && b == fv) ? 1 : -1;
    }
    ++row;
  }
  return CycleMatrix{g, std::move(mat)};
}

CycleMatrix cycle_matrix_from_cycles(const SimpleGraph& g,
                                     const std::vector<std::vector<int>>& cycles) {
  validate_graph(g);
  auto inc = incidence(g);
  std::vector<char> removed(g.vertex_count, 0);
  if (!connected_avoiding(g, inc, removed))
    throw NotConnected("cycle matrix needs a connected graph");

  int ne = static_cast<int>(g.edges.size());
  int genus = ne - g.vertex_count + 1;
  if (static_cast<int>(cycles.size()) != genus)
    throw BadInput("expected " + std::to_string(genus) + " cycles, got " +
                   std::to_string(cycles.size()));

  auto index = edge_index(g);
  RatMatrix mat(genus, ne);
  for (int r = 0; r < genus; ++r) {
    const auto& walk = cycles[r];
    if (walk.size() < 3) throw BadInput("cycle shorter than 3 vertices");
    for (std::size_t t = 0; t < walk.size(); ++t) {
      int a = walk[t], b = walk[(t + 1) % walk.size()];
      if (a < 0 || a >= g.vertex_count)
        throw BadInput("cycle vertex out of range");
      int j = edge_between(index, a, b);
      if (j < 0)
        throw BadInput("no edge between " + std::to_string(a) + " and " +
                       std::to_string(b));
      if (mat.at(r, j) != 0)
        throw BadInput("cycle reuses edge {" + std::to_string(a) + "," +
                       std::to_string(b) + "}");
      auto [u, v] = directed_edge(g, j);
      mat.at(r, j) = (a == u && b == v) ? 1 : -1;
    }
  }
  if (mat.rank() != genus)
    throw BadInput("supplied cycles do not span the cycle space");
  return CycleMatrix{g, std::move(mat)};
}

Configuration graph_curve_slice(const CycleMatrix& c, const std::vector<Rat>& h,
                                int delete_coord) {
  const SimpleGraph& g = c.graph;
  int genus = c.genus();
  int ne = static_cast<int>(g.edges.size());
  if (c.mat.cols() != ne) throw BadInput("cycle matrix columns != edge count");
  if (static_cast<int>(h.size()) != genus)
    throw BadInput("hyperplane vector needs one entry per cycle-matrix row");
  bool h_zero = true;
  for (const Rat& x : h)
    if (x != 0) h_zero = false;
  if (h_zero) throw BadInput("hyperplane vector is zero");

  auto inc = incidence(g);
  for (int v = 0; v < g.vertex_count; ++v)
    if (inc[v].size() != 3)
      throw BadInput("graph must be trivalent; vertex " + std::to_string(v) +
                     " has degree " + std::to_string(inc[v].size()));

  // h . column j
  std::vector<Rat> hdot(ne, Rat(0));
  for (int j = 0; j < ne; ++j)
    for (int r = 0; r < genus; ++r) hdot[j] += h[r] * c.mat.at(r, j);

  RatMatrix pts(genus, g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    int cols[3] = {inc[v][0].first, inc[v][1].first, inc[v][2].first};
    int a = -1, b = -1;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
      if (columns_independent(c.mat, cols[i], cols[j])) {
        a = cols[i];
        b = cols[j];
        break;
      }
    if (a < 0)
      throw BadInput("incident columns of vertex " + std::to_string(v) +
                     " have rank < 2");
    bool zero = true;
    for (int r = 0; r < genus; ++r) {
      pts.at(r, v) = hdot[b] * c.mat.at(r, a) - hdot[a] * c.mat.at(r, b);
      if (pts.at(r, v) != 0) zero = false;
    }
    if (zero)
      throw DegenerateHyperplane("line of vertex " + std::to_string(v) +
                                 " lies inside the hyperplane");
  }

  int k = delete_coord;
  if (k == -1) {
    Rat best(-1);
    for (int r = 0; r < genus; ++r) {
      Rat mag = abs(h[r]);
      if (mag > best) {
        best = mag;
        k = r;
      }
    }
  }
  if (k < 0 || k >= genus) throw BadInput("delete coordinate out of range");
  if (h[k] == 0)
    throw DegenerateHyperplane("deleted coordinate " + std::to_string(k) +
                               " has zero hyperplane entry");

  Configuration cfg;
  cfg.n = genus - 1;
  cfg.points = RatMatrix(genus - 1, g.vertex_count);
  for (int r = 0, rr = 0; r < genus; ++r) {
    if (r == k) continue;
    for (int v = 0; v < g.vertex_count; ++v) cfg.points.at(rr, v) = pts.at(r, v);
    ++rr;
  }
  if (cfg.points.rank() != cfg.n)
    throw DegenerateHyperplane("sliced points do not span");
  return cfg;
}

Matroid matroid_of_graph(const SimpleGraph& g, std::uint64_t seed,
                         int retry_bound) {
  if (!is_trivalent_3connected(g))
    throw NotTrivalent3Connected("graph-curve matroids need a trivalent 3-connected graph");
  CycleMatrix c = cycle_matrix(g);
  SplitMix64 rng(seed);
  auto draw = [&]() {
    std::vector<Rat> h(c.genus());
    for (;;) {
      bool nonzero = false;
      for (auto& x : h) {
        x = Rat(rng.below(-1000000, 1000000));
        if (x != 0) nonzero = true;
      }
      if (nonzero) return h;
    }
  };
  for (int attempt = 0; attempt < retry_bound; ++attempt) {
    try {
      Matroid m1 = matroid_of(graph_curve_slice(c, draw()));
      Matroid m2 = matroid_of(graph_curve_slice(c, draw()));
      if (m1 == m2) return m1;
    } catch (const DomainError&) {
      // degenerate hyperplane pair; redraw
    }
  }
  throw GenericityNotCertified("no two independent hyperplane slices agreed within " +
                               std::to_string(retry_bound) + " attempts");
}

// ---------------------------------------------------------------------------
// Canonical form: the adjacency bit word of a relabeled graph, blocks
// b(0,p) .. b(p-1,p) appended per position p, maximized lexicographically
// over all permutations that respect the refinement classes.

namespace {

// Iterated neighborhood refinement; returns a label-independent color per
// vertex (colors densely numbered in sorted signature order).
std::vector<int> refine_vertex_colors(const SimpleGraph& g) {
  auto inc = incidence(g);
  int n = g.vertex_count;
  std::vector<int> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (auto [j, w] : inc[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> sorted(sig);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (next == color) break;
    color = next;
  }
  return color;
}

struct GraphCanon {
  int n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> slot_candidates;  // per position, ascending
  std::vector<char> best;
  std::vector<int> best_perm;
  bool have_best = false;
  std::vector<int> perm;
  std::vector<char> used;
  std::vector<char> cur;
  std::size_t total_bits = 0;

  void run() {
    perm.assign(n, -1);
    used.assign(n, 0);
    cur.clear();
    total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    dfs(0);
  }

  void dfs(int pos) {
    if (pos == n) {
      best = cur;
      best_perm = perm;
      have_best = true;
      return;
    }
    std::size_t offset = cur.size();
    for (int v : slot_candidates[pos]) {
      if (used[v]) continue;
      for (int i = 0; i < pos; ++i) cur.push_back(adj[perm[i]][v]);
      bool viable = true;
      if (have_best) {
        int cmp = 0;
        for (std::size_t t = offset; t < cur.size() && cmp == 0; ++t)
          cmp = static_cast<int>(cur[t]) - static_cast<int>(best[t]);
        if (cmp < 0) viable = false;
        if (cmp > 0) {
          // This prefix beats every word seen so far; lower-bound it with a
          // zero-padded suffix so sibling comparisons stay sound.
          best.assign(cur.begin(), cur.end());
          best.resize(total_bits, 0);
        }
      }
      if (viable) {
        used[v] = 1;
        perm[pos] = v;
        dfs(pos + 1);
        used[v] = 0;
      }
      cur.resize(offset);
    }
  }
};

GraphCanon canonical_search(const SimpleGraph& g) {
  validate_graph(g);
  GraphCanon cn;
  cn.n = g.vertex_count;
  cn.adj.assign(cn.n, std::vector<char>(cn.n, 0));
  for (auto [u, v] : g.edges) cn.adj[u][v] = cn.adj[v][u] = 1;

  std::vector<int> color = refine_vertex_colors(g);
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < cn.n; ++v) classes[color[v]].push_back(v);
  cn.slot_candidates.clear();
  for (const auto& [c, members] : classes)
    for (std::size_t i = 0; i < members.size(); ++i)
      cn.slot_candidates.push_back(members);

  cn.run();
  return cn;
}

}  // namespace

std::string graph_canonical_key(const SimpleGraph& g) {
  GraphCanon cn = canonical_search(g);
  std::vector<bool> bits(cn.best.begin(), cn.best.end());
  return std::to_string(g.vertex_count) + ":" + bits_to_hex(bits);
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
  GraphCanon cn = canonical_search(g);
  std::vector<int> pos(cn.n);
  for (int p = 0; p < cn.n; ++p) pos[cn.best_perm[p]] = p;
  SimpleGraph out;
  out.vertex_count = g.vertex_count;
  for (auto [u, v] : g.edges) {
    int a = pos[u], b = pos[v];
    out.edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size())
    return false;
  return graph_canonical_key(a) == graph_canonical_key(b);
}

// ---------------------------------------------------------------------------
// Cubic graph generation: close K4 under edge insertion (subdivide two
// distinct edges, join the two new degree-2 vertices), keeping the
// 3-connected results, deduplicated by canonical key at every size.

std::vector<SimpleGraph> generate_cubic_3connected(int vertex_count) {
  if (vertex_count < 4 || vertex_count > 12 || vertex_count % 2 != 0)
    throw BadInput("vertex count must be even and between 4 and 12");

  SimpleGraph k4;
  k4.vertex_count = 4;
  k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<SimpleGraph> level{k4};

  for (int size = 6; size <= vertex_count; size += 2) {
    std::map<std::string, SimpleGraph> next;
    for (const SimpleGraph& g : level) {
      int ne = static_cast<int>(g.edges.size());
      for (int i = 0; i < ne; ++i)
        for (int j = i + 1; j < ne; ++j) {
          SimpleGraph h;
          h.vertex_count = g.vertex_count + 2;
          int u = g.vertex_count, v = g.vertex_count + 1;
          for (int t = 0; t < ne; ++t)
            if (t != i && t != j) h.edges.push_back(g.edges[t]);
          h.edges.push_back({g.edges[i].first, u});
          h.edges.push_back({g.edges[i].second, u});
          h.edges.push_back({g.edges[j].first, v});
          h.edges.push_back({g.edges[j].second, v});
          h.edges.push_back({u, v});
          for (auto& e : h.edges)
            if (e.first > e.second) std::swap(e.first, e.second);
          std::sort(h.edges.begin(), h.edges.end());
          if (!is_trivalent_3connected(h)) continue;
          std::string key = graph_canonical_key(h);
          if (!next.count(key)) next.emplace(key, canonical_graph(h));
        }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

// ---------------------------------------------------------------------------
// graph6

SimpleGraph parse_graph6(const std::string& text) {
  if (text.empty()) throw MalformedGraph6("empty string (byte 0)");
  auto bad = [](std::size_t pos, const std::string& why) {
    throw MalformedGraph6(why + " (byte " + std::to_string(pos) + ")");
  };
  unsigned char c0 = static_cast<unsigned char>(text[0]);
  if (c0 == 126) bad(0, "multi-byte vertex counts unsupported");
  if (c0 < 63 || c0 > 125) bad(0, "vertex-count byte out of range");
  int n = c0 - 63;
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < 1 + nbytes) bad(text.size(), "truncated adjacency data");
  if (text.size() > 1 + nbytes) bad(1 + nbytes, "trailing data");

  std::vector<bool> bits;
  bits.reserve(nbytes * 6);
  for (std::size_t t = 1; t < text.size(); ++t) {
    unsigned char c = static_cast<unsigned char>(text[t]);
    if (c < 63 || c > 126) bad(t, "adjacency byte out of range");
    unsigned val = c - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((val >> b) & 1u);
  }
  for (std::size_t t = nbits; t < bits.size(); ++t)
    if (bits[t]) bad(1 + t / 6, "nonzero padding bits");

  SimpleGraph g;
  g.vertex_count = n;
  std::size_t t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (bits[t]) g.edges.push_back({i, j});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string write_graph6(const SimpleGraph& g) {
  validate_graph(g);
  if (g.vertex_count > 62)
    throw BadInput("graph6 writer supports at most 62 vertices");
  int n = g.vertex_count;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;

  std::vector<bool> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(adj[i][j]);
  while (bits.size() % 6 != 0) bits.push_back(false);

  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t t = 0; t < bits.size(); t += 6) {
    unsigned val = 0;
    for (int b = 0; b < 6; ++b) val = (val << 1) | (bits[t + b] ? 1u : 0u);
    out.push_back(static_cast<char>(63 + val));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Census

CensusTable census(int g_min, int g_max, std::uint64_t seed) {
  if (g_min < 4 || g_max > 7 || g_min > g_max)
    throw BadInput("census genus range must satisfy 4 <= g_min <= g_max <= 7");

  CensusTable table;
  for (int genus = g_min; genus <= g_max; ++genus) {
    std::vector<SimpleGraph> graphs = generate_cubic_3connected(2 * genus - 2);
    std::vector<CensusRow> rows;
    for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
      Matroid m = matroid_of_graph(graphs[idx],
                                   seed + 1000003ULL * idx + 1000033ULL * genus);
      CensusRow row;
      row.genus = genus;
      row.graph6 = write_graph6(graphs[idx]);
      row.basis_count = static_cast<long>(m.basis_count());
      row.matroid_key = m.canonical_key();
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
      return a.graph6 < b.graph6;
    });

    CensusGenusSummary s;
    s.genus = genus;
    s.graph_count = static_cast<int>(rows.size());
    std::map<std::string, long> key_bases;
    for (const CensusRow& r : rows) {
      s.fibering[r.matroid_key].push_back(r.graph6);
      key_bases[r.matroid_key] = r.basis_count;
    }
    s.matroid_count = static_cast<int>(s.fibering.size());
    for (const auto& [key, bases] : key_bases) ++s.matroids_per_basis_count[bases];
    table.genera.push_back(std::move(s));
    for (CensusRow& r : rows) table.rows.push_back(std::move(r));
  }
  return table;
}

}  // namespace sd
