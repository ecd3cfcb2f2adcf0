#include "selfdual/tropical.hpp"

#include <algorithm>
#include <json.hpp>

#include "selfdual/matrix.hpp"
#include "selfdual/octad.hpp"

namespace sd {

const Rat& TropValue::value() const {
  if (!v_) throw BadInput("infinite tropical value has no rational part");
  return *v_;
}

TropValue TropValue::operator+(const TropValue& o) const {
  if (!v_ || !o.v_) return infinity();
  return TropValue(*v_ + *o.v_);
}

bool TropValue::operator<(const TropValue& o) const {
  if (!o.v_) return v_.has_value();
  if (!v_) return false;
  return *v_ < *o.v_;
}

std::string TropValue::str() const { return v_ ? rat_str(*v_) : "inf"; }

TropValue trop_min(const TropValue& a, const TropValue& b) { return a < b ? a : b; }

const TropValue& TropicalPlucker::at(const Subset& I) const {
  auto it = values.find(I);
  if (it == values.end())
    throw BadInput("no tropical coordinate {" + subset_str(I) + "}");
  return it->second;
}

bool TropicalPlucker::all_finite() const {
  for (const auto& [I, v] : values)
    if (!v.finite()) return false;
  return true;
}

TropicalPlucker TropicalPlucker::zeros(int rank, int ground) {
  if (rank < 0 || rank > ground)
    throw BadInput("rank must lie between 0 and the ground size");
  TropicalPlucker q;
  q.rank = rank;
  q.ground = ground;
  for (const auto& I : subsets_lex(ground, rank)) q.values[I] = TropValue(Rat(0));
  return q;
}

std::string ThreeTermRelation::str() const {
  std::string s = "core {" + subset_str(core) + "} quad {";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(quad[i]);
  s += "} sums ";
  for (int i = 0; i < 3; ++i) s += (i ? "," : "") + sums[i].str();
  return s;
}

namespace {

// The three pairings of {a,b,c,d} over the core: (ab|cd), (ac|bd), (ad|bc).
std::array<TropValue, 3> pairing_sums(const TropicalPlucker& q, const Subset& core,
                                      const std::array<int, 4>& quad) {
  auto coord = [&](int x, int y) {
    Subset I = core;
    I.push_back(x);
    I.push_back(y);
    std::sort(I.begin(), I.end());
    return q.at(I);
  };
  return {coord(quad[0], quad[1]) + coord(quad[2], quad[3]),
          coord(quad[0], quad[2]) + coord(quad[1], quad[3]),
          coord(quad[0], quad[3]) + coord(quad[1], quad[2])};
}

bool min_attained_twice(const std::array<TropValue, 3>& sums) {
  TropValue mn = trop_min(trop_min(sums[0], sums[1]), sums[2]);
  if (!mn.finite()) return true;  // all three infinite
  int hits = 0;
  for (const auto& s : sums) hits += (s == mn);
  return hits >= 2;
}

// One solution of A x = b with free variables pinned to zero, or nullopt
// when the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(a.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
      std::swap(b[p], b[r]);
    }
    Rat inv = Rat(1) / a.at(r, c);
    for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
    b[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a.at(i, c))) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Columns: the 2n incidence vectors of the ground elements, then one
// indicator per complement pair {I, I^c}.  Rows follow subsets_lex(2n, n).
RatMatrix lsd_generators(int n) {
  const int m = 2 * n;
  const auto& all = subsets_lex(m, n);
  const int rows = static_cast<int>(all.size());
  std::vector<int> pair_id(rows, -1);
  int pairs = 0;
  for (int i = 0; i < rows; ++i) {
    if (pair_id[i] >= 0) continue;
    int j = lex_rank(complement(all[i], m), m);
    pair_id[i] = pair_id[j] = pairs++;
  }
  RatMatrix g(rows, m + pairs);
  for (int i = 0; i < rows; ++i) {
    for (int v : all[i]) g.at(i, v - 1) = 1;
    g.at(i, m + pair_id[i]) = 1;
  }
  return g;
}

}  // namespace

std::vector<ThreeTermRelation> dressian_violations(const TropicalPlucker& q,
                                                   std::size_t max_count) {
  std::vector<ThreeTermRelation> out;
  if (q.rank < 2 || q.ground - q.rank < 2 || max_count == 0) return out;
  for (const auto& core : subsets_lex(q.ground, q.rank - 2)) {
    Subset rest = complement(core, q.ground);
    for (const auto& pick : subsets_lex(static_cast<int>(rest.size()), 4)) {
      std::array<int, 4> quad = {rest[pick[0] - 1], rest[pick[1] - 1],
                                 rest[pick[2] - 1], rest[pick[3] - 1]};
      auto sums = pairing_sums(q, core, quad);
      if (!min_attained_twice(sums)) {
        out.push_back({core, quad, sums});
        if (out.size() >= max_count) return out;
      }
    }
  }
  return out;
}

DressianVerdict dressian_member(const TropicalPlucker& q) {
  auto v = dressian_violations(q, 1);
  if (v.empty()) return {true, std::nullopt};
  return {false, v.front()};
}

std::optional<TropSelfDualWitness> selfdual_witness(const TropicalPlucker& q) {
  if (q.ground != 2 * q.rank)
    throw GroundSizeNotTwiceRank("self-duality needs ground size " +
                                 std::to_string(2 * q.rank));
  const int m = q.ground;
  std::vector<std::pair<Subset, Rat>> eqs;  // (I, q_{I^c} - q_I) over finite support
  for (const auto& [I, v] : q.values) {
    const TropValue& dual_v = q.at(complement(I, m));
    if (v.finite() != dual_v.finite()) return std::nullopt;  // support not closed
    if (v.finite()) eqs.emplace_back(I, dual_v.value() - v.value());
  }
  RatMatrix a(static_cast<int>(eqs.size()), m);
  std::vector<Rat> b(eqs.size());
  for (int r = 0; r < a.rows(); ++r) {
    for (int v : eqs[r].first) a.at(r, v - 1) = 1;
    b[r] = eqs[r].second;
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  return TropSelfDualWitness{std::move(*x)};
}

bool in_Lsd(const TropicalPlucker& q) {
  if (q.ground != 2 * q.rank)
    throw GroundSizeNotTwiceRank("self-dual subspace lives at ground size " +
                                 std::to_string(2 * q.rank));
  if (!q.all_finite()) return false;
  RatMatrix g = lsd_generators(q.rank);
  std::vector<Rat> b;
  b.reserve(g.rows());
  for (const auto& I : subsets_lex(q.ground, q.rank)) b.push_back(q.at(I).value());
  return solve_linear(std::move(g), std::move(b)).has_value();
}

int lsd_dimension(int n) {
  if (n < 1) throw BadInput("need at least one point pair");
  return lsd_generators(n).rank();
}

TropicalPlucker trop_hodge_star(const TropicalPlucker& q) {
  TropicalPlucker out;
  out.rank = q.ground - q.rank;
  out.ground = q.ground;
  for (const auto& [I, v] : q.values) out.values[complement(I, q.ground)] = v;
  return out;
}

Matroid initial_matroid(const TropicalPlucker& q, const std::vector<Rat>& w) {
  if (static_cast<int>(w.size()) != q.ground)
    throw BadInput("weight vector needs one entry per ground element");
  std::optional<Rat> best;
  std::vector<Subset> argmin;
  for (const auto& [I, v] : q.values) {
    if (!v.finite()) continue;
    Rat score = v.value();
    for (int i : I) score -= w[i - 1];
    if (!best || score < *best) {
      best = score;
      argmin.assign(1, I);
    } else if (score == *best) {
      argmin.push_back(I);
    }
  }
  if (!best) throw BadInput("every coordinate is infinite");
  try {
    return Matroid::from_bases(q.ground, q.rank, argmin);
  } catch (const ExchangeAxiomViolation& e) {
    throw NotAMatroid(std::string("argmin cell is not a matroid (input outside "
                                  "the Dressian): ") +
                      e.what());
  }
}

TropicalPlucker pachter_speyer(const TropicalPlucker& q2) {
  if (q2.rank != 2 || q2.ground != 6)
    throw BadInput("tree embedding expects rank 2 on {1..6}");
  auto bad = dressian_violations(q2, 1);
  if (!bad.empty())
    throw NotATreePoint("four-point condition fails: " + bad.front().str());
  TropicalPlucker out;
  out.rank = 3;
  out.ground = 6;
  for (const auto& I : subsets_lex(6, 3))
    out.values[I] = q2.at({I[0], I[1]}) + q2.at({I[0], I[2]}) + q2.at({I[1], I[2]});
  return out;
}

TropicalPlucker ray_vector(RayKind kind, const std::vector<int>& indices) {
  const std::size_t want = (kind == RayKind::F) ? 4 : (kind == RayKind::G) ? 6 : 3;
  if (indices.size() != want)
    throw BadIndices("expected " + std::to_string(want) + " indices, got " +
                     std::to_string(indices.size()));
  std::vector<bool> seen(7, false);
  for (int v : indices) {
    if (v < 1 || v > 6) throw BadIndices("index " + std::to_string(v) + " outside 1..6");
    if (seen[v]) throw BadIndices("repeated index " + std::to_string(v));
    seen[v] = true;
  }
  TropicalPlucker q = TropicalPlucker::zeros(3, 6);
  auto bump = [&](int a, int b, int c) {
    Subset I = {a, b, c};
    std::sort(I.begin(), I.end());
    q.values[I] = TropValue(q.values[I].value() + 1);
  };
  const std::vector<int>& x = indices;
  switch (kind) {
    case RayKind::E:
      bump(x[0], x[1], x[2]);
      break;
    case RayKind::F:
      bump(x[0], x[1], x[2]);
      bump(x[0], x[1], x[3]);
      bump(x[0], x[2], x[3]);
      bump(x[1], x[2], x[3]);
      break;
    case RayKind::G:
      bump(x[0], x[1], x[2]);
      bump(x[0], x[1], x[3]);
      bump(x[0], x[2], x[3]);
      bump(x[1], x[2], x[3]);
      bump(x[2], x[3], x[4]);
      bump(x[2], x[3], x[5]);
      break;
    case RayKind::Esd: {
      bump(x[0], x[1], x[2]);
      Subset I = {x[0], x[1], x[2]};
      std::sort(I.begin(), I.end());
      Subset c = complement(I, 6);
      bump(c[0], c[1], c[2]);
      break;
    }
  }
  return q;
}

TropicalPlucker tropicalize_config(const std::vector<std::vector<Puiseux>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) throw BadInput("empty matrix");
  const int cols = static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw BadInput("ragged matrix");
  if (cols < rows) throw BadInput("need at least as many columns as rows");
  TropicalPlucker q;
  q.rank = rows;
  q.ground = cols;
  bool any_finite = false;
  for (const auto& I : subsets_lex(cols, rows)) {
    std::vector<std::vector<Puiseux>> sub(rows, std::vector<Puiseux>(rows));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < rows; ++c) sub[r][c] = m[r][I[c] - 1];
    auto val = puiseux_det(sub).valuation();
    q.values[I] = val ? TropValue(*val) : TropValue::infinity();
    any_finite = any_finite || val.has_value();
  }
  if (!any_finite) throw RankDeficient("every maximal minor vanishes");
  return q;
}

TropicalPlucker matroid_height(const Matroid& m) {
  if (!m.is_selfdual())
    throw NotSelfDual("height vector is defined for self-dual matroids");
  TropicalPlucker q;
  q.rank = m.rank();
  q.ground = m.ground_size();
  for (const auto& I : subsets_lex(q.ground, q.rank))
    q.values[I] = TropValue(Rat(m.is_basis(I) ? 0 : 1));
  return q;
}

std::array<std::array<TropValue, 2>, 7> completion_binomial_valuations(
    const TropicalPlucker& q7) {
  if (q7.rank != 4 || q7.ground != 7)
    throw BadInput("completion binomials live on rank 4, ground {1..7}");
  std::array<std::array<TropValue, 2>, 7> out;
  const auto& supports = octad_x_supports();
  for (int i = 0; i < 7; ++i) {
    TropValue plus(Rat(0)), minus(Rat(0));
    for (const auto& I : supports[i].plus) plus = plus + q7.at(I);
    for (const auto& I : supports[i].minus) minus = minus + q7.at(I);
    out[i] = {plus, minus};
  }
  return out;
}

TropicalPlucker naive_trop_gamma(const TropicalPlucker& q7) {
  if (q7.rank != 4 || q7.ground != 7)
    throw BadInput("completion expects rank 4 on {1..7}");
  if (!q7.all_finite()) throw BadInput("completion expects finite coordinates");
  auto pairs = completion_binomial_valuations(q7);
  std::array<Rat, 7> mu;
  for (int i = 0; i < 7; ++i) mu[i] = trop_min(pairs[i][0], pairs[i][1]).value();
  Rat mu_max = *std::max_element(mu.begin(), mu.end());
  TropicalPlucker r;
  r.rank = 4;
  r.ground = 8;
  for (const auto& J : subsets_lex(8, 4)) {
    if (J.back() != 8) {
      r.values[J] = q7.at(J);
      continue;
    }
    Subset I = complement(J, 8);  // a quadruple inside {1..7}
    Rat v = q7.at(I).value();
    for (int i : I) v -= mu[i - 1] - mu_max;
    r.values[J] = TropValue(v);
  }
  return r;
}

std::string tropical_to_json(const TropicalPlucker& q) {
  if (q.ground > 9) throw BadInput("digit keys need ground <= 9");
  nlohmann::json j;
  if (q.ground == 2 * q.rank) {
    j["n"] = q.rank;
  } else {
    j["rank"] = q.rank;
    j["ground"] = q.ground;
  }
  nlohmann::json vals = nlohmann::json::object();
  for (const auto& I : subsets_lex(q.ground, q.rank)) {
    std::string key;
    for (int v : I) key += std::to_string(v);
    vals[key] = q.at(I).str();
  }
  j["values"] = vals;
  return j.dump();
}

TropicalPlucker tropical_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("malformed JSON: ") + e.what());
  }
  TropicalPlucker q;
  try {
    if (j.contains("n")) {
      q.rank = j.at("n").get<int>();
      q.ground = 2 * q.rank;
    } else {
      q.rank = j.at("rank").get<int>();
      q.ground = j.at("ground").get<int>();
    }
    if (q.rank < 0 || q.ground < q.rank || q.ground > 9)
      throw BadInput("rank/ground out of range (digit keys need ground <= 9)");
    const auto& vals = j.at("values");
    for (const auto& I : subsets_lex(q.ground, q.rank)) {
      std::string key;
      for (int v : I) key += std::to_string(v);
      std::string s = vals.at(key).get<std::string>();
      q.values[I] = (s == "inf") ? TropValue::infinity() : TropValue(rat_parse(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("bad tropical vector JSON: ") + e.what());
  }
  return q;
}

}  // namespace sd
