// Valuated matroids in min-plus arithmetic: Dressian membership via the
// three-term relations, self-duality witnesses and the fixed subspace of the
// tropical Hodge star, initial matroids of hypersimplex subdivisions, ray
// vectors of the six-element tropical Grassmannian, the pair-to-triple tree
// embedding, tropicalization of Puiseux-series configurations, and the naive
// tropical completion of seven points to eight.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfdual/errors.hpp"
#include "selfdual/matroid.hpp"
#include "selfdual/puiseux.hpp"
#include "selfdual/rational.hpp"
#include "selfdual/subsets.hpp"

namespace sd {

// A min-plus value: a rational number or +infinity.  Infinity is a distinct
// state, never a sentinel magnitude; x + inf = inf and min(x, inf) = x.
class TropValue {
 public:
  TropValue() = default;  // +infinity
  explicit TropValue(Rat v) : v_(std::move(v)) {}
  static TropValue infinity() { return TropValue(); }

  bool finite() const { return v_.has_value(); }
  // Throws BadInput when infinite.
  const Rat& value() const;

  // Min-plus multiplication (classical addition).
  TropValue operator+(const TropValue& o) const;
  bool operator==(const TropValue& o) const = default;
  // Total order with +infinity as the unique maximum.
  bool operator<(const TropValue& o) const;

  std::string str() const;  // "p/q" or "inf"

 private:
  std::optional<Rat> v_;
};

TropValue trop_min(const TropValue& a, const TropValue& b);

// A tropical Plucker vector: one value for every rank-subset of {1..ground}.
// Self-duality operations additionally require ground = 2 * rank.
struct TropicalPlucker {
  int rank = 0;
  int ground = 0;
  std::map<Subset, TropValue> values;

  // Throws BadInput when I is not a key.
  const TropValue& at(const Subset& I) const;
  bool all_finite() const;

  static TropicalPlucker zeros(int rank, int ground);
  bool operator==(const TropicalPlucker& o) const = default;
};

// One three-term relation: the pairings of {i,j,k,l} over the common core S
// give the sums q_{S+ij}+q_{S+kl}, q_{S+ik}+q_{S+jl}, q_{S+il}+q_{S+jk}.
struct ThreeTermRelation {
  Subset core;               // S, an (rank-2)-subset
  std::array<int, 4> quad;   // i < j < k < l, disjoint from S
  std::array<TropValue, 3> sums;
  std::string str() const;
};

struct DressianVerdict {
  bool member = false;
  // First violated relation in scan order (core lex, then quad lex).
  std::optional<ThreeTermRelation> violation;
};

// A vector lies in the Dressian when every three-term relation attains its
// minimum at least twice.  +infinity participates; a relation whose three
// sums are all infinite passes.
DressianVerdict dressian_member(const TropicalPlucker& q);

// All violated relations in scan order, capped at max_count.
std::vector<ThreeTermRelation> dressian_violations(const TropicalPlucker& q,
                                                   std::size_t max_count = SIZE_MAX);

struct TropSelfDualWitness {
  std::vector<Rat> mu;  // one entry per ground element
};

// Solves q_I + sum_{i in I} mu_i = q_{I^c} over the finite support.  Returns
// the witness, or nullopt when the support is not complement-closed or the
// system is inconsistent.  When the support's incidence vectors span, the
// witness is unique; otherwise free coordinates are pinned to zero.
// Throws GroundSizeNotTwiceRank.
std::optional<TropSelfDualWitness> selfdual_witness(const TropicalPlucker& q);

// Membership in the span of the lineality vectors (sum_{i in I} mu_i)_I and
// the complement-pair indicators e_I + e_{I^c}, by exact linear solve.
// Any infinite entry makes the answer false.  Throws GroundSizeNotTwiceRank.
bool in_Lsd(const TropicalPlucker& q);

// Dimension of that span inside R^(C(2n,n)), computed as a matrix rank.
int lsd_dimension(int n);

// q*_I = q_{I^c}, no signs.  Output rank is ground - rank.
TropicalPlucker trop_hodge_star(const TropicalPlucker& q);

// Bases = argmin over the finite support of q_I - sum_{i in I} w_i, i.e. the
// cell of the regular hypersimplex subdivision selected by w.  The basis set
// is validated; a failed exchange axiom becomes NotAMatroid (the input was
// not in the Dressian).  Throws BadInput on a w-length mismatch or an
// all-infinite q.
Matroid initial_matroid(const TropicalPlucker& q, const std::vector<Rat>& w);

// The pair-to-triple embedding r_{ijk} = q_ij + q_ik + q_jk of the space of
// six-leaf trees.  Input must be rank 2 on {1..6} and satisfy the four-point
// condition (all three-term relations); otherwise NotATreePoint.
TropicalPlucker pachter_speyer(const TropicalPlucker& q2);

// Ray vectors of the rank-3 tropical Grassmannian on six elements, and the
// complement-pair rays of its self-dual slice.
//   E:   e_{i1 i2 i3}
//   F:   e_{i1i2i3} + e_{i1i2i4} + e_{i1i3i4} + e_{i2i3i4}
//   G:   F(i1i2i3i4) + e_{i3i4i5} + e_{i3i4i6}   (order-sensitive)
//   Esd: e_I + e_{I^c}
// Indices must be distinct elements of {1..6}, count 3/4/6/3 respectively.
// Throws BadIndices.
enum class RayKind { E, F, G, Esd };
TropicalPlucker ray_vector(RayKind kind, const std::vector<int>& indices);

// Valuations of all maximal minors of a matrix over Puiseux series;
// an identically zero minor becomes +infinity.  Throws BadInput on a ragged
// or empty matrix, RankDeficient when every minor vanishes.
TropicalPlucker tropicalize_config(const std::vector<std::vector<Puiseux>>& m);

// The 0/1 height vector of a self-dual matroid: 0 on bases, 1 on nonbases.
// Throws NotSelfDual / GroundSizeNotTwiceRank.
TropicalPlucker matroid_height(const Matroid& m);

// The two monomial valuations of each seven-point completion binomial,
// evaluated at q (rank 4 on {1..7}), in definition order (plus, minus).
// The naive tropicalization of the binomial is the min of the pair; distinct
// classical cancellation can make the true valuation larger.
std::array<std::array<TropValue, 2>, 7> completion_binomial_valuations(
    const TropicalPlucker& q7);

// Naive tropical completion of seven points to eight: r agrees with q away
// from element 8, and r_{I^c} = q_I - sum_{i in I} (mu_i - max_j mu_j) for
// quadruples I of {1..7}, where mu_i is the naive binomial valuation.
// Normalizing the largest correction weight to zero pins the scale of the
// eighth element; the output is NOT guaranteed to lie in the Dressian.
// Throws BadInput unless q7 is finite, rank 4, on {1..7}.
TropicalPlucker naive_trop_gamma(const TropicalPlucker& q7);

// JSON round-trip: {"n": 3, "values": {"123": "1", ..., "456": "inf"}} with
// subset keys as concatenated digits (ground <= 9) and values as rational
// strings or "inf".  "n" abbreviates rank n on ground 2n; vectors of other
// shapes carry explicit "rank" and "ground" fields instead.
std::string tropical_to_json(const TropicalPlucker& q);
TropicalPlucker tropical_from_json(const std::string& text);

}  // namespace sd
