// Point configurations in projective (n-1)-space given as n x 2n rational
// matrices, their Plucker vectors, and the machinery of self-duality:
// the diagonal-matrix certificate X diag(lambda) X^T = 0, the Hodge star,
// torus-weight recovery, a canonical affine normal form, and exact sampling
// of self-dual configurations through the Cayley transform.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfdual/errors.hpp"
#include "selfdual/matrix.hpp"
#include "selfdual/matroid.hpp"

namespace sd {

struct Configuration {
  int n = 0;            // points live in P^{n-1}
  RatMatrix points;     // n rows, 2n columns
  bool operator==(const Configuration&) const = default;
};

// All C(2n,n) maximal-minor coordinates, keyed by ascending column tuples.
struct PluckerVector {
  int n = 0;
  std::map<Subset, Rat> coords;

  const Rat& at(const Subset& I) const;
  bool operator==(const PluckerVector&) const = default;
};

struct SelfDualityWitness {
  std::vector<Rat> lambda;  // 2n nonzero entries, first scaled to 1
};

// Bases = column subsets with nonzero maximal minor.
// Throws RankDeficient when rank(X) < n.
Matroid matroid_of(const Configuration& X);

// Maximal minors as a Plucker vector. Throws RankDeficient.
PluckerVector plucker_of(const Configuration& X);

// Searches the kernel of the C(n+1,2) x 2n matrix of quadratic monomial
// evaluations Q[(i,j),k] = x_ik * x_jk for a nowhere-zero vector.  Returns
// the witness (normalized to lambda_1 = 1) or nullopt when none exists.
// The search over kernel combinations uses weights (1, t, t^2, ...) for
// t = 1, 2, ... and is deterministic. Throws RankDeficient.
std::optional<SelfDualityWitness> selfdual_certificate(const Configuration& X);

// p*_{I^c} = sign(I, I^c) * p_I; applying it twice gives (-1)^n * p.
PluckerVector hodge_star(const PluckerVector& p);

// Finds lambda with p*_I = (prod_{i in I} lambda_i) * p_I for every I in the
// support, or nullopt. Ratios lambda_j/lambda_i propagate along basis
// exchanges; the global scale is pinned by one basis equation, which needs
// an exact rational n-th root. Throws DisconnectedSupport when the exchange
// graph does not reach every element.
std::optional<std::vector<Rat>> lambda_from_plucker(const PluckerVector& p);

// Canonical affine chart: identity in columns 1..n, all-ones column n+1,
// all-ones first row in columns n+2..2n.  Two inputs in one projective
// x torus orbit normalize identically. Throws NormalFormUnavailable.
Configuration normalize(const Configuration& X);

// X = (Id_n | R) with R a seeded rational rotation matrix from the Cayley
// transform R = (I - S)(I + S)^{-1}, resampled until every maximal minor is
// nonzero.  Certified by lambda = (1,...,1,-1,...,-1).
// Throws SamplerExhausted after retry_bound failed attempts.
Configuration sample_selfdual(int n, std::uint64_t seed, int retry_bound = 64);

// The quartic p_123 p_145 p_356 p_246 - p_124 p_135 p_456 p_236 whose
// vanishing characterizes six points on a conic. Throws WrongDimensions
// unless n = 3.
Rat conic_quartic(const PluckerVector& p);

// Rational point on the threefold of self-dual realizations of the
// non-Vamos matroid: solves the cubic constraint for d and builds the
// four-concurrent-lines matrix. Throws DegenerateParameters.
Configuration nonvamos_sample(const Rat& a, const Rat& b, const Rat& c);

// The four independent quartic binomials cutting out the self-dual locus
// inside the non-Vamos realization space, evaluated at p (n = 4).
// Throws WrongDimensions.
std::array<Rat, 4> nonvamos_quartics(const PluckerVector& p);

// JSON round-trip: {"n": n, "columns": [[rational strings] x 2n]}.
std::string config_to_json(const Configuration& X);
Configuration config_from_json(const std::string& text);

}  // namespace sd
