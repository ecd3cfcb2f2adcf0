// Exhaustive census of small self-dual matroids and the complement-closure
// construction that extends a matroid on 2n-1 elements to a self-dual
// candidate on 2n.
#pragma once

#include <optional>
#include <vector>

#include "selfdual/config.hpp"
#include "selfdual/matroid.hpp"

namespace sd {

// All simple matroids of rank n on {1..2n} whose bases are closed under
// complementation, up to isomorphism, as canonically relabeled
// representatives sorted by (nonbasis count, canonical key).
//
// Search: complement pairs {I, I complement} are decided jointly (both
// bases or both nonbases), the pair {1..n}/{n+1..2n} is pinned as a basis
// pair, the nonbasis branch is explored first, and a branch dies as soon
// as some exchange triple (A, B, a) runs out of undecided candidates.
// Exhaustive for n <= 4; throws BadInput outside 1 <= n <= 4.
std::vector<Matroid> enumerate_selfdual(int n);

// Bases of m (rank n on 2n-1 elements) together with their complements in
// {1..2n}, as a candidate basis family on 2n elements.  Returns the matroid
// when the family satisfies the exchange axiom, absent otherwise.  The
// result, when present, is self-dual by construction.
std::optional<Matroid> close_under_complements(const Matroid& m);

// Stored ten-point rank-5 configuration whose matroid is self-dual with 18
// nonbases although the configuration itself admits no self-duality
// witness: matroid self-duality does not force a witness at every (or any)
// realization.
Configuration rank5_realization_without_witness();

}  // namespace sd
