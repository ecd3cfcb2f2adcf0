// Index-set combinatorics shared by every module: lex-ordered n-subsets of
// [m] (1-based), their ranks, complements, and permutation signs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sd {

using Subset = std::vector<int>;  // ascending, 1-based

// Binomial coefficients small enough for m <= 16.
long long binom(int m, int k);

// All n-subsets of {1..m} in lexicographic order of the ascending tuples.
const std::vector<Subset>& subsets_lex(int m, int n);

// Rank of an ascending subset within subsets_lex(m, n).
int lex_rank(const Subset& s, int m);

Subset complement(const Subset& s, int m);

// Sign of the permutation obtained by concatenating a and b (each ascending),
// relative to the fully sorted sequence. Zero-free input assumed disjoint.
int sign_concat(const Subset& a, const Subset& b);

// Bitmask helpers (element i occupies bit i-1).
uint32_t mask_of(const Subset& s);
Subset subset_of(uint32_t mask);

// "1,2,3" (comma-separated, the JSON key convention for subset-indexed maps).
std::string subset_str(const Subset& s);

}  // namespace sd
