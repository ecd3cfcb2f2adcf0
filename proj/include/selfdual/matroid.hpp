// Matroids on ground set {1..m}, represented by their bases.
//
// Bases are stored as an indicator bitset indexed by the lex rank of each
// n-subset (see subsets.hpp).  All public subset I/O uses ascending 1-based
// element tuples.  Designed for small ground sets (m <= 12): per-subset
// tables are addressed directly by bitmask.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfdual/errors.hpp"
#include "selfdual/subsets.hpp"

namespace sd {

class Matroid {
 public:
  // Validates the exchange axiom over all ordered basis pairs.
  // Throws EmptyBasisList, ExchangeAxiomViolation, BadInput.
  static Matroid from_bases(int ground_size, int rank,
                            const std::vector<Subset>& bases);

  // Complement convenience: bases are all n-subsets not listed.
  static Matroid from_nonbases(int ground_size, int rank,
                               const std::vector<Subset>& nonbases);

  // Trusted constructor for callers that guarantee validity (no axiom check).
  static Matroid from_basis_bitset_unchecked(int ground_size, int rank,
                                             std::vector<bool> indicator);

  int ground_size() const { return m_; }
  int rank() const { return n_; }

  bool is_basis(const Subset& s) const;
  bool is_basis_mask(std::uint32_t mask) const { return basis_by_mask_[mask]; }
  const std::vector<bool>& basis_indicator() const { return ind_; }
  const std::vector<std::uint32_t>& basis_masks() const { return masks_; }

  std::vector<Subset> bases_list() const;
  std::vector<Subset> nonbases_list() const;
  std::size_t basis_count() const { return masks_.size(); }

  // Dual matroid: bases are complements of bases.
  Matroid dual() const;

  // Equality of (m, n, basis set) with the dual.  Throws
  // GroundSizeNotTwiceRank when m != 2n.
  bool is_selfdual() const;

  // Rank of an arbitrary subset (elements 1-based).
  int rank_of(const Subset& a) const;
  int rank_of_mask(std::uint32_t mask) const;
  bool is_independent_mask(std::uint32_t mask) const;

  // Minimal dependent sets, ordered by (size, lex).
  std::vector<Subset> circuits() const;

  bool is_connected() const;
  // For self-dual matroids connectivity coincides with the stability
  // criterion rank(A) > |A|/2 for all proper nonempty A; is_stable checks
  // that inequality directly (requires m == 2n).
  bool is_stable() const;
  bool is_simple() const;

  // Canonical form under ground-set relabelings: the basis indicator of the
  // canonically relabeled matroid, computed by a refinement-guided search
  // that minimizes the colex nonbasis word.  Two matroids are isomorphic
  // iff their canonical forms (and m, n) agree.
  std::vector<bool> canonical_form() const;
  // Hex digest of canonical_form(), prefixed by "m,n:"; usable as a
  // dictionary key for isomorphism classes.
  std::string canonical_key() const;
  static bool is_isomorphic(const Matroid& a, const Matroid& b);

  // Serialization.  JSON object {"ground_size","rank","bases":[tuples]};
  // hex string encodes the lex basis indicator, 4 bits per nibble,
  // most-significant nibble first, index 0 at the top bit.
  std::string to_json() const;
  static Matroid from_json(const std::string& text);
  std::string to_hex() const;
  static Matroid from_hex(int ground_size, int rank, const std::string& hex);

  bool operator==(const Matroid& o) const {
    return m_ == o.m_ && n_ == o.n_ && ind_ == o.ind_;
  }

 private:
  Matroid(int m, int n, std::vector<bool> ind);
  void build_tables();

  int m_ = 0, n_ = 0;
  std::vector<bool> ind_;                 // indexed by lex rank of n-subsets
  std::vector<std::uint32_t> masks_;      // masks of bases, lex order
  std::vector<bool> basis_by_mask_;       // size 2^m
};

// Indicator bitset -> lowercase hex (shared with tropical certificates).
std::string bits_to_hex(const std::vector<bool>& bits);
std::vector<bool> hex_to_bits(const std::string& hex, std::size_t nbits);

}  // namespace sd
