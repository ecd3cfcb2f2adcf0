#include "selfdual/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "selfdual/errors.hpp"

namespace sd {

namespace {

enum : std::uint8_t { kUndecided = 0, kBasis = 1, kNonbasis = 2 };

struct PairSearch {
  int m = 0, n = 0;
  std::vector<std::uint32_t> mask_by_rank;   // lex rank -> bitmask
  std::vector<int> rank_by_mask;             // bitmask -> lex rank
  std::vector<std::pair<int, int>> pairs;    // (rank of I with 1 in I, rank of I^c)
  std::vector<std::uint8_t> status;          // per lex rank
  std::vector<std::uint32_t> basis_masks;    // decided bases, in decision order
  std::map<std::string, Matroid> found;

  explicit PairSearch(int rank) : n(rank), m(2 * rank) {
    std::vector<Subset> subs = subsets_lex(m, n);
    mask_by_rank.resize(subs.size());
    rank_by_mask.assign(std::size_t{1} << m, -1);
    for (std::size_t r = 0; r < subs.size(); ++r) {
      mask_by_rank[r] = mask_of(subs[r]);
      rank_by_mask[mask_by_rank[r]] = static_cast<int>(r);
    }
    std::uint32_t all = (std::uint32_t{1} << m) - 1;
    for (std::size_t r = 0; r < subs.size(); ++r)
      if (mask_by_rank[r] & 1u)  // the member containing element 1 leads
        pairs.push_back({static_cast<int>(r), rank_by_mask[all ^ mask_by_rank[r]]});
    status.assign(subs.size(), kUndecided);
  }

  // Exchange triple (A, B, a): some b in B \ A must keep A - a + b alive
  // (already a basis, or still undecided).
  bool triple_alive(std::uint32_t a_mask, std::uint32_t b_mask, int a_bit) const {
    std::uint32_t candidates = b_mask & ~a_mask;
    std::uint32_t base = a_mask & ~(std::uint32_t{1} << a_bit);
    while (candidates) {
      std::uint32_t b = candidates & (~candidates + 1);
      candidates ^= b;
      if (status[rank_by_mask[base | b]] != kNonbasis) return true;
    }
    return false;
  }

  bool pair_ok(std::uint32_t a_mask, std::uint32_t b_mask) const {
    std::uint32_t moved = a_mask & ~b_mask;
    while (moved) {
      std::uint32_t a = moved & (~moved + 1);
      moved ^= a;
      if (!triple_alive(a_mask, b_mask, __builtin_ctz(a))) return false;
    }
    return true;
  }

  // All triples gaining the new basis as an endpoint.
  bool basis_decision_ok(std::uint32_t s) const {
    for (std::uint32_t b : basis_masks) {
      if (b == s) continue;
      if (!pair_ok(s, b) || !pair_ok(b, s)) return false;
    }
    return true;
  }

  // All triples whose candidate just became the nonbasis N: those are
  // (A, B, a) with A a basis at exchange distance one from N.
  bool nonbasis_decision_ok(std::uint32_t nb) const {
    for (std::uint32_t a_mask : basis_masks) {
      std::uint32_t diff = a_mask ^ nb;
      if (__builtin_popcount(diff) != 2) continue;
      int a_bit = __builtin_ctz(a_mask & diff);
      std::uint32_t b = nb & diff;
      for (std::uint32_t b_mask : basis_masks) {
        // the triple (A, B, a) constrains only when b lands in B \ A and a
        // leaves A \ B
        if (b_mask == a_mask || !(b_mask & b) || ((b_mask >> a_bit) & 1u))
          continue;
        if (!triple_alive(a_mask, b_mask, a_bit)) return false;
      }
    }
    return true;
  }

  void leaf() {
    std::vector<bool> ind(status.size(), false);
    for (std::size_t r = 0; r < status.size(); ++r) ind[r] = status[r] == kBasis;
    Matroid cand = Matroid::from_basis_bitset_unchecked(m, n, std::move(ind));
    if (!cand.is_simple()) return;
    std::string key = cand.canonical_key();
    if (found.count(key)) return;
    found.emplace(key,
                  Matroid::from_basis_bitset_unchecked(m, n, cand.canonical_form()));
  }

  void decide(std::size_t p) {
    if (p == pairs.size()) {
      leaf();
      return;
    }
    auto [r1, r2] = pairs[p];
    // nonbasis branch first (self-dual matroids are nonbasis-sparse),
    // except the pinned root pair
    if (p != 0) {
      status[r1] = status[r2] = kNonbasis;
      if (nonbasis_decision_ok(mask_by_rank[r1]) &&
          nonbasis_decision_ok(mask_by_rank[r2]))
        decide(p + 1);
    }
    status[r1] = status[r2] = kBasis;
    basis_masks.push_back(mask_by_rank[r1]);
    bool ok = basis_decision_ok(mask_by_rank[r1]);
    if (ok) {
      basis_masks.push_back(mask_by_rank[r2]);
      ok = basis_decision_ok(mask_by_rank[r2]);
      if (ok) decide(p + 1);
      basis_masks.pop_back();
    }
    basis_masks.pop_back();
    status[r1] = status[r2] = kUndecided;
  }
};

}  // namespace

std::vector<Matroid> enumerate_selfdual(int n) {
  if (n < 1 || n > 4)
    throw BadInput("exhaustive search supports ranks 1 through 4");
  PairSearch search(n);
  search.decide(0);
  std::vector<Matroid> out;
  for (auto& [key, m] : search.found) out.push_back(std::move(m));
  std::stable_sort(out.begin(), out.end(), [](const Matroid& a, const Matroid& b) {
    auto na = a.basis_indicator().size() - a.basis_count();
    auto nb = b.basis_indicator().size() - b.basis_count();
    return na < nb;
  });
  return out;
}

std::optional<Matroid> close_under_complements(const Matroid& m) {
  int n = m.rank();
  if (m.ground_size() != 2 * n - 1)
    throw BadInput("complement closure needs a rank-n matroid on 2n-1 elements");
  int m2 = 2 * n;
  std::vector<Subset> family;
  for (const Subset& b : m.bases_list()) {
    family.push_back(b);
    family.push_back(complement(b, m2));
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  try {
    return Matroid::from_bases(m2, n, family);
  } catch (const ExchangeAxiomViolation&) {
    return std::nullopt;
  }
}

Configuration rank5_realization_without_witness() {
  const Rat a = rat_parse("-4516/459"), b = rat_parse("1139/144"),
            c = rat_parse("-40/3"), d = rat_parse("17/2"),
            e = rat_parse("27/2"), f = rat_parse("5009/34"), g(180);
  const Rat o(1), z(0);
  const Rat rows[5][10] = {
      {o, z, z, z, z, o, o, o, z, o},
      {z, o, z, z, z, o, a, b, o, o},
      {z, z, o, z, z, o, c, d, o, z},
      {z, z, z, o, z, o, o, b, e, f},
      {z, z, z, z, o, o, z, d, e, g}};
  Configuration cfg;
  cfg.n = 5;
  cfg.points = RatMatrix(5, 10);
  for (int r = 0; r < 5; ++r)
    for (int j = 0; j < 10; ++j) cfg.points.at(r, j) = rows[r][j];
  return cfg;
}

}  // namespace sd
