#include "selfdual/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include <json.hpp>

namespace sd {

namespace {

int popcount(std::uint32_t x) { return std::popcount(x); }

std::string pretty(const Subset& s) { return "{" + subset_str(s) + "}"; }

}  // namespace

Matroid::Matroid(int m, int n, std::vector<bool> ind)
    : m_(m), n_(n), ind_(std::move(ind)) {
  build_tables();
}

void Matroid::build_tables() {
  const auto& subs = subsets_lex(m_, n_);
  masks_.clear();
  basis_by_mask_.assign(std::size_t{1} << m_, false);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (ind_[i]) {
      std::uint32_t mk = mask_of(subs[i]);
      masks_.push_back(mk);
      basis_by_mask_[mk] = true;
    }
  }
}

Matroid Matroid::from_basis_bitset_unchecked(int m, int n, std::vector<bool> ind) {
  if (m < 0 || m > 16 || n < 0 || n > m)
    throw BadInput("ground_size/rank out of range: m=" + std::to_string(m) +
                   " n=" + std::to_string(n));
  if (ind.size() != static_cast<std::size_t>(binom(m, n)))
    throw BadInput("basis indicator has wrong length");
  return Matroid(m, n, std::move(ind));
}

Matroid Matroid::from_bases(int m, int n, const std::vector<Subset>& bases) {
  if (m < 0 || m > 16 || n < 0 || n > m)
    throw BadInput("ground_size/rank out of range: m=" + std::to_string(m) +
                   " n=" + std::to_string(n));
  if (bases.empty()) throw EmptyBasisList("no bases given");
  std::vector<bool> ind(binom(m, n), false);
  for (const auto& b : bases) {
    Subset s = b;
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != n)
      throw BadInput("basis " + pretty(b) + " does not have size " + std::to_string(n));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > m || (i > 0 && s[i] == s[i - 1]))
        throw BadInput("basis " + pretty(b) + " is not a subset of {1.." +
                       std::to_string(m) + "}");
    }
    ind[lex_rank(s, m)] = true;
  }
  Matroid M(m, n, std::move(ind));

  // Exchange axiom, all ordered pairs: for a in A\B there must be b in B\A
  // with A-a+b a basis.
  for (std::uint32_t am : M.masks_) {
    for (std::uint32_t bm : M.masks_) {
      std::uint32_t aonly = am & ~bm, bonly = bm & ~am;
      for (std::uint32_t at = aonly; at;) {
        std::uint32_t abit = at & (~at + 1);
        at ^= abit;
        bool ok = false;
        for (std::uint32_t bt = bonly; bt;) {
          std::uint32_t bbit = bt & (~bt + 1);
          bt ^= bbit;
          if (M.basis_by_mask_[(am ^ abit) | bbit]) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          throw ExchangeAxiomViolation(
              "A=" + pretty(subset_of(am)) + " B=" + pretty(subset_of(bm)) +
              " a=" + std::to_string(subset_of(abit)[0]) +
              " admits no exchange element");
        }
      }
    }
  }
  return M;
}

Matroid Matroid::from_nonbases(int m, int n, const std::vector<Subset>& nonbases) {
  std::vector<bool> nb(binom(m, n), false);
  for (const auto& s0 : nonbases) {
    Subset s = s0;
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != n || s.front() < 1 || s.back() > m)
      throw BadInput("nonbasis " + pretty(s0) + " is not an n-subset of the ground set");
    nb[lex_rank(s, m)] = true;
  }
  std::vector<Subset> bases;
  const auto& subs = subsets_lex(m, n);
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (!nb[i]) bases.push_back(subs[i]);
  if (bases.empty()) throw EmptyBasisList("every n-subset was listed as a nonbasis");
  return from_bases(m, n, bases);
}

bool Matroid::is_basis(const Subset& s) const {
  if (static_cast<int>(s.size()) != n_) return false;
  return basis_by_mask_[mask_of(s)];
}

std::vector<Subset> Matroid::bases_list() const {
  std::vector<Subset> out;
  const auto& subs = subsets_lex(m_, n_);
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (ind_[i]) out.push_back(subs[i]);
  return out;
}

std::vector<Subset> Matroid::nonbases_list() const {
  std::vector<Subset> out;
  const auto& subs = subsets_lex(m_, n_);
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (!ind_[i]) out.push_back(subs[i]);
  return out;
}

Matroid Matroid::dual() const {
  const auto& subs = subsets_lex(m_, m_ - n_);
  std::vector<bool> ind(subs.size(), false);
  for (std::size_t i = 0; i < subs.size(); ++i)
    ind[i] = basis_by_mask_[mask_of(complement(subs[i], m_))];
  return Matroid(m_, m_ - n_, std::move(ind));
}

bool Matroid::is_selfdual() const {
  if (m_ != 2 * n_)
    throw GroundSizeNotTwiceRank("m=" + std::to_string(m_) +
                                 " is not twice the rank n=" + std::to_string(n_));
  for (std::uint32_t mk : masks_) {
    std::uint32_t comp = (~mk) & ((1u << m_) - 1u);
    if (!basis_by_mask_[comp]) return false;
  }
  return true;
}

int Matroid::rank_of_mask(std::uint32_t mask) const {
  int best = 0;
  for (std::uint32_t bm : masks_) best = std::max(best, popcount(bm & mask));
  return best;
}

int Matroid::rank_of(const Subset& a) const { return rank_of_mask(mask_of(a)); }

bool Matroid::is_independent_mask(std::uint32_t mask) const {
  if (popcount(mask) > n_) return false;
  for (std::uint32_t bm : masks_)
    if ((bm & mask) == mask) return true;
  return false;
}

std::vector<Subset> Matroid::circuits() const {
  // Minimal dependent sets: dependent with every one-element deletion
  // independent. Ordered by (size, lex tuple).
  std::uint32_t full = (1u << m_) - 1u;
  std::vector<bool> indep(full + 1u, false);
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    indep[mask] = is_independent_mask(mask);
  std::vector<Subset> out;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (indep[mask]) continue;
    bool minimal = true;
    for (std::uint32_t t = mask; t;) {
      std::uint32_t bit = t & (~t + 1);
      t ^= bit;
      if (!indep[mask ^ bit]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(subset_of(mask));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool Matroid::is_connected() const {
  // Connected = no proper nonempty A with rank(A) + rank(complement) = n.
  std::uint32_t full = (1u << m_) - 1u;
  for (std::uint32_t a = 1; a < full; ++a) {
    if ((a & 1u) == 0) continue;  // fix element 1 in A; separations are symmetric
    if (rank_of_mask(a) + rank_of_mask(full ^ a) == n_) return false;
  }
  return true;
}

bool Matroid::is_stable() const {
  if (m_ != 2 * n_)
    throw GroundSizeNotTwiceRank("stability requires m = 2n, got m=" +
                                 std::to_string(m_) + " n=" + std::to_string(n_));
  // rank(A) > |A|/2 for every proper nonempty A.
  std::uint32_t full = (1u << m_) - 1u;
  for (std::uint32_t a = 1; a < full; ++a)
    if (2 * rank_of_mask(a) <= popcount(a)) return false;
  return true;
}

bool Matroid::is_simple() const {
  // No loops or parallel pairs: every singleton has rank 1 and every pair rank 2.
  if (n_ < 2) return false;
  for (int i = 0; i < m_; ++i)
    if (rank_of_mask(1u << i) != 1) return false;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (rank_of_mask((1u << i) | (1u << j)) != 2) return false;
  return true;
}

namespace {

// Iterated refinement of element colors from the nonbasis hypergraph.
// Color ids are dense and assigned in sorted signature order, so they are
// invariant under relabeling.
std::vector<int> refine_colors(int m, const std::vector<std::uint32_t>& nonbasis_masks) {
  std::vector<int> color(m, 0);
  {
    std::vector<int> d1(m, 0);
    for (std::uint32_t nb : nonbasis_masks)
      for (int e = 0; e < m; ++e)
        if (nb & (1u << e)) ++d1[e];
    std::map<int, int> ids;
    for (int v : d1) ids.emplace(v, 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    for (int e = 0; e < m; ++e) color[e] = ids[d1[e]];
  }
  int classes = 0;
  for (int e = 0; e < m; ++e) classes = std::max(classes, color[e] + 1);
  while (true) {
    // Signature of e: its color plus the sorted multiset of color rows of the
    // nonbases through e (row = sorted colors of the other members).
    std::vector<std::vector<std::vector<int>>> rows(m);
    for (std::uint32_t nb : nonbasis_masks) {
      std::vector<int> members;
      for (int e = 0; e < m; ++e)
        if (nb & (1u << e)) members.push_back(e);
      for (int e : members) {
        std::vector<int> row;
        for (int f : members)
          if (f != e) row.push_back(color[f]);
        std::sort(row.begin(), row.end());
        rows[e].push_back(std::move(row));
      }
    }
    std::vector<std::vector<int>> sig(m);
    for (int e = 0; e < m; ++e) {
      std::sort(rows[e].begin(), rows[e].end());
      sig[e].push_back(color[e]);
      for (auto& r : rows[e]) {
        sig[e].insert(sig[e].end(), r.begin(), r.end());
        sig[e].push_back(-1);
      }
    }
    std::map<std::vector<int>, int> ids;
    for (int e = 0; e < m; ++e) ids.emplace(sig[e], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::vector<int> ncolor(m);
    for (int e = 0; e < m; ++e) ncolor[e] = ids[sig[e]];
    if (next == classes) {
      return ncolor;
    }
    classes = next;
    color = std::move(ncolor);
  }
}

struct CanonSearch {
  int m, n;
  const std::vector<bool>* nonbasis_by_mask;
  std::vector<std::vector<std::vector<int>>> blockcache;  // per position: colex (n-1)-subsets of earlier positions
  std::vector<std::vector<int>> class_elems;               // per color id
  std::vector<int> slot_class;                             // per position
  std::vector<std::uint8_t> best;
  std::vector<int> best_perm;
  std::vector<int> assigned;
  std::vector<bool> used;

  void run() {
    assigned.clear();
    used.assign(m, false);
    dfs(0, 0);
  }

  void dfs(int pos, std::size_t bitlen) {
    if (pos == m) {
      best_perm = assigned;
      return;
    }
    const auto& blocks = blockcache[pos];
    std::vector<std::uint8_t> newbits(blocks.size());
    for (int e : class_elems[slot_class[pos]]) {
      if (used[e]) continue;
      int cmp = 0;  // -1 better than best, 0 tie, +1 worse
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::uint32_t mask = 1u << e;
        for (int p : blocks[i]) mask |= 1u << assigned[p];
        newbits[i] = (*nonbasis_by_mask)[mask] ? 1 : 0;
        if (cmp == 0 && newbits[i] != best[bitlen + i])
          cmp = newbits[i] < best[bitlen + i] ? -1 : 1;
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        std::copy(newbits.begin(), newbits.end(), best.begin() + bitlen);
        std::fill(best.begin() + bitlen + blocks.size(), best.end(), 1);
      }
      assigned.push_back(e);
      used[e] = true;
      dfs(pos + 1, bitlen + blocks.size());
      used[e] = false;
      assigned.pop_back();
    }
  }
};

}  // namespace

std::vector<bool> Matroid::canonical_form() const {
  if (m_ > 12) throw BadInput("canonical_form supports ground sets up to 12 elements");
  const auto& subs = subsets_lex(m_, n_);
  std::vector<std::uint32_t> nonbasis_masks;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (!ind_[i]) nonbasis_masks.push_back(mask_of(subs[i]));
  if (nonbasis_masks.empty() || subs.size() == 1) return ind_;  // uniform or trivial

  std::vector<bool> nonbasis_by_mask(std::size_t{1} << m_, false);
  for (std::uint32_t mk : nonbasis_masks) nonbasis_by_mask[mk] = true;

  std::vector<int> color = refine_colors(m_, nonbasis_masks);

  CanonSearch cs;
  cs.m = m_;
  cs.n = n_;
  cs.nonbasis_by_mask = &nonbasis_by_mask;
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  cs.class_elems.assign(classes, {});
  for (int e = 0; e < m_; ++e) cs.class_elems[color[e]].push_back(e);
  for (int c = 0; c < classes; ++c)
    for (std::size_t i = 0; i < cs.class_elems[c].size(); ++i)
      cs.slot_class.push_back(c);

  // blockcache[k]: (n-1)-subsets of positions {0..k-1}, ordered by mask value
  // (= colex); together with new position k they list, in colex order, the
  // n-subsets whose indicator bits become determined at depth k.
  cs.blockcache.assign(m_, {});
  std::size_t total = 0;
  for (int k = 0; k < m_; ++k) {
    if (k >= n_ - 1 && n_ >= 1) {
      std::vector<std::pair<std::uint32_t, std::vector<int>>> combos;
      // Enumerate (n-1)-subsets of {0..k-1}.
      std::vector<int> idx(n_ - 1);
      for (int i = 0; i < n_ - 1; ++i) idx[i] = i;
      bool any = (n_ - 1 <= k);
      while (any) {
        std::uint32_t mk = 0;
        for (int p : idx) mk |= 1u << p;
        combos.emplace_back(mk, idx);
        int i = n_ - 2;
        while (i >= 0 && idx[i] == k - (n_ - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n_ - 1; ++j) idx[j] = idx[j - 1] + 1;
      }
      std::sort(combos.begin(), combos.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& c : combos) cs.blockcache[k].push_back(std::move(c.second));
    }
    total += cs.blockcache[k].size();
  }
  cs.best.assign(total, 1);
  cs.run();

  // Relabel by the winning assignment: position i holds original element
  // best_perm[i]; produce the relabeled matroid's lex basis indicator.
  std::vector<int> inv(m_);
  for (int i = 0; i < m_; ++i) inv[cs.best_perm[i]] = i;
  std::vector<bool> out(subs.size(), false);
  for (std::uint32_t bm : masks_) {
    Subset img;
    for (int e = 0; e < m_; ++e)
      if (bm & (1u << e)) img.push_back(inv[e] + 1);
    std::sort(img.begin(), img.end());
    out[lex_rank(img, m_)] = true;
  }
  return out;
}

std::string Matroid::canonical_key() const {
  return std::to_string(m_) + "," + std::to_string(n_) + ":" +
         bits_to_hex(canonical_form());
}

bool Matroid::is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_) return false;
  if (a.masks_.size() != b.masks_.size()) return false;
  return a.canonical_form() == b.canonical_form();
}

std::string bits_to_hex(const std::vector<bool>& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int v = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      v <<= 1;
      if (i + j < bits.size() && bits[i + j]) v |= 1;
    }
    out += digits[v];
  }
  return out;
}

std::vector<bool> hex_to_bits(const std::string& hex, std::size_t nbits) {
  if (hex.size() != (nbits + 3) / 4)
    throw BadInput("hex bitmask has wrong length for " + std::to_string(nbits) + " bits");
  std::vector<bool> bits(nbits, false);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[i];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw BadInput("bad hex digit in bitmask");
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t k = 4 * i + j;
      bool bit = (v >> (3 - j)) & 1;
      if (k < nbits) {
        bits[k] = bit;
      } else if (bit) {
        throw BadInput("hex bitmask has nonzero padding bits");
      }
    }
  }
  return bits;
}

std::string Matroid::to_hex() const { return bits_to_hex(ind_); }

Matroid Matroid::from_hex(int m, int n, const std::string& hex) {
  auto bits = hex_to_bits(hex, static_cast<std::size_t>(binom(m, n)));
  const auto& subs = subsets_lex(m, n);
  std::vector<Subset> bases;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (bits[i]) bases.push_back(subs[i]);
  return from_bases(m, n, bases);
}

std::string Matroid::to_json() const {
  nlohmann::json j;
  j["ground_size"] = m_;
  j["rank"] = n_;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : bases_list()) arr.push_back(b);
  j["bases"] = arr;
  return j.dump();
}

Matroid Matroid::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("ground_size") || !j.contains("rank") ||
      !j.contains("bases"))
    throw BadInput("matroid JSON needs ground_size, rank, bases");
  int m = j["ground_size"].get<int>();
  int n = j["rank"].get<int>();
  std::vector<Subset> bases;
  for (const auto& b : j["bases"]) bases.push_back(b.get<Subset>());
  return from_bases(m, n, bases);
}

}  // namespace sd
