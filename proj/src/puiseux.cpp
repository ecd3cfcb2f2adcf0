#include "selfdual/puiseux.hpp"

#include <stdexcept>

namespace sd {

Puiseux::Puiseux(const Rat& constant) {
  if (!sd::is_zero(constant)) terms_[Rat(0)] = constant;
}

Puiseux Puiseux::term(const Rat& coeff, const Rat& exponent) {
  Puiseux p;
  if (!sd::is_zero(coeff)) p.terms_[exponent] = coeff;
  return p;
}

std::optional<Rat> Puiseux::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rat Puiseux::coeff(const Rat& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Puiseux::add_term(const Rat& e, const Rat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!sd::is_zero(c)) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (sd::is_zero(it->second)) terms_.erase(it);
  }
}

Puiseux Puiseux::operator+(const Puiseux& o) const {
  Puiseux r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Puiseux Puiseux::operator-(const Puiseux& o) const {
  Puiseux r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Puiseux Puiseux::operator-() const {
  Puiseux r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Puiseux Puiseux::operator*(const Puiseux& o) const {
  Puiseux r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Puiseux puiseux_det(const std::vector<std::vector<Puiseux>>& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det of non-square matrix");
  if (n == 0) return Puiseux(Rat(1));
  if (n > 20) throw std::invalid_argument("puiseux_det: matrix too large");
  // dp[S] = det of the submatrix with rows 0..popcount(S)-1 and columns S.
  std::vector<Puiseux> dp(size_t(1) << n), next;
  dp[0] = Puiseux(Rat(1));
  for (size_t k = 0; k < n; ++k) {
    next.assign(size_t(1) << n, Puiseux());
    for (uint32_t s = 0; s < (1u << n); ++s) {
      if (static_cast<size_t>(__builtin_popcount(s)) != k) continue;
      if (dp[s].is_zero()) continue;
      int pos = 0;  // column's position within the enlarged subset
      for (uint32_t c = 0; c < n; ++c) {
        if (s & (1u << c)) { ++pos; continue; }
        if (m[k][c].is_zero()) continue;
        // Laplace along row k: sign alternates with the column's rank in S|c.
        Puiseux contrib = dp[s] * m[k][c];
        if ((static_cast<int>(k) + pos) % 2 != 0) contrib = -contrib;
        next[s | (1u << c)] = next[s | (1u << c)] + contrib;
      }
    }
    dp.swap(next);
  }
  return dp[(size_t(1) << n) - 1];
}

}  // namespace sd
