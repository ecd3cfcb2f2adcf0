#include "selfdual/subsets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sd {

long long binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

const std::vector<Subset>& subsets_lex(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Subset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Subset> out;
  Subset cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  if (n == 0) {
    out.push_back({});
  } else if (n <= m) {
    while (true) {
      out.push_back(cur);
      int i = n - 1;
      while (i >= 0 && cur[i] == m - (n - 1 - i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

int lex_rank(const Subset& s, int m) {
  // Count subsets preceding s: standard combinatorial ranking.
  int n = static_cast<int>(s.size());
  long long rank = 0;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) rank += binom(m - v, n - 1 - i);
    prev = s[i];
  }
  return static_cast<int>(rank);
}

Subset complement(const Subset& s, int m) {
  Subset out;
  out.reserve(m - s.size());
  size_t j = 0;
  for (int v = 1; v <= m; ++v) {
    if (j < s.size() && s[j] == v) {
      ++j;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

int sign_concat(const Subset& a, const Subset& b) {
  // Inversion parity of (a_1..a_k, b_1..b_l). Each half is ascending, so
  // only cross pairs can invert.
  long long inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

uint32_t mask_of(const Subset& s) {
  uint32_t m = 0;
  for (int v : s) m |= (1u << (v - 1));
  return m;
}

Subset subset_of(uint32_t mask) {
  Subset s;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1u) s.push_back(v);
  return s;
}

std::string subset_str(const Subset& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace sd
