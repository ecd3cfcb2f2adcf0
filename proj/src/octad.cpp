#include "selfdual/octad.hpp"

#include <algorithm>

namespace sd {

const std::array<OctadBinomialSupport, 7>& octad_x_supports() {
  static const std::array<OctadBinomialSupport, 7> table = {{
      {{{{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5, 7}, {1, 4, 6, 7}}},
       {{{1, 2, 3, 5}, {1, 2, 4, 6}, {1, 3, 4, 7}, {1, 5, 6, 7}}}},
      {{{{1, 2, 3, 5}, {1, 2, 4, 6}, {2, 3, 4, 7}, {2, 5, 6, 7}}},
       {{{1, 2, 3, 4}, {1, 2, 5, 6}, {2, 3, 5, 7}, {2, 4, 6, 7}}}},
      {{{{1, 2, 3, 4}, {1, 3, 5, 6}, {2, 3, 5, 7}, {3, 4, 6, 7}}},
       {{{1, 2, 3, 5}, {1, 3, 4, 6}, {2, 3, 4, 7}, {3, 5, 6, 7}}}},
      {{{{1, 2, 4, 5}, {1, 3, 4, 6}, {2, 3, 4, 7}, {4, 5, 6, 7}}},
       {{{1, 2, 3, 4}, {1, 4, 5, 6}, {2, 4, 5, 7}, {3, 4, 6, 7}}}},
      {{{{1, 2, 3, 5}, {1, 4, 5, 6}, {2, 4, 5, 7}, {3, 5, 6, 7}}},
       {{{1, 2, 4, 5}, {1, 3, 5, 6}, {2, 3, 5, 7}, {4, 5, 6, 7}}}},
      {{{{1, 2, 4, 6}, {1, 3, 5, 6}, {2, 3, 6, 7}, {4, 5, 6, 7}}},
       {{{1, 2, 3, 6}, {1, 4, 5, 6}, {2, 4, 6, 7}, {3, 5, 6, 7}}}},
      {{{{1, 2, 3, 7}, {1, 4, 5, 7}, {2, 4, 6, 7}, {3, 5, 6, 7}}},
       {{{1, 2, 4, 7}, {1, 3, 5, 7}, {2, 3, 6, 7}, {4, 5, 6, 7}}}},
  }};
  return table;
}

std::array<Rat, 7> octad_x(const Plucker47& p) {
  auto P = [&](const Subset& I) -> const Rat& {
    auto it = p.find(I);
    if (it == p.end())
      throw BadInput("missing Plucker coordinate {" + subset_str(I) + "}");
    return it->second;
  };
  std::array<Rat, 7> x;
  const auto& supports = octad_x_supports();
  for (int i = 0; i < 7; ++i) {
    const auto& s = supports[i];
    x[i] = P(s.plus[0]) * P(s.plus[1]) * P(s.plus[2]) * P(s.plus[3]) -
           P(s.minus[0]) * P(s.minus[1]) * P(s.minus[2]) * P(s.minus[3]);
  }
  return x;
}

RatMatrix reconstruct_matrix(const std::map<Subset, Rat>& p, int m, const Subset& I0) {
  const int n = static_cast<int>(I0.size());
  auto it0 = p.find(I0);
  if (it0 == p.end() || is_zero(it0->second))
    throw BadInput("reconstruction base {" + subset_str(I0) + "} has zero coordinate");
  const Rat& p0 = it0->second;

  RatMatrix X(n, m);
  std::vector<bool> in_base(m + 1, false);
  for (int v : I0) in_base[v] = true;
  for (int r = 0; r < n; ++r) X.at(r, I0[r] - 1) = 1;
  for (int j = 1; j <= m; ++j) {
    if (in_base[j]) continue;
    for (int r = 0; r < n; ++r) {
      // Column subset I0 with i_r replaced by j, re-sorted; the parity of the
      // move from slot r to j's sorted slot gives the sign.
      Subset I = I0;
      I[r] = j;
      std::sort(I.begin(), I.end());
      int pos = static_cast<int>(std::lower_bound(I.begin(), I.end(), j) - I.begin());
      auto it = p.find(I);
      Rat val = (it == p.end()) ? Rat(0) : it->second;
      X.at(r, j - 1) = (((pos - r) % 2) ? -val : val) / p0;
    }
  }

  // Membership verdict: the rebuilt matrix must reproduce p globally scaled
  // by 1/p_{I0} (its minor at I0 is 1).
  for (const auto& I : subsets_lex(m, n)) {
    auto it = p.find(I);
    Rat expect = (it == p.end()) ? Rat(0) : it->second / p0;
    if (X.minor_det(I) != expect)
      throw NotOnGrassmannian("minor {" + subset_str(I) +
                              "} of the reconstruction disagrees");
  }
  return X;
}

PluckerVector gamma(const RatMatrix& X7) {
  if (X7.rows() != 4 || X7.cols() != 7)
    throw BadInput("completion map expects a 4 x 7 matrix");
  Plucker47 p47 = X7.maximal_minors();
  for (const auto& [I, v] : p47)
    if (is_zero(v))
      throw DegenerateSevenPoints("maximal minor {" + subset_str(I) + "} vanishes");
  std::array<Rat, 7> x = octad_x(p47);
  for (int i = 0; i < 7; ++i)
    if (is_zero(x[i]))
      throw OnTwistedCubicOrConicProjection("x_" + std::to_string(i + 1) +
                                            " vanishes");
  PluckerVector out;
  out.n = 4;
  for (const auto& [I, v] : p47) {
    out.coords[I] = v;
    Subset Ic = complement(I, 8);  // contains 8
    Rat prod = 1;
    for (int i : I) prod *= x[i - 1];
    out.coords[Ic] = Rat(sign_concat(Ic, I)) * v / prod;
  }
  reconstruct_matrix(out.coords, 8, {1, 2, 3, 4});  // membership check
  return out;
}

}  // namespace sd
