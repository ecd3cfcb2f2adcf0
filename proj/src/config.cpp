#include "selfdual/config.hpp"

#include <algorithm>

#include <json.hpp>

#include "selfdual/prng.hpp"

namespace sd {

namespace {

void check_shape(const Configuration& X) {
  if (X.n < 1 || X.points.rows() != X.n || X.points.cols() != 2 * X.n)
    throw BadInput("configuration must be an n x 2n matrix with n >= 1");
}

// Exact rational n-th root, or nullopt when none exists over Q.
std::optional<Rat> rat_nth_root(const Rat& v, int n) {
  if (is_zero(v)) return Rat(0);
  if (sgn(v) < 0 && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(v.get_num());
  mpz_class den = v.get_den();
  mpz_class rnum, rden;
  bool exact_num = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), n) != 0;
  bool exact_den = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), n) != 0;
  if (!exact_num || !exact_den) return std::nullopt;
  Rat r(rnum, rden);
  r.canonicalize();
  if (sgn(v) < 0) r = -r;
  return r;
}

}  // namespace

const Rat& PluckerVector::at(const Subset& I) const {
  auto it = coords.find(I);
  if (it == coords.end())
    throw BadInput("no Plucker coordinate for {" + subset_str(I) + "}");
  return it->second;
}

Matroid matroid_of(const Configuration& X) {
  check_shape(X);
  if (X.points.rank() < X.n)
    throw RankDeficient("configuration matrix has rank below n");
  std::vector<Subset> bases;
  for (const auto& I : subsets_lex(2 * X.n, X.n))
    if (!is_zero(X.points.minor_det(I))) bases.push_back(I);
  return Matroid::from_bases(2 * X.n, X.n, bases);
}

PluckerVector plucker_of(const Configuration& X) {
  check_shape(X);
  if (X.points.rank() < X.n)
    throw RankDeficient("configuration matrix has rank below n");
  PluckerVector p;
  p.n = X.n;
  p.coords = X.points.maximal_minors();
  return p;
}

std::optional<SelfDualityWitness> selfdual_certificate(const Configuration& X) {
  check_shape(X);
  const int n = X.n, m = 2 * X.n;
  if (X.points.rank() < n)
    throw RankDeficient("configuration matrix has rank below n");

  // Quadratic monomial evaluations: one row per unordered pair (i <= j).
  RatMatrix Q(n * (n + 1) / 2, m);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++row)
      for (int k = 0; k < m; ++k)
        Q.at(row, k) = X.points.at(i, k) * X.points.at(j, k);

  auto kernel = Q.kernel_basis();
  if (kernel.empty()) return std::nullopt;
  for (int k = 0; k < m; ++k) {
    bool hit = false;
    for (const auto& v : kernel) hit = hit || !is_zero(v[k]);
    if (!hit) return std::nullopt;
  }
  // A nowhere-zero kernel vector exists; find one with deterministic weights
  // (1, t, t^2, ...). Each coordinate kills finitely many t, so this stops.
  for (long t = 1;; ++t) {
    std::vector<Rat> v(m, Rat(0));
    Rat w = 1;
    for (const auto& kv : kernel) {
      for (int k = 0; k < m; ++k) v[k] += w * kv[k];
      w *= t;
    }
    bool nowhere_zero = std::none_of(v.begin(), v.end(),
                                     [](const Rat& x) { return is_zero(x); });
    if (!nowhere_zero) continue;
    Rat scale = 1 / v[0];
    for (auto& x : v) x *= scale;
    return SelfDualityWitness{std::move(v)};
  }
}

PluckerVector hodge_star(const PluckerVector& p) {
  PluckerVector out;
  out.n = p.n;
  int m = 2 * p.n;
  for (const auto& [I, val] : p.coords) {
    Subset Ic = complement(I, m);
    out.coords[Ic] = Rat(sign_concat(I, Ic)) * val;
  }
  return out;
}

std::optional<std::vector<Rat>> lambda_from_plucker(const PluckerVector& p) {
  const int n = p.n, m = 2 * p.n;
  std::vector<Subset> support;
  for (const auto& [I, val] : p.coords)
    if (!is_zero(val)) support.push_back(I);
  Matroid M = Matroid::from_bases(m, n, support);

  // Target ratio q_I = p*_I / p_I per basis; p*_I = sign(I^c, I) p_{I^c}.
  std::map<std::uint32_t, Rat> q;
  for (const auto& I : support) {
    Subset Ic = complement(I, m);
    auto it = p.coords.find(Ic);
    Rat star = (it == p.coords.end()) ? Rat(0) : Rat(sign_concat(Ic, I)) * it->second;
    if (is_zero(star)) return std::nullopt;  // complement leaves the support
    q[mask_of(I)] = star / p.at(I);
  }

  // Propagate lambda_j / lambda_i = q_{I - i + j} / q_I along exchanges.
  const auto& bmasks = M.basis_masks();
  std::vector<Rat> rel(m);
  std::vector<bool> settled(m, false);
  rel[0] = 1;
  settled[0] = true;
  std::vector<int> queue = {0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int i = queue[head];
    for (std::uint32_t Imask : bmasks) {
      if (!(Imask & (1u << i))) continue;
      for (int j = 0; j < m; ++j) {
        if (settled[j] || (Imask & (1u << j))) continue;
        std::uint32_t Jmask = (Imask ^ (1u << i)) | (1u << j);
        if (!M.is_basis_mask(Jmask)) continue;
        rel[j] = rel[i] * q[Jmask] / q[Imask];
        settled[j] = true;
        queue.push_back(j);
      }
    }
  }
  if (std::find(settled.begin(), settled.end(), false) != settled.end())
    throw DisconnectedSupport("basis exchanges do not reach every element");

  // One basis equation pins the global scale t with t^n known.
  std::uint32_t I0 = bmasks.front();
  Rat prod_rel = 1;
  for (int i = 0; i < m; ++i)
    if (I0 & (1u << i)) prod_rel *= rel[i];
  auto t = rat_nth_root(q[I0] / prod_rel, n);
  if (!t || is_zero(*t)) return std::nullopt;

  std::vector<Rat> lambda(m);
  for (int i = 0; i < m; ++i) lambda[i] = *t * rel[i];

  // Verify every basis equation (the propagation used one witness per edge).
  for (std::uint32_t Imask : bmasks) {
    Rat prod = 1;
    for (int i = 0; i < m; ++i)
      if (Imask & (1u << i)) prod *= lambda[i];
    if (prod != q[Imask]) return std::nullopt;
  }
  return lambda;
}

Configuration normalize(const Configuration& X) {
  check_shape(X);
  const int n = X.n, m = 2 * X.n;
  RatMatrix A(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) A.at(r, c) = X.points.at(r, c);
  if (is_zero(A.det()))
    throw NormalFormUnavailable("columns 1.." + std::to_string(n) +
                                " are not a basis");
  RatMatrix Y = A.inverse() * X.points;
  for (int r = 0; r < n; ++r)
    if (is_zero(Y.at(r, n)))
      throw NormalFormUnavailable(
          "column " + std::to_string(n + 1) +
          " has a zero coordinate in the basis of columns 1.." + std::to_string(n));
  // Row scales make column n+1 all ones; rescaling columns 1..n keeps the
  // identity block.
  for (int r = 0; r < n; ++r) {
    Rat s = 1 / Y.at(r, n);
    for (int c = 0; c < m; ++c) Y.at(r, c) *= s;
    Y.at(r, r) = 1;
  }
  for (int c = n + 1; c < m; ++c) {
    if (is_zero(Y.at(0, c)))
      throw NormalFormUnavailable("first row vanishes in column " +
                                  std::to_string(c + 1));
    Rat s = 1 / Y.at(0, c);
    for (int r = 0; r < n; ++r) Y.at(r, c) *= s;
  }
  return Configuration{n, std::move(Y)};
}

Configuration sample_selfdual(int n, std::uint64_t seed, int retry_bound) {
  if (n < 2) throw BadInput("sampling needs n >= 2");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < retry_bound; ++attempt) {
    // Random rational skew-symmetric S; I + S is always invertible.
    RatMatrix S(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat v = rat(rng.below(-9, 9), rng.below(1, 9));
        S.at(i, j) = v;
        S.at(j, i) = -v;
      }
    RatMatrix IpS = RatMatrix::identity(n), ImS = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        IpS.at(i, j) += S.at(i, j);
        ImS.at(i, j) -= S.at(i, j);
      }
    RatMatrix R = ImS * IpS.inverse();
    Configuration X;
    X.n = n;
    X.points = RatMatrix(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      X.points.at(i, i) = 1;
      for (int j = 0; j < n; ++j) X.points.at(i, n + j) = R.at(i, j);
    }
    bool generic = true;
    for (const auto& I : subsets_lex(2 * n, n))
      if (is_zero(X.points.minor_det(I))) {
        generic = false;
        break;
      }
    if (generic) return X;
  }
  throw SamplerExhausted("no generic rotation found within " +
                         std::to_string(retry_bound) + " attempts");
}

Rat conic_quartic(const PluckerVector& p) {
  if (p.n != 3) throw WrongDimensions("conic quartic needs n = 3");
  return p.at({1, 2, 3}) * p.at({1, 4, 5}) * p.at({3, 5, 6}) * p.at({2, 4, 6}) -
         p.at({1, 2, 4}) * p.at({1, 3, 5}) * p.at({4, 5, 6}) * p.at({2, 3, 6});
}

Configuration nonvamos_sample(const Rat& a, const Rat& b, const Rat& c) {
  Rat den = 2 * a * b * c - a * b - a * c - b * c + 1;
  if (is_zero(den))
    throw DegenerateParameters("cubic constraint is unsolvable for d");
  Rat d = (a * b * c - a - b - c + 2) / den;
  Configuration X;
  X.n = 4;
  X.points = RatMatrix(4, 8);
  Rat diag[4] = {a, b, c, d};
  for (int r = 0; r < 4; ++r) {
    X.points.at(r, r) = 1;
    for (int j = 0; j < 4; ++j) X.points.at(r, 4 + j) = (r == j) ? diag[j] : Rat(1);
  }
  static const std::vector<Subset> expected = {
      {1, 2, 5, 6}, {1, 3, 5, 7}, {1, 4, 5, 8}, {2, 3, 6, 7}, {2, 4, 6, 8}, {3, 4, 7, 8}};
  Matroid M = matroid_of(X);
  if (M.nonbases_list() != expected)
    throw DegenerateParameters("an unintended minor vanished at these parameters");
  if (!selfdual_certificate(X))
    throw DegenerateParameters("no self-duality witness at these parameters");
  return X;
}

std::array<Rat, 4> nonvamos_quartics(const PluckerVector& p) {
  if (p.n != 4) throw WrongDimensions("these quartics need n = 4");
  auto P = [&](int i, int j, int k, int l) { return p.at({i, j, k, l}); };
  return {
      P(1, 2, 3, 4) * P(1, 3, 5, 6) * P(2, 5, 7, 8) * P(4, 6, 7, 8) -
          P(1, 2, 3, 5) * P(1, 3, 4, 6) * P(2, 4, 7, 8) * P(5, 6, 7, 8),
      P(1, 2, 3, 4) * P(1, 2, 5, 7) * P(3, 5, 6, 8) * P(4, 6, 7, 8) -
          P(1, 2, 3, 5) * P(1, 2, 4, 7) * P(3, 4, 6, 8) * P(5, 6, 7, 8),
      P(1, 2, 3, 4) * P(1, 4, 5, 6) * P(2, 5, 7, 8) * P(3, 6, 7, 8) -
          P(1, 2, 4, 5) * P(1, 3, 4, 6) * P(2, 3, 7, 8) * P(5, 6, 7, 8),
      P(1, 2, 3, 4) * P(1, 2, 6, 7) * P(3, 5, 6, 8) * P(4, 5, 7, 8) -
          P(1, 2, 3, 6) * P(1, 2, 4, 7) * P(3, 4, 5, 8) * P(5, 6, 7, 8),
  };
}

std::string config_to_json(const Configuration& X) {
  nlohmann::json j;
  j["n"] = X.n;
  nlohmann::json cols = nlohmann::json::array();
  for (int c = 0; c < X.points.cols(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (int r = 0; r < X.points.rows(); ++r) col.push_back(rat_str(X.points.at(r, c)));
    cols.push_back(col);
  }
  j["columns"] = cols;
  return j.dump();
}

Configuration config_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("columns"))
    throw BadInput("configuration JSON needs n and columns");
  Configuration X;
  X.n = j["n"].get<int>();
  if (X.n < 1 || !j["columns"].is_array() ||
      static_cast<int>(j["columns"].size()) != 2 * X.n)
    throw BadInput("configuration JSON needs exactly 2n columns");
  X.points = RatMatrix(X.n, 2 * X.n);
  for (int c = 0; c < 2 * X.n; ++c) {
    const auto& col = j["columns"][c];
    if (!col.is_array() || static_cast<int>(col.size()) != X.n)
      throw BadInput("each column needs n entries");
    for (int r = 0; r < X.n; ++r)
      X.points.at(r, c) = rat_parse(col[r].get<std::string>());
  }
  return X;
}

}  // namespace sd
