#include <doctest.h>

#include <algorithm>

#include "selfdual/config.hpp"

using namespace sd;

namespace {

RatMatrix mat(int rows, int cols, const std::vector<std::vector<long>>& v) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = v[r][c];
  return m;
}

// Two collinear triples: columns 1,2,3 and 4,5,6 each span a line, at the
// chart point (x, y) = (2, 3).
Configuration collinear_pair() {
  return {3, mat(3, 6, {{1, 0, 1, 0, 1, 1}, {0, 1, 2, 0, 1, 1}, {0, 0, 0, 1, 1, 3}})};
}

// Six points with no special position (frozen: conic quartic = -216).
Configuration generic_six() {
  return {3, mat(3, 6, {{1, 0, 0, 1, 2, 3}, {0, 1, 0, 4, 5, 6}, {0, 0, 1, 7, 8, 10}})};
}

bool diag_witness_annihilates(const Configuration& X, const std::vector<Rat>& lambda) {
  int n = X.n, m = 2 * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s = 0;
      for (int k = 0; k < m; ++k) s += X.points.at(i, k) * lambda[k] * X.points.at(j, k);
      if (!is_zero(s)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("matroid_of reads off vanishing minors") {
  Matroid M = matroid_of(collinear_pair());
  CHECK(M.nonbases_list() == std::vector<Subset>{{1, 2, 3}, {4, 5, 6}});
  Matroid U = matroid_of(generic_six());
  CHECK(U.basis_count() == 20);
  Configuration bad{2, mat(2, 4, {{1, 2, 3, 4}, {2, 4, 6, 8}})};
  CHECK_THROWS_AS(matroid_of(bad), RankDeficient);
}

TEST_CASE("certificate for four distinct points on the line") {
  Configuration X{2, mat(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}})};
  auto w = selfdual_certificate(X);
  REQUIRE(w.has_value());
  CHECK(w->lambda.size() == 4);
  CHECK(w->lambda[0] == 1);
  CHECK(diag_witness_annihilates(X, w->lambda));
}

TEST_CASE("certificate matches the collinear-pair formula at (2,3)") {
  auto w = selfdual_certificate(collinear_pair());
  REQUIRE(w.has_value());
  // (2, -4, 2, -12, -6, 2) scaled so the first entry is 1.
  std::vector<Rat> expect = {rat(1), rat(-2), rat(1), rat(-6), rat(-3), rat(1)};
  CHECK(w->lambda == expect);
}

TEST_CASE("no certificate for six generic points") {
  CHECK(!selfdual_certificate(generic_six()).has_value());
  CHECK(conic_quartic(plucker_of(generic_six())) == rat(-216));
}

TEST_CASE("Hodge star signs for n=3") {
  PluckerVector p;
  p.n = 3;
  long prime = 2;
  for (const auto& I : subsets_lex(6, 3)) {
    p.coords[I] = prime;
    prime = prime * 3 + 1;  // distinct values
  }
  PluckerVector s = hodge_star(p);
  CHECK(s.at({1, 2, 3}) == -p.at({4, 5, 6}));
  CHECK(s.at({1, 2, 4}) == p.at({3, 5, 6}));
  CHECK(s.at({1, 2, 5}) == -p.at({3, 4, 6}));
  CHECK(s.at({1, 2, 6}) == p.at({3, 4, 5}));
  CHECK(s.at({1, 3, 4}) == -p.at({2, 5, 6}));
  CHECK(s.at({4, 5, 6}) == p.at({1, 2, 3}));
  // Involution up to the dimension sign.
  PluckerVector ss = hodge_star(s);
  for (const auto& [I, v] : p.coords) CHECK(ss.at(I) == -v);
}

TEST_CASE("Hodge star squares to +1 in even rank") {
  PluckerVector p;
  p.n = 2;
  long val = 5;
  for (const auto& I : subsets_lex(4, 2)) p.coords[I] = val += 3;
  PluckerVector ss = hodge_star(hodge_star(p));
  CHECK(ss == p);
}

TEST_CASE("Hodge star equals the orthogonal complement's Plucker vector") {
  Configuration X = generic_six();
  auto K = X.points.kernel_basis();
  REQUIRE(K.size() == 3);
  RatMatrix Km(3, 6);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) Km.at(r, c) = K[r][c];
  PluckerVector perp = plucker_of({3, Km});
  PluckerVector star = hodge_star(plucker_of(X));
  // Proportional: one global nonzero scalar.
  Rat ratio = perp.at({1, 2, 3}) / star.at({1, 2, 3});
  CHECK(!is_zero(ratio));
  for (const auto& [I, v] : star.coords) CHECK(perp.at(I) == ratio * v);
}

TEST_CASE("sampler output is certified uniform and reproducible") {
  for (int n = 2; n <= 4; ++n) {
    Configuration X = sample_selfdual(n, 42 + n);
    CHECK(matroid_of(X).basis_count() ==
          static_cast<std::size_t>(binom(2 * n, n)));
    auto w = selfdual_certificate(X);
    REQUIRE(w.has_value());
    std::vector<Rat> expect(2 * n, rat(1));
    for (int i = n; i < 2 * n; ++i) expect[i] = rat(-1);
    CHECK(w->lambda == expect);
  }
  CHECK(sample_selfdual(3, 7) == sample_selfdual(3, 7));
  CHECK(!(sample_selfdual(3, 7) == sample_selfdual(3, 8)));
  CHECK_THROWS_AS(sample_selfdual(1, 0), BadInput);
}

TEST_CASE("torus weights from the Plucker vector") {
  // A rotation sample in odd rank has the unique weight vector
  // (-1,-1,-1,1,1,1); it also certifies the matrix equation.
  Configuration X = sample_selfdual(3, 11);
  auto lam = lambda_from_plucker(plucker_of(X));
  REQUIRE(lam.has_value());
  std::vector<Rat> expect = {rat(-1), rat(-1), rat(-1), rat(1), rat(1), rat(1)};
  CHECK(*lam == expect);
  CHECK(diag_witness_annihilates(X, *lam));

  // Generic points admit no weights.
  CHECK(!lambda_from_plucker(plucker_of(generic_six())).has_value());

  // A vector fixed by the Hodge star has weights (1,1,1,1).
  PluckerVector fixed;
  fixed.n = 2;
  fixed.coords[{1, 2}] = 1;
  fixed.coords[{1, 3}] = 1;
  fixed.coords[{1, 4}] = 1;
  fixed.coords[{2, 3}] = 1;
  fixed.coords[{2, 4}] = -1;
  fixed.coords[{3, 4}] = 1;
  REQUIRE(hodge_star(fixed) == fixed);
  auto ones = lambda_from_plucker(fixed);
  REQUIRE(ones.has_value());
  CHECK(*ones == std::vector<Rat>(4, rat(1)));
}

TEST_CASE("certificate and weight recovery agree on samples") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Configuration X = sample_selfdual(3, seed);
    CHECK(selfdual_certificate(X).has_value());
    CHECK(lambda_from_plucker(plucker_of(X)).has_value());
    CHECK(is_zero(conic_quartic(plucker_of(X))));
  }
}

TEST_CASE("normal form is canonical") {
  Configuration X{3, mat(3, 6, {{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 2, 5}, {0, 0, 1, 1, 3, 7}})};
  CHECK(normalize(X) == X);

  // Row operations (left multiplication) and column scalings wash out.
  RatMatrix A = mat(3, 3, {{2, 1, 0}, {0, 1, 3}, {1, 0, 1}});
  REQUIRE(!is_zero(A.det()));
  RatMatrix Y = A * X.points;
  std::vector<long> d = {3, -1, 2, 5, -2, 7};
  for (int c = 0; c < 6; ++c)
    for (int r = 0; r < 3; ++r) Y.at(r, c) *= rat(d[c]);
  CHECK(normalize({3, Y}) == X);

  Configuration dep{3, mat(3, 6, {{1, 0, 2, 1, 1, 1}, {0, 1, 3, 1, 2, 5}, {0, 0, 0, 1, 3, 7}})};
  CHECK_THROWS_AS(normalize(dep), NormalFormUnavailable);
  Configuration zc{3, mat(3, 6, {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 2, 5}, {0, 0, 1, 1, 3, 7}})};
  CHECK_THROWS_AS(normalize(zc), NormalFormUnavailable);
}

TEST_CASE("four concurrent point pairs: rational samples") {
  Configuration X = nonvamos_sample(rat(2), rat(3), rat(5));
  CHECK(X.points.at(3, 7) == rat(11, 15));  // solved diagonal entry d
  Matroid M = matroid_of(X);
  std::vector<Subset> nb = {{1, 2, 5, 6}, {1, 3, 5, 7}, {1, 4, 5, 8},
                            {2, 3, 6, 7}, {2, 4, 6, 8}, {3, 4, 7, 8}};
  CHECK(M.nonbases_list() == nb);
  CHECK(M.is_selfdual());
  CHECK(selfdual_certificate(X).has_value());
  auto q = nonvamos_quartics(plucker_of(X));
  for (const auto& v : q) CHECK(is_zero(v));

  // a = b = 1 collapses the constraint identically.
  CHECK_THROWS_AS(nonvamos_sample(rat(1), rat(1), rat(2)), DegenerateParameters);
}

TEST_CASE("normal form of the concurrent-pairs chart") {
  // Normalizing the (a,b,c,d)-chart matrix rescales its right block.
  Configuration X = nonvamos_sample(rat(2), rat(3), rat(5));
  Configuration N = normalize(X);
  Rat a = rat(2), b = rat(3), c = rat(5), d = rat(11, 15);
  RatMatrix expect = mat(4, 8, {{1, 0, 0, 0, 1, 1, 1, 1},
                                {0, 1, 0, 0, 1, 0, 0, 0},
                                {0, 0, 1, 0, 1, 0, 0, 0},
                                {0, 0, 0, 1, 1, 0, 0, 0}});
  expect.at(1, 5) = a * b;
  expect.at(1, 6) = a;
  expect.at(1, 7) = a;
  expect.at(2, 5) = a;
  expect.at(2, 6) = a * c;
  expect.at(2, 7) = a;
  expect.at(3, 5) = a;
  expect.at(3, 6) = a;
  expect.at(3, 7) = a * d;
  CHECK(N.points == expect);
}

TEST_CASE("conic quartic is proportional to the monomial-matrix determinant") {
  auto mono_det = [](const Configuration& X) {
    RatMatrix Q(6, 6);
    int rows[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
    for (int r = 0; r < 6; ++r)
      for (int k = 0; k < 6; ++k)
        Q.at(r, k) = X.points.at(rows[r][0], k) * X.points.at(rows[r][1], k);
    return Q.det();
  };
  Configuration A = generic_six();
  Configuration B{3, mat(3, 6, {{1, 0, 0, 2, 3, 1}, {0, 1, 0, 1, 7, 2}, {0, 0, 1, 5, 2, 9}})};
  Rat qa = conic_quartic(plucker_of(A)), qb = conic_quartic(plucker_of(B));
  Rat da = mono_det(A), db = mono_det(B);
  REQUIRE(!is_zero(da));
  REQUIRE(!is_zero(db));
  CHECK(qa * db == qb * da);  // one fixed proportionality factor

  Configuration S = sample_selfdual(3, 3);
  CHECK(is_zero(mono_det(S)));
  CHECK_THROWS_AS(conic_quartic(plucker_of({2, mat(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}})})),
                  WrongDimensions);
}

TEST_CASE("configuration JSON round trip") {
  Configuration X = nonvamos_sample(rat(2), rat(3), rat(5));
  Configuration back = config_from_json(config_to_json(X));
  CHECK(back == X);
  CHECK_THROWS_AS(config_from_json("{\"n\": 2}"), BadInput);
  CHECK_THROWS_AS(config_from_json("{\"n\": 2, \"columns\": [[\"1\",\"0\"]]}"), BadInput);
}
