#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "selfdual/classify.hpp"
#include "selfdual/config.hpp"
#include "selfdual/graphcurve.hpp"

using namespace sd;

namespace {

Subset digits_to_subset(const std::string& s) {
  Subset out;
  for (char ch : s) out.push_back(ch == '0' ? 10 : ch - '0');
  std::sort(out.begin(), out.end());
  return out;
}

// A half-list gives the nonbases omitting the last element; the full list
// adds every complement.
std::vector<Subset> symmetrize(const std::vector<std::string>& half, int m) {
  std::set<Subset> nb;
  for (const std::string& s : half) {
    Subset a = digits_to_subset(s);
    nb.insert(a);
    nb.insert(complement(a, m));
  }
  return {nb.begin(), nb.end()};
}

// The thirteen rank-4 classes by their nonbases not containing 8.
const std::vector<std::vector<std::string>> kRank4Half = {
    {},
    {"1234"},
    {"1234", "1257"},
    {"1234", "1257", "2467"},
    {"1256", "1357", "2367"},
    {"1247", "1357", "2367", "4567"},
    {"1267", "1347", "1356", "4567"},
    {"1234", "1257", "2356", "2467", "3457"},
    {"1257", "1346", "2346", "3456", "3467"},
    {"1267", "1357", "1456", "2356", "2457", "3467"},
    {"1234", "1257", "1367", "1456", "2356", "2467", "3457"},
    {"1234", "1235", "1236", "1237", "1245", "1345", "2345", "4567"},
    {"1234", "1235", "1236", "1237", "1245", "1246", "1247", "1345", "1346",
     "1347", "1567", "2345", "2346", "2347", "2567", "3567", "4567"},
};

const char* kRank5NoWitnessNonbases[18] = {
    "12347", "12369", "12468", "12789", "13568", "14569", "23459", "23567",
    "36789", "12450", "14890", "16780", "23780", "24790", "34560", "35790",
    "45780", "56890"};

std::size_t nonbasis_count(const Matroid& m) {
  return m.basis_indicator().size() - m.basis_count();
}

}  // namespace

TEST_CASE("rank 3 census: exactly two matroids") {
  std::vector<Matroid> out = enumerate_selfdual(3);
  REQUIRE(out.size() == 2);
  for (const Matroid& m : out) {
    CHECK(m.ground_size() == 6);
    CHECK(m.rank() == 3);
    CHECK(m.is_selfdual());
    CHECK(m.is_simple());
  }
  CHECK(nonbasis_count(out[0]) == 0);  // uniform
  CHECK(nonbasis_count(out[1]) == 2);  // two complementary planes
  CHECK_FALSE(Matroid::is_isomorphic(out[0], out[1]));
}

TEST_CASE("rank 3 census: both classes realized with witnesses") {
  std::vector<Matroid> out = enumerate_selfdual(3);
  REQUIRE(out.size() == 2);

  Configuration uniform = sample_selfdual(3, 99);
  CHECK(matroid_of(uniform).canonical_key() == out[0].canonical_key());
  CHECK(selfdual_certificate(uniform).has_value());

  // six points cut from the vertex lines of the triangular prism: exactly
  // the two triangles degenerate
  SimpleGraph prism{6,
                    {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                     {0, 3}, {1, 4}, {2, 5}},
                    false};
  Configuration sliced =
      graph_curve_slice(cycle_matrix(prism), {Rat(5), Rat(-7), Rat(11), Rat(13)});
  CHECK(matroid_of(sliced).canonical_key() == out[1].canonical_key());
  CHECK(selfdual_certificate(sliced).has_value());
}

TEST_CASE("tiny ranks and bad input") {
  CHECK(enumerate_selfdual(1).empty());  // the only candidate has a parallel pair
  std::vector<Matroid> r2 = enumerate_selfdual(2);
  REQUIRE(r2.size() == 1);
  CHECK(nonbasis_count(r2[0]) == 0);
  CHECK_THROWS_AS(enumerate_selfdual(0), BadInput);
  CHECK_THROWS_AS(enumerate_selfdual(5), BadInput);
}

TEST_CASE("rank 4 census: thirteen matroids, twelve stable") {
  std::vector<Matroid> out = enumerate_selfdual(4);
  REQUIRE(out.size() == 13);

  std::multiset<std::size_t> counts;
  int stable = 0;
  std::set<std::string> keys;
  for (const Matroid& m : out) {
    CHECK(m.ground_size() == 8);
    CHECK(m.rank() == 4);
    CHECK(m.is_selfdual());
    CHECK(m.is_simple());
    counts.insert(nonbasis_count(m));
    if (m.is_stable()) ++stable;
    keys.insert(m.canonical_key());
  }
  CHECK(stable == 12);
  CHECK(keys.size() == 13);  // pairwise non-isomorphic
  std::multiset<std::size_t> expected = {0, 2, 4, 6, 6, 8, 8, 10, 10, 12, 14, 16, 34};
  CHECK(counts == expected);

  // the one non-stable class is the largest one
  for (const Matroid& m : out)
    if (!m.is_stable()) CHECK(nonbasis_count(m) == 34);
}

TEST_CASE("rank 4 census matches the published half-lists") {
  std::set<std::string> enumerated;
  for (const Matroid& m : enumerate_selfdual(4)) enumerated.insert(m.canonical_key());
  std::set<std::string> published;
  for (const auto& half : kRank4Half) {
    Matroid m = Matroid::from_nonbases(8, 4, symmetrize(half, 8));
    CHECK(m.is_selfdual());
    published.insert(m.canonical_key());
  }
  CHECK(published.size() == 13);
  CHECK(enumerated == published);
}

TEST_CASE("complement closure: uniform and one-nonbasis inputs") {
  std::vector<Subset> all35;
  for (const Subset& s : subsets_lex(5, 3)) all35.push_back(s);
  Matroid u35 = Matroid::from_bases(5, 3, all35);
  std::optional<Matroid> closed = close_under_complements(u35);
  REQUIRE(closed.has_value());
  CHECK(closed->ground_size() == 6);
  CHECK(closed->basis_count() == 20);  // uniform again
  CHECK(closed->is_selfdual());

  Matroid one_gone = Matroid::from_nonbases(5, 3, {{1, 2, 3}});
  std::optional<Matroid> two = close_under_complements(one_gone);
  REQUIRE(two.has_value());
  CHECK(two->is_selfdual());
  std::vector<Subset> nb = two->nonbases_list();
  std::vector<Subset> expected = {{1, 2, 3}, {4, 5, 6}};
  CHECK(nb == expected);

  std::vector<Matroid> r3 = enumerate_selfdual(3);
  CHECK(two->canonical_key() == r3[1].canonical_key());

  CHECK_THROWS_AS(close_under_complements(*two), BadInput);  // even ground size
}

TEST_CASE("complement closure can fail the exchange axiom") {
  const int rows[4][7] = {{0, 0, 1, 0, 1, 1, 1},
                          {1, 0, 0, 1, 0, 1, 1},
                          {0, 1, 1, 0, 0, 1, 0},
                          {0, 0, 0, 1, 0, 1, 0}};
  RatMatrix x(4, 7);
  for (int r = 0; r < 4; ++r)
    for (int j = 0; j < 7; ++j) x.at(r, j) = Rat(rows[r][j]);
  std::vector<Subset> bases;
  for (const auto& [cols, det] : x.maximal_minors())
    if (det != 0) bases.push_back(cols);
  Matroid m = Matroid::from_bases(7, 4, bases);
  CHECK(nonbasis_count(m) == 14);
  CHECK_FALSE(close_under_complements(m).has_value());
}

TEST_CASE("stored rank-5 realization has no witness") {
  Configuration cfg = rank5_realization_without_witness();
  CHECK(cfg.n == 5);
  CHECK(cfg.points.cols() == 10);
  CHECK(cfg.points.rank() == 5);

  Matroid m = matroid_of(cfg);
  CHECK(m.is_selfdual());
  CHECK(m.is_connected());
  std::vector<Subset> nb;
  for (const char* s : kRank5NoWitnessNonbases) nb.push_back(digits_to_subset(s));
  std::sort(nb.begin(), nb.end());
  CHECK(m.nonbases_list() == nb);

  // the matroid is self-dual, the configuration is not
  CHECK_FALSE(selfdual_certificate(cfg).has_value());
  CHECK_FALSE(lambda_from_plucker(plucker_of(cfg)).has_value());
}
