#include <doctest.h>

#include <algorithm>
#include <vector>

#include "selfdual/matroid.hpp"

using namespace sd;

namespace {

Matroid uniform(int m, int n) {
  return Matroid::from_bases(m, n, subsets_lex(m, n));
}

// The rank-3 self-dual matroid with nonbases 123 and 456 (two collinear
// triples in the plane).
Matroid two_triangles() {
  return Matroid::from_nonbases(6, 3, {{1, 2, 3}, {4, 5, 6}});
}

Matroid nonvamos() {
  return Matroid::from_nonbases(
      8, 4,
      {{1, 2, 5, 6}, {1, 3, 5, 7}, {1, 4, 5, 8}, {2, 3, 6, 7}, {2, 4, 6, 8}, {3, 4, 7, 8}});
}

Matroid relabel(const Matroid& M, const std::vector<int>& perm) {
  // perm maps old element i (1-based) to perm[i-1].
  std::vector<Subset> bases;
  for (const auto& b : M.bases_list()) {
    Subset img;
    for (int e : b) img.push_back(perm[e - 1]);
    std::sort(img.begin(), img.end());
    bases.push_back(img);
  }
  return Matroid::from_bases(M.ground_size(), M.rank(), bases);
}

}  // namespace

TEST_CASE("from_bases validates input") {
  CHECK_THROWS_AS(Matroid::from_bases(4, 2, {}), EmptyBasisList);
  CHECK_THROWS_AS(Matroid::from_bases(4, 2, {{1, 2}, {3, 4}}), ExchangeAxiomViolation);
  CHECK_THROWS_AS(Matroid::from_bases(4, 2, {{1, 5}}), BadInput);
  CHECK_THROWS_AS(Matroid::from_bases(4, 2, {{1, 2, 3}}), BadInput);
  CHECK_NOTHROW(uniform(4, 2));
  CHECK_NOTHROW(two_triangles());
}

TEST_CASE("duality is an involution and complements bases") {
  Matroid u = uniform(4, 2);
  CHECK(u.dual() == u);
  Matroid m = two_triangles();
  Matroid d = m.dual();
  CHECK(d.is_basis({1, 2, 4}));
  CHECK(!d.is_basis({1, 2, 3}));
  CHECK(d.dual() == m);
  Matroid nv = nonvamos();
  CHECK(nv.dual().dual() == nv);
}

TEST_CASE("self-duality") {
  CHECK(uniform(6, 3).is_selfdual());
  CHECK(two_triangles().is_selfdual());
  CHECK(nonvamos().is_selfdual());
  // A single nonbasis is never closed under complementation.
  Matroid one = Matroid::from_nonbases(6, 3, {{1, 2, 3}});
  CHECK(!one.is_selfdual());
  CHECK_THROWS_AS(uniform(5, 2).is_selfdual(), GroundSizeNotTwiceRank);
}

TEST_CASE("rank oracle") {
  Matroid u = uniform(6, 3);
  CHECK(u.rank_of({1, 2}) == 2);
  CHECK(u.rank_of({}) == 0);
  Matroid m = two_triangles();
  CHECK(m.rank_of({1, 2, 3}) == 2);
  CHECK(m.rank_of({1, 2, 3, 4, 5, 6}) == 3);
  CHECK(m.rank_of({1, 2, 4}) == 3);
}

TEST_CASE("rank is monotone and submodular") {
  Matroid nv = nonvamos();
  unsigned state = 5u;
  for (int trial = 0; trial < 60; ++trial) {
    state = state * 1103515245u + 12345u;
    std::uint32_t a = (state >> 8) & 0xffu;
    state = state * 1103515245u + 12345u;
    std::uint32_t b = (state >> 8) & 0xffu;
    int ra = nv.rank_of_mask(a), rb = nv.rank_of_mask(b);
    CHECK(nv.rank_of_mask(a | b) >= std::max(ra, rb));
    CHECK(nv.rank_of_mask(a | b) + nv.rank_of_mask(a & b) <= ra + rb);
  }
}

TEST_CASE("circuits of small matroids") {
  auto cu = uniform(4, 2).circuits();
  REQUIRE(cu.size() == 4);
  for (const auto& c : cu) CHECK(c.size() == 3);

  auto cm = two_triangles().circuits();
  // The two dependent triples, plus the 4-subsets containing neither.
  REQUIRE(cm.size() == 11);
  CHECK(cm[0] == Subset{1, 2, 3});
  CHECK(cm[1] == Subset{4, 5, 6});
  for (std::size_t i = 2; i < cm.size(); ++i) CHECK(cm[i].size() == 4);
}

TEST_CASE("self-dual circuits equal cocircuits") {
  for (const Matroid& m : {uniform(6, 3), two_triangles(), nonvamos()}) {
    CHECK(m.circuits() == m.dual().circuits());
  }
}

TEST_CASE("connectivity and stability") {
  CHECK(uniform(6, 3).is_connected());
  CHECK(uniform(6, 3).is_stable());
  CHECK(two_triangles().is_connected());
  CHECK(two_triangles().is_stable());
  CHECK(nonvamos().is_stable());

  // Direct sum of U_{2,4} on {1..4} and U_{3,6} on {5..10}.
  std::vector<Subset> bases;
  for (const auto& a : subsets_lex(4, 2))
    for (const auto& b : subsets_lex(6, 3)) {
      Subset s = a;
      for (int e : b) s.push_back(e + 4);
      bases.push_back(s);
    }
  Matroid ds = Matroid::from_bases(10, 5, bases);
  CHECK(!ds.is_connected());
  CHECK(!ds.is_stable());
  CHECK_THROWS_AS(uniform(6, 2).is_stable(), GroundSizeNotTwiceRank);
}

TEST_CASE("stability matches connectivity for self-dual matroids") {
  std::vector<Matroid> sd = {uniform(6, 3), two_triangles(), nonvamos(),
                             Matroid::from_nonbases(8, 4, {{1, 2, 3, 4}, {5, 6, 7, 8}})};
  for (const auto& m : sd) {
    REQUIRE(m.is_selfdual());
    CHECK(m.is_connected() == m.is_stable());
  }
}

TEST_CASE("simplicity") {
  CHECK(uniform(6, 3).is_simple());
  CHECK(nonvamos().is_simple());
  // Parallel elements 1,2: bases all pairs except {1,2}.
  std::vector<Subset> bases;
  for (const auto& s : subsets_lex(4, 2))
    if (!(s[0] == 1 && s[1] == 2)) bases.push_back(s);
  CHECK(!Matroid::from_bases(4, 2, bases).is_simple());
}

TEST_CASE("canonical form is relabeling invariant") {
  Matroid nv = nonvamos();
  auto canon = nv.canonical_form();
  std::vector<std::vector<int>> perms = {
      {2, 1, 3, 4, 5, 6, 7, 8}, {8, 7, 6, 5, 4, 3, 2, 1}, {3, 1, 4, 2, 7, 5, 8, 6},
      {5, 6, 7, 8, 1, 2, 3, 4}, {2, 3, 4, 5, 6, 7, 8, 1}};
  for (const auto& p : perms) {
    Matroid r = relabel(nv, p);
    CHECK(r.canonical_form() == canon);
    CHECK(Matroid::is_isomorphic(nv, r));
  }
  // The canonical form is itself a valid relabeling of the matroid.
  Matroid c = Matroid::from_basis_bitset_unchecked(8, 4, canon);
  CHECK(c.basis_count() == nv.basis_count());
  CHECK(Matroid::is_isomorphic(c, nv));
}

TEST_CASE("non-isomorphic matroids are distinguished") {
  // The two simple self-dual rank-3 matroids on 6 elements.
  CHECK(!Matroid::is_isomorphic(uniform(6, 3), two_triangles()));
  // Equal nonbasis counts but different structure (nonbases given by one
  // representative per complementary pair).
  auto closed = [](std::vector<Subset> reps) {
    std::vector<Subset> all = reps;
    for (const auto& s : reps) all.push_back(complement(s, 8));
    return all;
  };
  Matroid a = Matroid::from_nonbases(
      8, 4, closed({{1, 2, 4, 7}, {1, 3, 5, 7}, {2, 3, 6, 7}, {4, 5, 6, 7}}));
  Matroid b = Matroid::from_nonbases(
      8, 4, closed({{1, 2, 6, 7}, {1, 3, 4, 7}, {1, 3, 5, 6}, {4, 5, 6, 7}}));
  CHECK(a.is_selfdual());
  CHECK(b.is_selfdual());
  CHECK(a.basis_count() == b.basis_count());
  CHECK(!Matroid::is_isomorphic(a, b));
}

TEST_CASE("canonical form of uniform matroids is immediate") {
  Matroid u = uniform(8, 4);
  auto c = u.canonical_form();
  CHECK(std::all_of(c.begin(), c.end(), [](bool x) { return x; }));
}

TEST_CASE("JSON round trip") {
  Matroid m = two_triangles();
  std::string j = m.to_json();
  Matroid back = Matroid::from_json(j);
  CHECK(back == m);
  CHECK(j.find("\"ground_size\":6") != std::string::npos);
  CHECK(j.find("\"rank\":3") != std::string::npos);
  CHECK_THROWS_AS(Matroid::from_json("{\"rank\":3}"), BadInput);
}

TEST_CASE("hex round trip") {
  Matroid u = uniform(4, 2);
  CHECK(u.to_hex() == "fc");  // six one-bits, zero-padded to eight
  CHECK(Matroid::from_hex(4, 2, "fc") == u);
  Matroid nv = nonvamos();
  CHECK(Matroid::from_hex(8, 4, nv.to_hex()) == nv);
  CHECK_THROWS_AS(Matroid::from_hex(4, 2, "ff"), BadInput);  // padding bits set
  CHECK_THROWS_AS(Matroid::from_hex(4, 2, "f"), BadInput);   // wrong length
}
