#include <catch2/catch_amalgamated.hpp>
#include <kfan/corpus.hpp>
#include <kfan/kfan.hpp>

#include "test_util.hpp"

using namespace kfan;
using namespace kfan::testutil;

namespace {

AbelianGroupData cyclic(long long r, std::vector<long long> w) {
  AbelianGroupData g;
  g.n = static_cast<int>(w.size());
  VecZ z;
  for (long long x : w) z.push_back(Int(x));
  g.generators.push_back({Int(r), std::move(z)});
  return g;
}

int nonzero_coords(const VecQ& e) {
  int c = 0;
  for (const auto& x : e)
    if (x != 0) ++c;
  return c;
}

VecQ inverse_element(const VecQ& e) {
  VecQ out(e.size());
  for (size_t i = 0; i < e.size(); ++i) out[i] = rat_frac(Rat(1) - e[i]);
  return out;
}

}  // namespace

TEST_CASE("group normalization", "[mckay]") {
  AbelianGroupData g = cyclic(5, {7, -3});
  normalize_group(g);
  CHECK(g.generators[0].second == VecZ{Int(2), Int(2)});

  AbelianGroupData bad = cyclic(0, {1, 1});
  CHECK_THROWS_WITH(normalize_group(bad), "generator order must be positive");
  AbelianGroupData shortWeights = cyclic(2, {1});
  shortWeights.n = 2;
  CHECK_THROWS_WITH(normalize_group(shortWeights), "generator weights have the wrong length");
}

TEST_CASE("group element enumeration", "[mckay]") {
  SECTION("cyclic groups list every power") {
    auto e2 = group_elements(cyclic(2, {1, 1}));
    CHECK(e2 == std::vector<VecQ>{{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}});

    auto e4 = group_elements(cyclic(4, {1, 1}));
    CHECK(e4.size() == 4);
    CHECK(std::set<VecQ>(e4.begin(), e4.end()).count({Rat(3, 4), Rat(3, 4)}) == 1);
  }
  SECTION("products combine generators") {
    AbelianGroupData g;
    g.n = 2;
    g.generators.push_back({Int(2), {Int(1), Int(0)}});
    g.generators.push_back({Int(2), {Int(0), Int(1)}});
    CHECK(group_elements(g).size() == 4);
  }
  SECTION("redundant generators change nothing") {
    AbelianGroupData g = cyclic(2, {1, 1});
    g.generators.push_back(g.generators[0]);
    CHECK(group_elements(g).size() == 2);
  }
  SECTION("trivial group") {
    AbelianGroupData g;
    g.n = 3;
    CHECK(group_elements(g) == std::vector<VecQ>{{Rat(0), Rat(0), Rat(0)}});
  }
  SECTION("cap guards runaway enumeration") {
    CHECK_THROWS_WITH(group_elements(cyclic(4, {1, 1}), 3), "group order cap exceeded");
  }
}

TEST_CASE("ages and juniors", "[mckay]") {
  CHECK(junior_count(cyclic(2, {1, 1})) == 1);
  CHECK(junior_count(cyclic(3, {1, 1, 1})) == 1);
  CHECK(junior_count(cyclic(5, {1, 1, 3})) == 2);
  CHECK(junior_count(cyclic(2, {1, 0})) == 0);
  CHECK(junior_count(cyclic(2, {1, 1, 1})) == 0);

  auto spectrum = age_spectrum(cyclic(3, {1, 1, 1}));
  std::multiset<Rat> ages;
  for (const auto& a : spectrum) ages.insert(a.age);
  CHECK(ages == std::multiset<Rat>{Rat(0), Rat(1), Rat(2)});

  SECTION("age of an element plus its inverse counts the moved coordinates") {
    for (const auto& g : {cyclic(5, {1, 1, 3}), cyclic(4, {1, 1}), cyclic(6, {1, 2, 3})}) {
      auto elems = group_elements(g);
      std::set<VecQ> all(elems.begin(), elems.end());
      for (const auto& e : elems) {
        VecQ inv = inverse_element(e);
        CHECK(all.count(inv) == 1);
        CHECK(element_age(e) + element_age(inv) == nonzero_coords(e));
      }
    }
  }
}

TEST_CASE("special linear membership", "[mckay]") {
  CHECK(group_in_sl(cyclic(2, {1, 1})));
  CHECK(group_in_sl(cyclic(3, {1, 1, 1})));
  CHECK_FALSE(group_in_sl(cyclic(2, {1, 0})));
  CHECK_FALSE(group_in_sl(cyclic(3, {1, 1, 2})));
  CHECK_FALSE(group_in_sl(cyclic(2, {1, 1, 1})));

  AbelianGroupData two;
  two.n = 3;
  two.generators.push_back({Int(2), {Int(1), Int(1), Int(0)}});
  two.generators.push_back({Int(2), {Int(0), Int(1), Int(1)}});
  CHECK(group_in_sl(two));
}

TEST_CASE("hermite row bases", "[mckay]") {
  SECTION("frozen lattice") {
    MatZ h = hermite_row_basis({{Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(1)}}, 2);
    CHECK(h == MatZ{{Int(2), Int(0)}, {Int(1), Int(1)}});
  }
  SECTION("rank defects are rejected") {
    CHECK_THROWS_WITH(hermite_row_basis({{Int(1), Int(0)}}, 2), "matrix is not of full rank");
    CHECK_THROWS_WITH(hermite_row_basis({{Int(0), Int(1)}, {Int(0), Int(2)}, {Int(0), Int(3)}}, 2),
                      "matrix is not of full rank");
  }
  SECTION("canonical form is stable under redundant rows") {
    auto rng = make_rng(2024);
    for (int t = 0; t < 60; ++t) {
      int n = 2 + static_cast<int>(rand_int(rng, 0, 1));
      MatZ m(n, VecZ(n, Int(0)));
      for (int i = 0; i < n; ++i) {
        m[i][i] = rand_int(rng, 1, 4);
        for (int j = i + 1; j < n; ++j) m[i][j] = rand_int(rng, -3, 3);
      }
      for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
          Int f = rand_int(rng, -2, 2);
          for (int k = 0; k < n; ++k) m[i][k] += f * m[j][k];
        }
      MatZ base = hermite_row_basis(m, n);

      MatZ stacked = m;
      for (int extra = 0; extra < 2; ++extra) {
        VecZ row(n, Int(0));
        for (int i = 0; i < n; ++i) {
          Int f = rand_int(rng, -2, 2);
          for (int k = 0; k < n; ++k) row[k] += f * m[i][k];
        }
        stacked.push_back(std::move(row));
      }
      CHECK(hermite_row_basis(stacked, n) == base);

      MatQ basisQ;
      for (const auto& row : base) basisQ.push_back(to_vecq(row));
      for (const auto& row : m) {
        VecQ c = coords_in_basis(basisQ, to_vecq(row));
        for (const auto& x : c) CHECK(rat_den(x) == 1);
      }
    }
  }
}

TEST_CASE("coordinates in a refined basis", "[mckay]") {
  MatQ basis = {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}};
  CHECK(coords_in_basis(basis, {Rat(1), Rat(0)}) == VecQ{Rat(1), Rat(0)});
  CHECK(coords_in_basis(basis, {Rat(0), Rat(1)}) == VecQ{Rat(-1), Rat(2)});
  CHECK(coords_in_basis(basis, {Rat(1, 2), Rat(1, 2)}) == VecQ{Rat(0), Rat(1)});
  VecQ thirds = coords_in_basis(basis, {Rat(1, 3), Rat(1, 3)});
  CHECK(rat_den(thirds[1]) != 1);
}

TEST_CASE("quotient fans", "[mckay]") {
  SECTION("half weights refine the quadrant") {
    auto q = quotient_fan(cyclic(2, {1, 1}));
    CHECK(q.pair.label == "C^2/G");
    CHECK(q.pair.fan.rays == MatZ{{Int(1), Int(0)}, {Int(-1), Int(2)}});
    CHECK(q.pair.coefficients.empty());
    CHECK(cone_multiplicity(cone_ray_vectors(q.pair.fan, {0, 1})) == 2);
    CHECK(q.scale == 2);
  }
  SECTION("quasi-reflections surface as standard coefficients") {
    auto q = quotient_fan(cyclic(2, {1, 0}));
    CHECK(q.pair.fan.rays == MatZ{{Int(1), Int(0)}, {Int(0), Int(1)}});
    REQUIRE(q.pair.coefficients.count(0) == 1);
    CHECK(q.pair.coefficients.at(0) == Rat(1, 2));
    CHECK(fan_is_smooth(q.pair.fan));
    CHECK(categorical_rank(q.pair) == 2);
  }
  SECTION("a rational double point") {
    auto q = quotient_fan(cyclic(3, {1, 2}));
    CHECK(q.pair.fan.rays == MatZ{{Int(1), Int(0)}, {Int(-2), Int(3)}});
    CHECK(cone_multiplicity(cone_ray_vectors(q.pair.fan, {0, 1})) == 3);
  }
  SECTION("negative weights are reduced first") {
    auto a = quotient_fan(cyclic(3, {1, -1}));
    auto b = quotient_fan(cyclic(3, {1, 2}));
    CHECK(a.pair.fan.rays == b.pair.fan.rays);
  }
  SECTION("group elements land in the refined lattice") {
    auto rng = make_rng(3033);
    for (int t = 0; t < 40; ++t) {
      long long r = 2 + static_cast<long long>(rand_int(rng, 0, 10));
      long long w = 1 + static_cast<long long>(rand_int(rng, 0, static_cast<int>(r - 2)));
      auto q = quotient_fan(cyclic(r, {1, w}));
      require_valid(q.pair);
      for (const auto& e : group_elements(cyclic(r, {1, w}))) {
        VecQ c = coords_in_basis(q.basis, e);
        for (const auto& x : c) CHECK(rat_den(x) == 1);
      }
      Int covol = 1;
      for (int i = 0; i < 2; ++i) covol *= q.basisNumerators[i][i];
      Int groupOrder = (Int(q.scale) * Int(q.scale)) / covol;
      CHECK(groupOrder == static_cast<long long>(group_elements(cyclic(r, {1, w})).size()));
    }
  }
  SECTION("dimension must be positive") {
    AbelianGroupData g;
    g.n = 0;
    CHECK_THROWS_WITH(quotient_fan(g), "group dimension must be positive");
  }
}

TEST_CASE("surface special linear sweep", "[mckay]") {
  auto groups = sl_groups_dim2(6);
  REQUIRE(groups.size() == 6);
  for (int r = 1; r <= 6; ++r) {
    const auto& g = groups[r - 1];
    CHECK(group_in_sl(g));
    CHECK(static_cast<int>(group_elements(g).size()) == r);
    CHECK(junior_count(g) == r - 1);
  }
  SECTION("juniors match the crepant rays of the resolution") {
    for (int r = 2; r <= 5; ++r) {
      auto q = quotient_fan(cyclic(r, {1, r - 1}));
      CHECK(static_cast<Int>(crepant_rays(q.pair).size()) == junior_count(cyclic(r, {1, r - 1})));
      auto res = resolve(q.pair);
      std::set<VecZ> original(q.pair.fan.rays.begin(), q.pair.fan.rays.end());
      Int crepantExceptional = 0;
      for (const auto& [idx, b] : res.pair.coefficients)
        if (b == 0 && !original.count(res.pair.fan.rays[idx])) ++crepantExceptional;
      CHECK(crepantExceptional == junior_count(cyclic(r, {1, r - 1})));
    }
  }
}

TEST_CASE("threefold special linear sweep", "[mckay]") {
  auto groups = sl_groups_dim3(4);
  REQUIRE(groups.size() == 15);

  size_t idx = 0;
  std::set<std::vector<VecQ>> seen;
  for (int m = 1; m <= 4; ++m)
    for (int a = 1; a <= m; ++a) {
      if (m % a != 0) continue;
      for (int c = 0; c < a; ++c) {
        const auto& g = groups[idx++];
        CHECK(g.n == 3);
        CHECK(group_in_sl(g));
        auto elems = group_elements(g);
        CHECK(static_cast<int>(elems.size()) == m);
        for (const auto& e : elems) CHECK(rat_den(element_age(e)) == 1);
        CHECK(seen.insert(elems).second);
      }
    }
  CHECK(idx == groups.size());

  bool foundDiagonalThird = false;
  for (const auto& g : groups)
    if (g.generators.size() == 1 && g.generators[0].first == 3 &&
        g.generators[0].second == VecZ{Int(1), Int(1), Int(1)})
      foundDiagonalThird = true;
  CHECK(foundDiagonalThird);
}
