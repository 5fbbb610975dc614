#include <catch2/catch_amalgamated.hpp>
#include <kfan/corpus.hpp>
#include <kfan/wall.hpp>

#include "test_util.hpp"

using namespace kfan;
using namespace kfan::testutil;

namespace {

ToricPair quadrant_pair() {
  ToricPair p;
  p.fan.rank = 2;
  p.fan.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  p.fan.maxCones = {{0, 1}};
  return p;
}

}  // namespace

TEST_CASE("interior wall enumeration", "[wall]") {
  CHECK(interior_walls(make_blowup_origin_c2().fan) == std::vector<std::vector<int>>{{2}});
  CHECK(interior_walls(make_projective_space(2).fan).size() == 3);
  CHECK(interior_walls(make_p1xp1().fan).size() == 4);
  CHECK(interior_walls(make_atiyah().x.fan) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(interior_walls(make_francia().x.fan) ==
        std::vector<std::vector<int>>{{0, 3, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(interior_walls(quadrant_pair().fan).empty());
}

TEST_CASE("wall analysis on the exceptional curve of a blow-up", "[wall]") {
  auto report = wall_analysis(make_blowup_origin_c2(), {2});
  CHECK(report.wall == std::vector<int>{2});
  CHECK(report.adjacentRays == std::array<int, 2>{0, 1});
  CHECK(report.circuitRays == std::vector<int>{2, 0, 1});
  CHECK(report.relation == VecZ{Int(-1), Int(1), Int(1)});
  CHECK(report.kDegree == 1);
  CHECK(report.classification == WallClass::DIVISORIAL);
  CHECK(report.kSign == KSign::K_NEGATIVE);
}

TEST_CASE("wall analysis on a projective plane ray", "[wall]") {
  auto report = wall_analysis(make_projective_space(2), {0});
  CHECK(report.circuitRays == std::vector<int>{0, 1, 2});
  CHECK(report.relation == VecZ{Int(1), Int(1), Int(1)});
  CHECK(report.kDegree == 3);
  CHECK(report.classification == WallClass::FIBER_TYPE);
  CHECK(report.kSign == KSign::K_NEGATIVE);
}

TEST_CASE("wall analysis on small contraction circuits", "[wall]") {
  SECTION("length one flop") {
    auto at = make_atiyah();
    auto report = wall_analysis(at.x, at.wall);
    CHECK(report.circuitRays == std::vector<int>{0, 1, 2, 3});
    CHECK(report.relation == VecZ{Int(-1), Int(-1), Int(1), Int(1)});
    CHECK(report.kDegree == 0);
    CHECK(report.classification == WallClass::FLIPPING);
    CHECK(report.kSign == KSign::K_TRIVIAL);
  }
  SECTION("length two flop") {
    auto fr = make_francia();
    auto report = wall_analysis(fr.x, fr.wall);
    CHECK(report.circuitRays == std::vector<int>{0, 3, 4, 1, 2});
    CHECK(report.relation == VecZ{Int(1), Int(-1), Int(-2), Int(1), Int(1)});
    CHECK(report.kDegree == 0);
    CHECK(report.classification == WallClass::FLIPPING);
    CHECK(report.kSign == KSign::K_TRIVIAL);
  }
  SECTION("asymmetric flips grade by the ray count difference") {
    auto f21 = make_flip(2, 1);
    auto r21 = wall_analysis(f21.x, f21.wall);
    CHECK(r21.classification == WallClass::FLIPPING);
    CHECK(r21.kDegree == 1);
    CHECK(r21.kSign == KSign::K_NEGATIVE);

    auto f31 = make_flip(3, 1);
    auto r31 = wall_analysis(f31.x, f31.wall);
    CHECK(r31.kDegree == 2);
    CHECK(r31.kSign == KSign::K_NEGATIVE);

    auto f22 = make_flip(2, 2);
    auto r22 = wall_analysis(f22.x, f22.wall);
    CHECK(r22.kDegree == 0);
    CHECK(r22.kSign == KSign::K_TRIVIAL);

    auto f11 = make_flip(1, 1);
    auto r11 = wall_analysis(f11.x, f11.wall);
    CHECK(r11.kDegree == 0);
    CHECK(r11.classification == WallClass::FLIPPING);
  }
}

TEST_CASE("wall analysis on quotient subdivisions", "[wall]") {
  SECTION("threefold half point extraction") {
    auto q = make_quot(3, 2);
    auto report = wall_analysis(q.x, {0, 3});
    CHECK(report.circuitRays == std::vector<int>{0, 3, 1, 2});
    CHECK(report.relation == VecZ{Int(1), Int(-2), Int(1), Int(1)});
    CHECK(report.kDegree == 1);
    CHECK(report.classification == WallClass::DIVISORIAL);
    CHECK(report.kSign == KSign::K_NEGATIVE);
  }
  SECTION("plane third point extraction") {
    auto q = make_quot(2, 3);
    auto report = wall_analysis(q.x, {2});
    CHECK(report.relation == VecZ{Int(-3), Int(1), Int(1)});
    CHECK(report.kDegree == -1);
    CHECK(report.classification == WallClass::DIVISORIAL);
    CHECK(report.kSign == KSign::K_POSITIVE);
  }
}

TEST_CASE("wall analysis rejects non-walls", "[wall]") {
  CHECK_THROWS_WITH(wall_analysis(quadrant_pair(), {0}), "not an interior wall");
  CHECK_THROWS_WITH(wall_analysis(make_blowup_origin_c2(), {0}), "not an interior wall");
  CHECK_THROWS_WITH(wall_analysis(make_blowup_origin_c2(), {9}), "not an interior wall");
  CHECK_THROWS_WITH(wall_analysis(make_blowup_origin_c2(), {0, 1}), "not an interior wall");
}

TEST_CASE("flips exchange the circuit triangulations", "[wall]") {
  SECTION("length one flop exchanges the diagonal") {
    auto at = make_atiyah();
    CHECK(at.y.fan.maxCones == std::vector<std::vector<int>>{{0, 2, 3}, {1, 2, 3}});
    CHECK(at.y.fan.rays == at.x.fan.rays);

    ToricPair back = perform_flip(at.y, {2, 3});
    CHECK(fan_equal(back.fan, at.x.fan));
  }
  SECTION("length two flop produces the multiplicity two chamber") {
    auto fr = make_francia();
    CHECK(fr.y.fan.maxCones == std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 1, 2, 4}});
    std::vector<Int> mults = cone_multiplicities(fr.y.fan);
    std::sort(mults.begin(), mults.end());
    CHECK(mults == std::vector<Int>{Int(1), Int(2)});

    ToricPair back = perform_flip(fr.y, {0, 1, 2});
    CHECK(fan_equal(back.fan, fr.x.fan));
  }
  SECTION("product circuit flips swap the omitted family") {
    for (auto [r, s] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
      auto f = make_flip(r, s);
      CHECK(f.y.fan.maxCones.size() == static_cast<size_t>(s) + 1);

      std::vector<int> wallY;
      for (int i = 0; i <= r; ++i) wallY.push_back(i);
      for (int j = 2; j <= s; ++j) wallY.push_back(r + 1 + j - 1);
      ToricPair back = perform_flip(f.y, wallY);
      CHECK(fan_equal(back.fan, f.x.fan));
    }
  }
  SECTION("boundary and rays are untouched") {
    auto at = make_atiyah();
    ToricPair withB = at.x;
    withB.coefficients[0] = Rat(1, 2);
    ToricPair flipped = perform_flip(withB, at.wall);
    CHECK(flipped.coefficients == withB.coefficients);
    CHECK(flipped.fan.rays == withB.fan.rays);
  }
}

TEST_CASE("flip rejections", "[wall]") {
  CHECK_THROWS_WITH(perform_flip(make_blowup_origin_c2(), {2}), "wall is not a flipping wall");
  CHECK_THROWS_WITH(perform_flip(make_projective_space(2), {0}), "wall is not a flipping wall");

  auto f21 = make_flip(2, 1);
  ToricPair truncated = f21.x;
  truncated.fan.maxCones.erase(
      std::find(truncated.fan.maxCones.begin(), truncated.fan.maxCones.end(),
                std::vector<int>{0, 1, 3, 4}));
  CHECK_THROWS_WITH(perform_flip(truncated, f21.wall), "flip region is not contained in the fan");
}

TEST_CASE("minimal model verdicts", "[wall]") {
  SECTION("crepant surface resolution is minimal over its quotient") {
    auto q = make_quot(2, 2);
    auto model = resolve(q.y).pair;
    auto mm = minimal_model_check(model, q.y);
    CHECK(mm.minimal);
    CHECK(mm.failures.empty());
  }
  SECTION("terminal pairs are minimal over themselves") {
    auto q = make_quot(3, 2);
    CHECK(minimal_model_check(q.y, q.y).minimal);
    CHECK(minimal_model_check(quadrant_pair(), quadrant_pair()).minimal);
  }
  SECTION("chain resolution with its crepant boundary is minimal") {
    auto q = make_quot(2, 4);
    auto model = resolve(q.y).pair;
    CHECK(minimal_model_check(model, q.y).minimal);
  }
  SECTION("a blow-up of the smooth plane is not minimal over it") {
    auto mm = minimal_model_check(make_blowup_origin_c2(), quadrant_pair());
    CHECK_FALSE(mm.minimal);
    REQUIRE(mm.failures.size() == 1);
    CHECK(mm.failures[0] == "wall {2} over the base is K-negative");
  }
  SECTION("non-terminal models fail") {
    auto q = make_quot(2, 2);
    auto mm = minimal_model_check(q.y, q.y);
    CHECK_FALSE(mm.minimal);
    CHECK(mm.failures == std::vector<std::string>{"model is not terminal"});
  }
  SECTION("model must refine the base") {
    auto mm = minimal_model_check(make_p1xp1(), make_projective_space(2));
    CHECK_FALSE(mm.minimal);
    REQUIRE_FALSE(mm.failures.empty());
    CHECK(mm.failures[0].find("is not contained in any base cone") != std::string::npos);
  }
  SECTION("support mismatch is an error") {
    CHECK_THROWS_WITH(minimal_model_check(quadrant_pair(), make_projective_space(2)),
                      "fans are not birational models of the same support");
    CHECK_THROWS_WITH(minimal_model_check(quadrant_pair(), make_projective_space(3)),
                      "pairs must have the same rank");
  }
}
