#include <catch2/catch_amalgamated.hpp>
#include <kfan/corpus.hpp>
#include <kfan/stringy.hpp>

#include "random_pairs.hpp"
#include "test_util.hpp"

using namespace kfan;
using namespace kfan::testutil;

namespace {

Poly rand_poly(std::mt19937_64& rng, int maxDeg) {
  int d = static_cast<int>(rand_int(rng, 0, maxDeg));
  Poly p(d + 1);
  for (auto& c : p) c = rand_int(rng, -4, 4);
  poly_trim(p);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic", "[groth]") {
  Poly a = {Int(1), Int(2)};        // 2L + 1
  Poly b = {Int(-1), Int(0), Int(1)};  // L^2 - 1
  CHECK(poly_add(a, b) == Poly{Int(0), Int(2), Int(1)});
  CHECK(poly_sub(b, b).empty());
  CHECK(poly_mul(a, b) == Poly{Int(-1), Int(-2), Int(1), Int(2)});
  CHECK(poly_pow(Poly{Int(-1), Int(1)}, 2) == Poly{Int(1), Int(-2), Int(1)});
  CHECK(poly_pow(b, 0) == poly_const(1));
  CHECK(poly_deg(b) == 2);
  CHECK(poly_content(Poly{Int(-4), Int(6)}) == 2);

  CHECK(poly_stretch(a, 3) == Poly{Int(1), Int(0), Int(0), Int(2)});
  CHECK(poly_compress(poly_stretch(b, 5), 5) == b);
  CHECK(poly_exponent_gcd(Poly{Int(1), Int(0), Int(1), Int(0), Int(1)}, 0) == 2);
  CHECK(poly_exponent_gcd(poly_const(7), 0) == 0);
}

TEST_CASE("polynomial gcd and exact division", "[groth]") {
  Poly lMinus1 = {Int(-1), Int(1)};
  Poly lPlus1 = {Int(1), Int(1)};
  Poly lSqMinus1 = {Int(-1), Int(0), Int(1)};

  CHECK(poly_gcd(lSqMinus1, lMinus1) == lMinus1);
  CHECK(poly_gcd(poly_mul(lMinus1, lMinus1), poly_mul(lMinus1, lPlus1)) == lMinus1);
  CHECK(poly_gcd(lPlus1, lMinus1) == poly_const(1));
  CHECK(poly_gcd(Poly{}, lPlus1) == lPlus1);
  CHECK(poly_div_exact(lSqMinus1, lMinus1) == lPlus1);
  CHECK(poly_div_exact(lSqMinus1, lPlus1) == lMinus1);

  auto rng = make_rng(5150);
  for (int t = 0; t < 150; ++t) {
    Poly p = rand_poly(rng, 4);
    Poly q = rand_poly(rng, 4);
    if (poly_is_zero(q)) continue;
    CHECK(poly_div_exact(poly_mul(p, q), q) == p);
    if (poly_is_zero(p)) continue;
    Poly g = poly_gcd(p, q);
    REQUIRE_FALSE(poly_is_zero(g));
    CHECK(poly_mul(poly_div_exact(p, g), g) == p);
    CHECK(poly_mul(poly_div_exact(q, g), g) == q);
    CHECK(g.back() > 0);
    CHECK(poly_content(g) == 1);
  }
}

TEST_CASE("class canonical form", "[groth]") {
  Poly lMinus1 = {Int(-1), Int(1)};
  Poly lPlus1 = {Int(1), Int(1)};

  SECTION("fractions reduce") {
    GrothClass q = groth_fraction(1, Poly{Int(-1), Int(0), Int(1)}, lMinus1);
    CHECK(groth_equal(q, groth_from_poly(lPlus1)));
    CHECK(groth_to_string(q) == "L + 1");

    GrothClass inv = groth_fraction(1, lMinus1, Poly{Int(-1), Int(0), Int(1)});
    CHECK(groth_to_string(inv) == "(1)/(L + 1)");
  }
  SECTION("content cancels across the bar") {
    GrothClass q = groth_fraction(1, Poly{Int(2), Int(2)}, poly_const(2));
    CHECK(groth_equal(q, groth_from_poly(lPlus1)));
  }
  SECTION("denominator sign is normalized") {
    GrothClass q = groth_fraction(1, lPlus1, poly_const(-1));
    CHECK(q.denominator == poly_const(1));
    CHECK(groth_to_string(q) == "-L - 1");
  }
  SECTION("root indices compress") {
    GrothClass sq = groth_fraction(2, poly_monomial(1, 2), poly_const(1));
    CHECK(sq.rootIndex == 1);
    CHECK(groth_to_string(sq) == "L");

    GrothClass odd = groth_fraction(2, poly_monomial(1, 3), poly_const(1));
    CHECK(odd.rootIndex == 2);
    CHECK(groth_to_string(odd) == "t^3 where L = t^2");

    GrothClass constant = groth_fraction(6, poly_const(5), poly_const(1));
    CHECK(constant.rootIndex == 1);
    CHECK(groth_to_string(constant) == "5");
  }
  SECTION("zero collapses") {
    GrothClass z = groth_fraction(4, Poly{}, lPlus1);
    CHECK(groth_equal(z, groth_zero()));
    CHECK(groth_to_string(z) == "0");
  }
}

TEST_CASE("class arithmetic across roots", "[groth]") {
  GrothClass half = groth_fraction(2, poly_monomial(1, 1), poly_const(1));  // t with L = t^2
  CHECK(groth_equal(groth_mul(half, half), groth_L_power(1)));

  GrothClass sum = groth_add(half, groth_int(1));
  CHECK(groth_to_string(sum) == "t + 1 where L = t^2");
  CHECK(groth_equal(groth_sub(sum, half), groth_int(1)));

  GrothClass third = groth_fraction(3, poly_monomial(1, 1), poly_const(1));
  GrothClass prod = groth_mul(half, third);  // t^5 at root 6
  CHECK(prod.rootIndex == 6);
  CHECK(groth_equal(groth_mul(prod, prod),
                    groth_mul(groth_L_power(1), groth_mul(third, third))));

  auto rng = make_rng(6001);
  for (int t = 0; t < 80; ++t) {
    GrothClass a = groth_fraction(static_cast<long long>(rand_int(rng, 1, 3)), rand_poly(rng, 3),
                                  poly_const(1));
    GrothClass b = groth_fraction(static_cast<long long>(rand_int(rng, 1, 3)), rand_poly(rng, 3),
                                  poly_const(1));
    CHECK(groth_equal(groth_add(a, b), groth_add(b, a)));
    CHECK(groth_equal(groth_mul(a, b), groth_mul(b, a)));
    CHECK(groth_equal(groth_sub(groth_add(a, b), b), groth_canonical(a)));
  }
}

TEST_CASE("fan classes of the corpus", "[groth]") {
  CHECK(groth_equal(class_of_fan(make_projective_space(2).fan), projective_space_class(2)));
  CHECK(groth_to_string(projective_space_class(2)) == "L^2 + L + 1");
  CHECK(groth_equal(class_of_fan(make_affine_space(3).fan), groth_L_power(3)));
  CHECK(groth_to_string(class_of_fan(make_blowup_origin_c2().fan)) == "L^2 + L");
  CHECK(groth_to_string(class_of_fan(make_p1xp1().fan)) == "L^2 + 2*L + 1");
  CHECK(groth_equal(class_of_fan(make_point().fan), groth_int(1)));
  CHECK(groth_to_string(class_of_fan(make_francia().x.fan)) == "L^4 + L^3 + L^2");

  auto sub = stellar_subdivision_at(make_projective_space(2), {Int(1), Int(1)});
  CHECK(groth_equal(class_of_fan(sub.pair.fan),
                    groth_add(projective_space_class(2), groth_L_power(1))));
}

TEST_CASE("strata classes on a marked blow-up", "[groth]") {
  ToricPair bl = make_blowup_origin_c2();
  bl.coefficients[2] = 0;

  CHECK(groth_to_string(strata_class(bl, {2})) == "L + 1");
  CHECK(groth_to_string(strata_class(bl, {})) == "L^2 - 1");
  CHECK(groth_equal(groth_add(strata_class(bl, {2}), strata_class(bl, {})),
                    class_of_fan(bl.fan)));

  CHECK_THROWS_WITH(strata_class(bl, {0}), "stratum index is not a carried ray");
  CHECK_THROWS_WITH(strata_class(make_quot(2, 2).y, {}),
                    "stringy strata require a smooth model; call resolve first");
}

TEST_CASE("stringy classes on frozen pairs", "[groth]") {
  SECTION("boundary-free smooth pairs reproduce the fan class") {
    for (const ToricPair& p : {make_affine_space(2), make_projective_space(3), make_p1xp1()})
      CHECK(groth_equal(stringy_invariant(p), class_of_fan(p.fan)));
  }
  SECTION("explicit zero coefficients change nothing") {
    ToricPair bl = make_blowup_origin_c2();
    ToricPair marked = bl;
    marked.coefficients[0] = 0;
    marked.coefficients[2] = 0;
    CHECK(groth_equal(stringy_invariant(marked), stringy_invariant(bl)));
  }
  SECTION("minus one discrepancy cancels the exceptional curve") {
    ToricPair bl = make_blowup_origin_c2();
    bl.coefficients[2] = -1;
    CHECK(groth_to_string(stringy_invariant(bl)) == "L^2");
  }
  SECTION("half boundary on an axis") {
    ToricPair half = make_affine_space(2);
    half.coefficients[0] = Rat(1, 2);
    CHECK(groth_to_string(stringy_invariant(half)) == "t^4 + t^3 where L = t^2");
  }
  SECTION("quotient singularities resolve internally") {
    CHECK(groth_to_string(stringy_invariant(make_quot(2, 2).y)) == "L^2 + L");
    CHECK(groth_to_string(stringy_invariant(make_quot(2, 4).y)) ==
          "t^4 + t^3 + t^2 + t where L = t^2");
    CHECK(groth_to_string(stringy_invariant(make_quot(3, 3).y)) == "L^3 + L^2 + L");
  }
  SECTION("flops share the stringy class") {
    auto at = make_atiyah();
    CHECK(groth_equal(stringy_invariant(at.x), stringy_invariant(at.y)));
    auto fr = make_francia();
    CHECK(groth_equal(stringy_invariant(fr.x), stringy_invariant(fr.y)));
  }
  SECTION("resolution strategy does not matter") {
    auto rng = make_rng(7007);
    for (int t = 0; t < 6; ++t) {
      ToricPair y = random_quotient_pair(rng, 3, 10);
      CHECK(groth_equal(stringy_invariant(y, ResolveStrategy::MinPhi),
                        stringy_invariant(y, ResolveStrategy::MaxMult)));
    }
  }
  SECTION("complete fans have top degree equal to the rank") {
    for (int n : {1, 2, 3}) {
      GrothClass s = stringy_invariant(make_projective_space(n));
      CHECK(s.rootIndex == 1);
      CHECK(s.denominator == poly_const(1));
      CHECK(poly_deg(s.numerator) == n);
      CHECK(s.numerator.back() == 1);
    }
  }
}

TEST_CASE("stringy classes respect star subdivision", "[groth]") {
  auto rng = make_rng(8088);
  int done = 0;
  while (done < 25) {
    ToricPair p = random_smooth_pair(rng, 4);
    const auto& cones = p.fan.maxCones;
    const auto& cone =
        cones[static_cast<size_t>(rand_int(rng, 0, static_cast<long long>(cones.size()) - 1))];
    if (cone.size() < 2) continue;
    int take = 2 + static_cast<int>(rand_int(rng, 0, static_cast<long long>(cone.size()) - 2));
    std::vector<int> center(cone.begin(), cone.begin() + take);

    VecZ sum(p.fan.rank, Int(0));
    for (int i : center) sum = vec_add(sum, p.fan.rays[i]);
    if (vec_content(sum) != 1) continue;

    auto sub = star_subdivision(p, center);
    CHECK(groth_equal(stringy_invariant(sub.pair), stringy_invariant(p)));
    ++done;
  }
}
