#include <doctest.h>

#include <random>

#include "support/helpers.hpp"
#include "vcount/brute_force.hpp"

using namespace vcount;
using namespace vcount::testsupport;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("degenerate systems") {
  FiniteField f3 = FiniteField::make(3, 1);
  PolySystem empty{f3, 2, {}};
  CHECK(brute_force_count(empty) == 9);  // no constraints

  FiniteField f5 = FiniteField::make(5, 1);
  PolySystem line{f5, 2, {Polynomial{{PolyTerm{fq_one, {1, 0}}, PolyTerm{fq_one, {0, 1}}}}}};
  CHECK(brute_force_count(line) == 5);  // x1 + x2 = 0
}

TEST_CASE("the worked example counts 1438 points over F_7^6") {
  StaircaseSystem sys = example41();
  OracleConfig cfg;
  cfg.partitions = 4;
  CHECK(brute_force_count(to_poly_system(sys), cfg) == 1438);
}

TEST_CASE("evaluate agrees with index arithmetic") {
  FiniteField f = FiniteField::make(7, 1);
  Polynomial mono{{PolyTerm{f.from_integer(1), {1, 4}}}};
  std::vector<Fq> point{Fq{3}, Fq{6}};
  Fq direct = evaluate(f, mono, point);
  // exponent route: ind(3) + 4*ind(6) = 1 + 12 = 13 = 1 (mod 6), so alpha^1 = 3
  std::uint64_t ind = (f.index_of(Fq{3}) + 4 * f.index_of(Fq{6})) % (f.q() - 1);
  CHECK(direct == f.element_at(ind));
  CHECK(direct == Fq{3});

  SUBCASE("a zero coordinate in the support kills the monomial") {
    std::vector<Fq> zpoint{fq_zero, Fq{6}};
    CHECK(evaluate(f, mono, zpoint) == fq_zero);
  }
  SUBCASE("constant-only polynomial") {
    Polynomial constant{{PolyTerm{f.from_integer(-4), {0, 0}}}};
    CHECK(evaluate(f, constant, point) == f.from_integer(-4));
    std::vector<Fq> zz{fq_zero, fq_zero};
    CHECK(evaluate(f, constant, zz) == f.from_integer(3));
  }
  SUBCASE("dimension mismatch is loud") {
    std::vector<Fq> bad{Fq{3}};
    CHECK(thrown_code([&] { evaluate(f, mono, bad); }) == Errc::dimension_mismatch);
  }
}

TEST_CASE("budget guard reports the required sweep size") {
  StaircaseSystem sys = example41();
  OracleConfig cfg;
  cfg.max_points = 1000;  // 7^6 = 117649 does not fit
  try {
    brute_force_count(to_poly_system(sys), cfg);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
    CHECK(std::string(e.what()).find("117649") != std::string::npos);
  }
}

TEST_CASE("partition independence") {
  std::mt19937_64 rng(4242);
  FiniteField f5 = FiniteField::make(5, 1);
  for (int iter = 0; iter < 10; ++iter) {
    StaircaseSystem sys = random_staircase(rng, f5, CaseLabel::n1_n3_n2_n4, {false, false});
    PolySystem ps = to_poly_system(sys);
    OracleConfig one{100'000'000, 1};
    OracleConfig three{100'000'000, 3};
    OracleConfig seven{100'000'000, 7};
    Int a = brute_force_count(ps, one);
    REQUIRE(a == brute_force_count(ps, three));
    REQUIRE(a == brute_force_count(ps, seven));
  }
}

TEST_CASE("adding an equation never increases the count") {
  std::mt19937_64 rng(777);
  FiniteField f3 = FiniteField::make(3, 1);
  for (int iter = 0; iter < 20; ++iter) {
    PolySystem ps{f3, 3, {}};
    auto random_poly = [&] {
      Polynomial poly;
      int terms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < terms; ++t) {
        PolyTerm pt;
        pt.coef = Fq{static_cast<std::uint32_t>(rnd(rng, 0, 2))};
        pt.exponents = {static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                        static_cast<std::uint32_t>(rng() % 3)};
        poly.terms.push_back(pt);
      }
      return poly;
    };
    ps.polys.push_back(random_poly());
    Int before = brute_force_count(ps);
    ps.polys.push_back(random_poly());
    REQUIRE(brute_force_count(ps) <= before);
  }
}

TEST_CASE("fibers over f2 = b partition the f1 = 0 slice") {
  std::mt19937_64 rng(31);
  FiniteField f5 = FiniteField::make(5, 1);
  StaircaseSystem sys = random_staircase(rng, f5, CaseLabel::n2_eq_n3, {false, false});
  PolySystem both = to_poly_system(sys);
  PolySystem only_f1{f5, both.nvars, {both.polys[0]}};
  Int total = 0;
  for (std::uint32_t b = 0; b < 5; ++b) {
    StaircaseSystem fiber = sys;
    fiber.b2 = Fq{b};
    total += brute_force_count(to_poly_system(fiber));
  }
  CHECK(total == brute_force_count(only_f1));
}

TEST_SUITE_END();
