#include <doctest.h>

#include <random>
#include <set>

#include "support/helpers.hpp"
#include "vcount/level_count.hpp"

using namespace vcount;
using namespace vcount::testsupport;

namespace {

// Exhaustive route for H: count affine tuples u for which the monomial system
// x^(E-row) = u_row actually has a torus solution, by trying every x.
Int monomial_route_h(const StaircaseSystem& sys, const StaircaseShape& shape, int level) {
  LevelInstance inst = build_level_instance(sys, shape, level);
  if (!inst.consistent) return 0;
  const FiniteField& f = sys.field;
  const int cutoff = inst.cutoff;
  const Eigen::Index rows = inst.deletion.rows();

  // collect the attainable monomial-value vectors
  std::set<std::vector<std::uint32_t>> attainable;
  std::vector<std::uint32_t> x(static_cast<std::size_t>(cutoff), 1);
  while (true) {
    std::vector<std::uint32_t> value(static_cast<std::size_t>(rows));
    for (Eigen::Index r = 0; r < rows; ++r) {
      Fq acc = fq_one;
      for (int j = 0; j < cutoff; ++j)
        acc = f.mul(acc, f.pow(Fq{x[static_cast<std::size_t>(j)]},
                               inst.deletion(r, j).get_ui()));
      value[static_cast<std::size_t>(r)] = acc.v;
    }
    attainable.insert(value);
    int j = 0;
    while (j < cutoff) {
      if (++x[static_cast<std::size_t>(j)] < f.q()) break;
      x[static_cast<std::size_t>(j)] = 1;
      ++j;
    }
    if (j == cutoff) break;
  }

  // stream affine tuples and keep the attainable ones
  std::vector<std::vector<std::vector<Fq>>> per_eq;
  for (const LevelEquation& eq : inst.equations) {
    std::vector<std::vector<Fq>> sols;
    for_each_hyperplane_point({eq.coeffs, eq.rhs}, f,
                              [&](std::span<const Fq> t) { sols.emplace_back(t.begin(), t.end()); });
    if (sols.empty()) return 0;
    per_eq.push_back(std::move(sols));
  }
  Int h = 0;
  std::vector<std::size_t> pick(per_eq.size(), 0);
  while (true) {
    std::vector<std::uint32_t> u;
    for (std::size_t e = 0; e < per_eq.size(); ++e)
      for (Fq v : per_eq[e][pick[e]]) u.push_back(v.v);
    if (attainable.count(u)) h += 1;
    std::size_t e = 0;
    while (e < per_eq.size()) {
      if (++pick[e] < per_eq[e].size()) break;
      pick[e] = 0;
      ++e;
    }
    if (e == per_eq.size()) break;
  }
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("hcount");

TEST_CASE("level instances of the worked example") {
  StaircaseSystem sys = example41();
  StaircaseShape s = staircase_shape(sys);

  SUBCASE("level 1 strands b2 and is inconsistent here") {
    LevelInstance l1 = build_level_instance(sys, s, 1);
    CHECK(l1.requires_b2_zero);
    CHECK_FALSE(l1.consistent);  // b2 = 4 != 0
    CHECK(l1.equations.size() == 1);
    CHECK(l1.equations[0].coeffs.size() == 2);
    CHECK(compute_h(l1, sys.field) == 0);
  }
  SUBCASE("level 3 keeps both equations with two terms each") {
    LevelInstance l3 = build_level_instance(sys, s, 3);
    CHECK(l3.consistent);
    REQUIRE(l3.equations.size() == 2);
    CHECK(l3.equations[0].coeffs.size() == 2);
    CHECK(l3.equations[1].coeffs.size() == 2);
    CHECK(l3.equations[0].rhs == Fq{2});
    CHECK(l3.equations[1].rhs == Fq{4});
    CHECK(compute_h(l3, sys.field) == 4);  // H3
  }
  SUBCASE("level 2 keeps three terms of equation 1") {
    LevelInstance l2 = build_level_instance(sys, s, 2);
    REQUIRE(l2.equations.size() == 2);
    CHECK(l2.equations[0].coeffs.size() == 3);
    CHECK(l2.equations[1].coeffs.size() == 2);
    CHECK(compute_h(l2, sys.field) == 9);  // H2
  }
  SUBCASE("level 4 keeps everything") {
    LevelInstance l4 = build_level_instance(sys, s, 4);
    REQUIRE(l4.equations.size() == 2);
    CHECK(l4.equations[0].coeffs.size() == 3);
    CHECK(l4.equations[1].coeffs.size() == 3);
    CHECK(compute_h(l4, sys.field) == 84);  // H4
  }
}

TEST_CASE("published L values") {
  StaircaseSystem sys = example41();
  StaircaseShape s = staircase_shape(sys);
  auto l_of = [&](int level) {
    LevelInstance inst = build_level_instance(sys, s, level);
    return compute_l(inst, compute_h(inst, sys.field), sys.field);
  };
  CHECK(l_of(2) == 18);    // 9 * 6^0 * (1*1*1*gcd(6,4))
  CHECK(l_of(3) == 4);     // 4 * 6^0 * 1
  CHECK(l_of(4) == 1008);  // 84 * 6 * 2
}

TEST_CASE("fast path equals the literal filter route") {
  std::mt19937_64 rng(606);
  for (auto q : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    FiniteField f = FiniteField::make(q.first, q.second);
    for (int c = 0; c < 8; ++c) {
      for (int iter = 0; iter < 6; ++iter) {
        StaircaseSystem sys = random_staircase(rng, f, static_cast<CaseLabel>(c),
                                               {iter % 2 == 0, iter % 3 != 0});
        StaircaseShape s = staircase_shape(sys);
        for (int level = 1; level <= 4; ++level) {
          LevelInstance inst = build_level_instance(sys, s, level);
          REQUIRE(compute_h(inst, f) == reference_h(inst, f));
        }
      }
    }
  }
}

TEST_CASE("H equals the monomial-solvability count at small sizes") {
  std::mt19937_64 rng(909);
  for (auto q : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {7, 1}}) {
    FiniteField f = FiniteField::make(q.first, q.second);
    int done = 0;
    while (done < 8) {
      int c = static_cast<int>(rng() % 8);
      StaircaseSystem sys =
          random_staircase(rng, f, static_cast<CaseLabel>(c), {done % 2 == 0, done % 3 == 0});
      StaircaseShape s = staircase_shape(sys);
      for (int level = 1; level <= 4; ++level) {
        if (level_cutoff(s, level) > 3) continue;  // keep the exhaustion cheap
        LevelInstance inst = build_level_instance(sys, s, level);
        REQUIRE(compute_h(inst, f) == monomial_route_h(sys, s, level));
      }
      ++done;
    }
  }
}

TEST_CASE("a single-term equation with zero rhs forces H = 0") {
  // r1 = 1 and b1 = 0: at level 1 the surviving constraint is a_11 u_11 = 0,
  // which has no torus solution.
  StaircaseSystem sys;
  sys.field = FiniteField::make(5, 1);
  sys.coeffs1 = {Fq{2}, Fq{1}};
  sys.coeffs2 = {Fq{1}, Fq{3}};
  sys.exps1 = make_mat({{2, 0, 0}, {1, 3, 0}});
  sys.exps2 = make_mat({{1, 1, 0}, {1, 1, 2}});
  sys.b1 = fq_zero;
  sys.b2 = fq_zero;
  StaircaseShape s = staircase_shape(sys);
  REQUIRE(s.r1 == 1);
  REQUIRE(s.n1 == 1);
  LevelInstance l1 = build_level_instance(sys, s, 1);
  CHECK(l1.consistent);
  REQUIRE(l1.equations.size() == 1);
  CHECK(l1.equations[0].coeffs.size() == 1);
  CHECK(compute_h(l1, sys.field) == 0);
}

TEST_CASE("enumeration cost estimate matches the instance sizes") {
  StaircaseSystem sys = example41();
  StaircaseShape s = staircase_shape(sys);
  const Int q = 7;
  // level 4 keeps 3 + 3 terms: cost 6^2 * 6^2
  CHECK(level_enumeration_cost(s, 4, q) == 36 * 36);
  // level 1 keeps only the two low-block terms of equation 1
  CHECK(level_enumeration_cost(s, 1, q) == 6);
  for (int l = 1; l <= 4; ++l) {
    LevelInstance inst = build_level_instance(sys, s, l);
    Int expect = 1;
    for (const auto& eq : inst.equations)
      expect *= int_pow(q - 1, static_cast<unsigned long>(eq.coeffs.size() - 1));
    CHECK(level_enumeration_cost(s, l, q) == expect);
  }
}

TEST_CASE("H is independent of the primitive element") {
  std::mt19937_64 rng(1212);
  for (auto q : {std::pair<std::uint64_t, unsigned>{5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    FiniteField f = FiniteField::make(q.first, q.second);
    for (int iter = 0; iter < 3; ++iter) {
      StaircaseSystem sys = random_staircase(rng, f, static_cast<CaseLabel>(iter % 8),
                                             {iter % 2 == 0, iter % 2 != 0});
      StaircaseShape s = staircase_shape(sys);
      for (int level = 1; level <= 4; ++level) {
        LevelInstance base = build_level_instance(sys, s, level);
        Int expected = compute_h(base, sys.field);
        for (Fq g : sys.field.generators()) {
          StaircaseSystem alt = sys;
          alt.field = sys.field.with_primitive_element(g);
          LevelInstance inst = build_level_instance(alt, s, level);
          REQUIRE(compute_h(inst, alt.field) == expected);
        }
      }
    }
  }
}

TEST_CASE("H is bounded by the unfiltered affine count") {
  std::mt19937_64 rng(4004);
  FiniteField f = FiniteField::make(7, 1);
  for (int iter = 0; iter < 20; ++iter) {
    StaircaseSystem sys = random_staircase(rng, f, static_cast<CaseLabel>(iter % 8),
                                           {iter % 2 == 0, iter % 3 == 0});
    StaircaseShape s = staircase_shape(sys);
    for (int level = 1; level <= 4; ++level) {
      LevelInstance inst = build_level_instance(sys, s, level);
      if (!inst.consistent) continue;
      Int bound = 1;
      for (const LevelEquation& eq : inst.equations)
        bound *= hyperplane_count(static_cast<unsigned>(eq.coeffs.size()), eq.rhs == fq_zero,
                                  f.q());
      Int h = compute_h(inst, f);
      REQUIRE(h >= 0);
      REQUIRE(h <= bound);
      bool all_trivial = inst.dec.rank() == inst.deletion.rows();
      for (const Int& d : inst.dec.factors)
        all_trivial = all_trivial && int_gcd(Int(static_cast<unsigned long>(f.q() - 1)), d) == 1;
      if (all_trivial) REQUIRE(h == bound);
    }
  }
}

TEST_SUITE_END();
