#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "glsm/toric.hpp"

using namespace glsm;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Degree deg1(const Rational& x) { return Degree{{x}}; }

}  // namespace

TEST(ConeContains, Examples) {
  EXPECT_TRUE(cone_contains(rv({1}), {rv({1}), rv({1})}));
  EXPECT_FALSE(cone_contains(rv({1, 1}), {rv({1, 0})}));
  EXPECT_FALSE(cone_contains(rv({1}), {rv({-5})}));
  EXPECT_TRUE(cone_contains(rv({1, 1}), {rv({2, 0}), rv({0, 3})}));
}

TEST(SemistableSupports, Examples) {
  EXPECT_EQ(semistable_supports(fixtures::p1()), (std::vector<SupportSet>{{0}, {1}}));
  EXPECT_EQ(semistable_supports(fixtures::quintic()), (std::vector<SupportSet>{{0}, {1}, {2}, {3}, {4}}));
  EXPECT_EQ(semistable_supports(fixtures::cubic()), (std::vector<SupportSet>{{1}}));
  EXPECT_EQ(semistable_supports(fixtures::rank2()), (std::vector<SupportSet>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(SemistableSupports, MinimalAndContainTheta) {
  for (const auto& m : {fixtures::p1(), fixtures::quintic(), fixtures::cubic(), fixtures::rank2()}) {
    for (const auto& s : semistable_supports(m)) {
      EXPECT_TRUE(cone_contains(m.theta, columns_of(m, s)));
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        SupportSet smaller;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) smaller.push_back(s[i]);
        EXPECT_FALSE(cone_contains(m.theta, columns_of(m, smaller)));
      }
    }
  }
}

TEST(InertiaSectors, Examples) {
  auto p1 = inertia_sectors(fixtures::p1());
  ASSERT_EQ(p1.size(), 1u);
  EXPECT_TRUE(p1[0].is_identity());

  auto cubic = inertia_sectors(fixtures::cubic());
  ASSERT_EQ(cubic.size(), 3u);
  EXPECT_EQ(cubic[0].lambda, (RationalVector{Rational(0)}));
  EXPECT_EQ(cubic[1].lambda, (RationalVector{Rational(1, 3)}));
  EXPECT_EQ(cubic[2].lambda, (RationalVector{Rational(2, 3)}));
  EXPECT_EQ(cubic[1].fixed_support, (SupportSet{1}));

  auto q = inertia_sectors(fixtures::quintic());
  ASSERT_EQ(q.size(), 1u);
  EXPECT_TRUE(q[0].is_identity());

  auto r2 = inertia_sectors(fixtures::rank2());
  ASSERT_EQ(r2.size(), 1u);
}

TEST(InertiaSectors, WeightedProjectiveLine) {
  // P(1,2): the point [0:1] has stabilizer mu_2
  auto m = parse_model(R"({"r":2,"k":1,"weights":[[1,2]],"r_charges":[0,0],"d_w":1,"theta":["1"]})");
  auto s = inertia_sectors(m);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].lambda, (RationalVector{Rational(1, 2)}));
  EXPECT_EQ(s[1].fixed_support, (SupportSet{1}));
}

TEST(SectorOfDegree, Examples) {
  EXPECT_TRUE(sector_of_degree(fixtures::p1(), deg1(0)).is_identity());
  auto g = sector_of_degree(fixtures::cubic(), deg1(Rational(-1, 3)));
  EXPECT_EQ(g.lambda, (RationalVector{Rational(1, 3)}));
  EXPECT_EQ(g.action, (RationalVector{Rational(1, 3), Rational(0)}));
  EXPECT_TRUE(sector_of_degree(fixtures::p1(), deg1(3)).is_identity());
}

TEST(Iota, Examples) {
  auto sectors = inertia_sectors(fixtures::cubic());
  EXPECT_EQ(iota(sectors[0], {7}), 0);
  EXPECT_EQ(iota(sectors[1], {1}), Rational(1, 3));
  EXPECT_EQ(iota(sectors[1], {-3}), 0);
}

TEST(Iota, AdditiveModOne) {
  auto sectors = inertia_sectors(fixtures::cubic());
  for (const auto& g : sectors)
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b) EXPECT_EQ(frac(iota(g, {a}) + iota(g, {b})), iota(g, {a + b}));
}

TEST(EffectiveDegrees, Examples) {
  std::vector<Degree> p1 = effective_degrees(fixtures::p1(), 2);
  EXPECT_EQ(p1, (std::vector<Degree>{deg1(0), deg1(1), deg1(2)}));
  auto cubic = effective_degrees(fixtures::cubic(), 1);
  EXPECT_EQ(cubic, (std::vector<Degree>{deg1(0), deg1(Rational(-1, 3)), deg1(Rational(-2, 3)), deg1(-1)}));
  auto q = effective_degrees(fixtures::quintic(), 2);
  EXPECT_EQ(q, (std::vector<Degree>{deg1(0), deg1(1), deg1(2)}));
}

TEST(EffectiveDegrees, Rank2) {
  auto m = fixtures::rank2();
  auto ds = effective_degrees(m, 2);
  // d = (a,b) with a,b >= 0 integers and a + b <= 2
  EXPECT_EQ(ds.size(), 6u);
  for (const auto& d : ds) {
    for (const auto& x : d.value) {
      EXPECT_TRUE(is_integer(x));
      EXPECT_GE(x, 0);
    }
  }
}

TEST(EffectiveDegrees, SectorsAreNonempty) {
  for (const auto& m : {fixtures::p1(), fixtures::quintic(), fixtures::cubic(), fixtures::rank2()}) {
    auto sectors = inertia_sectors(m);
    for (const auto& d : effective_degrees(m, 3)) {
      auto g = sector_of_degree(m, d);
      EXPECT_NE(std::find(sectors.begin(), sectors.end(), g), sectors.end());
    }
  }
}

TEST(EffectiveDegrees, SemigroupClosure) {
  for (const auto& m : {fixtures::p1(), fixtures::cubic(), fixtures::rank2()}) {
    Rational bound = 3;
    auto ds = effective_degrees(m, bound);
    auto supports = semistable_supports(m);
    auto certified_by = [&](const Degree& d, const SupportSet& s) {
      for (int i : s) {
        Rational v = d.pair(m.column(i));
        if (!is_integer(v) || v < 0) return false;
      }
      return true;
    };
    for (const auto& a : ds)
      for (const auto& b : ds) {
        Degree sum{a.value};
        for (std::size_t i = 0; i < sum.value.size(); ++i) sum.value[i] += b.value[i];
        if (theta_degree(m, sum) > bound) continue;
        for (const auto& s : supports)
          if (certified_by(a, s) && certified_by(b, s)) {
            EXPECT_NE(std::find(ds.begin(), ds.end(), sum), ds.end());
            break;
          }
      }
  }
}

TEST(EffectiveDegrees, UnboundedDirectionReported) {
  // theta on a single ray of a rank-2 model: the support does not span
  auto m = parse_model(R"({"r":2,"k":2,"weights":[[1,0],[0,1]],"r_charges":[0,0],"d_w":1,"theta":["1","0"]})");
  try {
    effective_degrees(m, 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("ray"), std::string::npos);
  }
}

TEST(SrGenerators, Examples) {
  auto p1 = fixtures::p1();
  EXPECT_EQ(sr_generators(p1, inertia_sectors(p1)[0]), (std::vector<SupportSet>{{0, 1}}));
  auto q = fixtures::quintic();
  EXPECT_EQ(sr_generators(q, inertia_sectors(q)[0]), (std::vector<SupportSet>{{0, 1, 2, 3, 4}}));
  auto c = fixtures::cubic();
  EXPECT_EQ(sr_generators(c, inertia_sectors(c)[1]), (std::vector<SupportSet>{{1}}));
  auto r2 = fixtures::rank2();
  EXPECT_EQ(sr_generators(r2, inertia_sectors(r2)[0]), (std::vector<SupportSet>{{0, 1}, {2, 3}}));
}

TEST(SrGenerators, EmptySectorRejected) {
  auto m = fixtures::p1();
  auto g = make_sector(m, {Rational(1, 2)});
  EXPECT_THROW(sr_generators(m, g), PreconditionError);
}
