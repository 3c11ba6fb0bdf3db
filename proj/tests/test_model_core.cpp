#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "glsm/cyclotomic.hpp"
#include "glsm/validate.hpp"
#include "oracles.hpp"

using namespace glsm;

namespace {

bool has_check(const ValidationReport& rep, const std::string& name, bool passed) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.passed == passed;
  return false;
}

GLSMModel simple(IntMatrix q, IntVector c, long dw, RationalVector theta) {
  GLSMModel m;
  m.k = static_cast<int>(q.size());
  m.r = static_cast<int>(q[0].size());
  m.weights = std::move(q);
  m.r_charges = std::move(c);
  m.d_w = dw;
  m.theta = std::move(theta);
  m.variable_names = default_variable_names(m.r);
  return m;
}

}  // namespace

TEST(Rational, ParseStrict) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("2/4"), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(Cyclotomic, RootsOfUnity) {
  // zeta_2 = -1 demotes to a rational
  auto minus_one = ExactScalar::exp_pi_i(Rational(1));
  ASSERT_TRUE(minus_one.is_rational());
  EXPECT_EQ(minus_one.rational(), -1);
  // zeta_3 is not rational, zeta_3^3 = 1, 1 + zeta_3 + zeta_3^2 = 0
  ExactScalar z3(Cyclotomic::root_power(3, 1));
  EXPECT_FALSE(z3.is_rational());
  EXPECT_TRUE((z3 * z3 * z3).is_one());
  EXPECT_TRUE((ExactScalar(1) + z3 + z3 * z3).is_zero());
  // mixing fields: zeta_4^2 = zeta_2
  ExactScalar i4(Cyclotomic::root_power(4, 1));
  EXPECT_EQ(i4 * i4, ExactScalar(-1));
  ExactScalar z12 = z3 * i4;
  EXPECT_EQ(z12.cyclotomic().order(), 12);
  EXPECT_EQ(ExactScalar::exp_pi_i(Rational(1, 6)) * ExactScalar::exp_pi_i(Rational(1, 6)) * ExactScalar::exp_pi_i(Rational(1, 6)),
            i4);
}

TEST(SmithForm, DecompositionHolds) {
  BigMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 6, 12}));
  // U A V = D
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Integer v = 0;
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q) v += s.U[i][p] * a[p][q] * s.V[q][j];
      EXPECT_EQ(v, i == j ? s.diagonal[i] : Integer(0));
    }
}

TEST(ParseModel, Quintic) {
  auto m = fixtures::quintic();
  EXPECT_EQ(m.r, 6);
  EXPECT_EQ(m.k, 1);
  EXPECT_EQ(m.weights, (IntMatrix{{1, 1, 1, 1, 1, -5}}));
  EXPECT_EQ(m.theta, (RationalVector{Rational(1)}));
  ASSERT_TRUE(m.potential.has_value());
  EXPECT_EQ(m.potential->terms().size(), 5u);
}

TEST(ParseModel, P1) {
  auto m = fixtures::p1();
  EXPECT_EQ(m.r, 2);
  EXPECT_FALSE(m.potential.has_value());
}

TEST(ParseModel, DimensionMismatch) {
  try {
    parse_model(R"({"r": 2, "k": 1, "weights": [[1,1]], "r_charges": [0,0,0], "d_w": 1, "theta": ["1"]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("dimension mismatch"), std::string::npos);
  }
}

TEST(ParseModel, SyntaxErrorHasPosition) {
  try {
    parse_model("{\"r\": 2,\n \"k\": }");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseModel, BadRationals) {
  EXPECT_THROW(parse_model(R"({"r": 2, "k": 1, "weights": [[1,1]], "r_charges": [0,0], "d_w": 1, "theta": ["2/2"]})"), InputError);
  EXPECT_THROW(parse_model(R"({"r": 2, "k": 1, "weights": [[1,1]], "r_charges": [0,0], "d_w": 1, "theta": ["1/0"]})"), InputError);
}

TEST(ParseModel, PotentialGrammar) {
  auto p = parse_polynomial("-3/2*x1^2*x2 + x2 - x2 + 4", {"x1", "x2"});
  auto terms = p.terms();
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_THROW(parse_polynomial("x1 + + x3", {"x1", "x2"}), InputError);
  EXPECT_THROW(parse_polynomial("x1^", {"x1"}), InputError);
}

TEST(ParseModel, RoundTrip) {
  for (const auto& m : {fixtures::quintic(), fixtures::p1(), fixtures::cubic(), fixtures::rank2()}) {
    auto text = serialize_model(m);
    EXPECT_EQ(parse_model(text), m);
    EXPECT_EQ(serialize_model(parse_model(text)), text);
  }
}

TEST(Validate, QuinticPasses) {
  auto rep = validate_model(fixtures::quintic());
  EXPECT_TRUE(rep.overall());
  for (const auto& w : rep.warnings) EXPECT_TRUE(w.passed) << w.name << ": " << w.detail;
}

TEST(Validate, P1PassesWithSkippedPotential) {
  auto rep = validate_model(fixtures::p1());
  EXPECT_TRUE(rep.overall());
  bool noted = false;
  for (const auto& c : rep.checks)
    if (c.name == "potential") noted = c.detail.find("skipped") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Validate, JMembershipFailure) {
  auto rep = validate_model(simple({{2, 2}}, {1, 0}, 2, {Rational(1)}));
  EXPECT_FALSE(rep.overall());
  EXPECT_TRUE(has_check(rep, "j_membership", false));
}

TEST(Validate, RChargeBoundsAndFaithfulness) {
  EXPECT_TRUE(has_check(validate_model(simple({{1, 1}}, {3, 0}, 2, {Rational(1)})), "r_charge_bounds", false));
  EXPECT_TRUE(has_check(validate_model(simple({{2, 2}}, {0, 0}, 1, {Rational(1)})), "faithfulness", false));
  EXPECT_TRUE(has_check(validate_model(fixtures::cubic()), "faithfulness", true));
}

TEST(JMembership, Examples) {
  auto q = j_membership(fixtures::quintic());
  EXPECT_TRUE(q.is_member);
  EXPECT_EQ(*q.witness, (RationalVector{Rational(0)}));
  EXPECT_EQ(q.order, 1);

  auto c = j_membership(fixtures::cubic());
  EXPECT_TRUE(c.is_member);
  EXPECT_EQ(*c.witness, (RationalVector{Rational(1, 3)}));
  EXPECT_EQ(c.order, 3);

  auto bad = j_membership(simple({{2, 2}}, {1, 0}, 2, {Rational(1)}));
  EXPECT_FALSE(bad.is_member);
  EXPECT_FALSE(bad.witness.has_value());
}

TEST(JMembership, WitnessActsAsJ) {
  for (const auto& m : {fixtures::quintic(), fixtures::cubic(), fixtures::rank2()}) {
    auto j = j_membership(m);
    ASSERT_TRUE(j.is_member);
    for (int i = 0; i < m.r; ++i) EXPECT_EQ(frac(dot(*j.witness, m.column(i))), frac(make_rational(m.r_charges[i], m.d_w)));
  }
}

TEST(PotentialCheck, Examples) {
  EXPECT_TRUE(potential_check(fixtures::quintic()).overall());
  EXPECT_TRUE(potential_check(fixtures::cubic()).overall());
  auto m = fixtures::quintic();
  m.potential = parse_polynomial("p*x1^5+p*x2^5+p*x3^5+p*x4^5+p*x5^5+x1^2", m.variable_names);
  auto rep = potential_check(m);
  EXPECT_FALSE(rep.overall());
  EXPECT_TRUE(has_check(rep, "potential_homogeneity[x1^2]", false));
}

TEST(NoStrictSemistable, Examples) {
  EXPECT_TRUE(no_strict_semistable(fixtures::p1()));
  EXPECT_TRUE(no_strict_semistable(fixtures::quintic()));
  EXPECT_FALSE(no_strict_semistable(simple({{1, 0, 1}, {0, 1, 1}}, {0, 0, 0}, 1, {Rational(1), Rational(1)})));
  EXPECT_TRUE(no_strict_semistable(fixtures::rank2()));
}

TEST(NoStrictSemistable, RescalingInvariance) {
  auto m = simple({{1, 0, 1}, {0, 1, 1}}, {0, 0, 0}, 1, {Rational(1), Rational(2)});
  for (const Rational& s : {Rational(1, 3), Rational(5), Rational(7, 2)}) {
    auto scaled = m;
    for (auto& x : scaled.theta) x *= s;
    EXPECT_EQ(no_strict_semistable(scaled), no_strict_semistable(m));
  }
}

TEST(InvariantsTrivial, Examples) {
  EXPECT_TRUE(invariants_trivial(fixtures::quintic(), {0, 1, 2, 3, 4}, false).trivial);
  auto r = invariants_trivial(simple({{1, -1}}, {0, 0}, 1, {Rational(1)}), {0, 1}, false);
  EXPECT_FALSE(r.trivial);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(*r.certificate, (std::vector<Integer>{1, 1}));
  EXPECT_TRUE(invariants_trivial(fixtures::p1(), {}, false).trivial);
  // the quintic with p kept has the invariant p*x1^5 unless the R-charge is imposed
  EXPECT_FALSE(invariants_trivial(fixtures::quintic(), {0, 5}, false).trivial);
  EXPECT_TRUE(invariants_trivial(fixtures::quintic(), {0, 5}, true).trivial);
}

TEST(InvariantsTrivial, AgreesWithBruteForce) {
  int compared = 0, beyond_bound = 0;
  for (const auto& c : oracles::random_gordan_cases(200, 12345)) {
    auto res = invariants_trivial(c.model, c.keep, c.include_r_charge);
    bool brute = oracles::has_small_invariant(c.model, c.keep, c.include_r_charge, 12);
    if (res.trivial) {
      EXPECT_FALSE(brute);
      // the functional really separates
      for (int i : c.keep) {
        Rational s = 0;
        for (int a = 0; a < c.model.k; ++a) s += (*res.functional)[a] * c.model.weights[a][i];
        if (c.include_r_charge) s += (*res.functional)[c.model.k] * c.model.r_charges[i];
        EXPECT_GE(s, 1);
      }
    } else {
      const auto& a = *res.certificate;
      Integer total = 0;
      for (int i = 0; i < c.model.r; ++i) {
        EXPECT_GE(a[i], 0);
        total += a[i];
      }
      EXPECT_GT(total, 0);
      for (int row = 0; row < c.model.k; ++row) {
        Integer s = 0;
        for (int i = 0; i < c.model.r; ++i) s += a[i] * c.model.weights[row][i];
        EXPECT_EQ(s, 0);
      }
      if (c.include_r_charge) {
        Integer s = 0;
        for (int i = 0; i < c.model.r; ++i) s += a[i] * c.model.r_charges[i];
        EXPECT_EQ(s, 0);
      }
      if (total > 12) ++beyond_bound;
      if (total <= 12) EXPECT_TRUE(brute);
    }
    ++compared;
  }
  EXPECT_EQ(compared, 200);
  // a minimal invariant may exceed the enumeration bound; the certificate covers those
  RecordProperty("certificates_beyond_bound", beyond_bound);
}
