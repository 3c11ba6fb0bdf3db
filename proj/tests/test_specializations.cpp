#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "glsm/specializations.hpp"
#include "series_oracle.hpp"

using namespace glsm;

namespace {

FjrwSpec cubic_spec() {
  FjrwSpec s;
  s.d_w = 3;
  s.weights = {1};
  s.group = {{3, {1}}};
  s.potential = "x^3";
  s.variable_names = {"x"};
  return s;
}

// x1^3 + x2^3 with G = <J> x <(1, e^{2 pi i/3})>
FjrwSpec two_generator_spec() {
  FjrwSpec s;
  s.d_w = 3;
  s.weights = {1, 1};
  s.group = {{3, {1, 1}}, {3, {0, 1}}};
  s.potential = "x1^3 + x2^3";
  return s;
}

HybridSpec hybrid_spec(IntVector w, IntVector d, std::vector<std::string> sections) {
  HybridSpec s;
  s.w = std::move(w);
  s.d = std::move(d);
  s.sections = std::move(sections);
  return s;
}

CiSpec quintic_ci() {
  CiSpec s;
  s.ambient = parse_model(R"({"r": 5, "k": 1, "weights": [[1,1,1,1,1]], "r_charges": [0,0,0,0,0], "d_w": 1,
    "theta": ["1"], "potential": null})");
  s.taus = {{5}};
  s.sections = {"x1^5+x2^5+x3^5+x4^5+x5^5"};
  s.semipositive = true;
  return s;
}

Degree deg(long num, long den = 1) { return Degree{{make_rational(num, den)}}; }

Rational only_scalar(const SeriesTerm& t, int* z_power) {
  EXPECT_EQ(t.value.coefficients().size(), 1u);
  const auto& [pw, c] = *t.value.coefficients().begin();
  *z_power = pw;
  EXPECT_EQ(c.coords().size(), 1u);
  return c.coords()[0];
}

}  // namespace

TEST(FjrwBuild, Cubic) {
  auto m = fjrw_build(cubic_spec());
  auto ref = fixtures::cubic();
  EXPECT_EQ(m.weights, ref.weights);
  EXPECT_EQ(m.r_charges, ref.r_charges);
  EXPECT_EQ(m.theta, ref.theta);
  EXPECT_EQ(m.d_w, 3);
  EXPECT_EQ(m.variable_names, ref.variable_names);
  EXPECT_EQ(m.potential, ref.potential);
  EXPECT_EQ(m.hat_set(), std::vector<int>{1});
  EXPECT_TRUE(validate_model(m).overall());
}

TEST(FjrwBuild, FermatQuadricAndTwoGenerators) {
  FjrwSpec f;
  f.d_w = 2;
  f.weights = {1, 1};
  f.group = {{2, {1, 1}}};
  f.potential = "x1^2 + x2^2";
  auto m = fjrw_build(f);
  EXPECT_EQ(m.weights, (IntMatrix{{1, 1, -2}}));
  EXPECT_EQ(m.r_charges, (IntVector{1, 1, 0}));
  EXPECT_EQ(m.theta, RationalVector{Rational(-1)});

  auto two = fjrw_build(two_generator_spec());
  EXPECT_EQ(two.k, 2);
  EXPECT_EQ(two.weights, (IntMatrix{{1, 1, -3, 0}, {0, 1, 0, -3}}));
  EXPECT_EQ(two.potential->str(two.variable_names), "x1^3*p1 + x2^3*p1*p2");
  auto report = validate_model(two);
  EXPECT_TRUE(report.overall());
}

TEST(FjrwBuild, RejectsBadSpecs) {
  auto s = cubic_spec();
  s.group[0].order = 2;
  EXPECT_THROW(fjrw_build(s), InputError);
  s = cubic_spec();
  s.group[0].action = {2};
  EXPECT_THROW(fjrw_build(s), InputError);
  s = cubic_spec();
  s.potential = "x^2";
  EXPECT_THROW(fjrw_build(s), InputError);
}

TEST(FjrwDirect, CubicHandValues) {
  auto direct = fjrw_I_direct(cubic_spec(), Rational(2), 1);
  int zp = 0;
  // k = 1: e^t
  EXPECT_EQ(only_scalar(*direct.find(deg(-1, 3), {0}), &zp), 1);
  EXPECT_EQ(zp, 0);
  EXPECT_EQ(only_scalar(*direct.find(deg(-1, 3), {1}), &zp), 1);
  // k = 2: e^{2t} z^{-1}
  EXPECT_EQ(only_scalar(*direct.find(deg(-2, 3), {0}), &zp), 1);
  EXPECT_EQ(zp, -1);
  EXPECT_EQ(only_scalar(*direct.find(deg(-2, 3), {1}), &zp), 2);
  // k = 4: -e^{4t} / (18 z^2)
  EXPECT_EQ(only_scalar(*direct.find(deg(-4, 3), {0}), &zp), make_rational(-1, 18));
  EXPECT_EQ(zp, -2);
  EXPECT_EQ(only_scalar(*direct.find(deg(-4, 3), {1}), &zp), make_rational(-4, 18));
  EXPECT_EQ(direct.find(deg(-1), {0}), nullptr);
  EXPECT_EQ(direct.find(deg(-2), {0}), nullptr);
}

TEST(FjrwDirect, EngineAgreesCubic) {
  auto spec = cubic_spec();
  auto m = fjrw_build(spec);
  auto engine = glsm_I(m, fjrw_insertions(m), Rational(4), 2);
  auto direct = fjrw_I_direct(spec, Rational(4), 2);
  auto diff = series_compare(engine, direct);
  EXPECT_TRUE(diff.equal()) << diff.entries.size();
  EXPECT_EQ(engine.terms.size(), direct.terms.size());
  for (const auto& t : engine.terms) EXPECT_FALSE(is_integer(t.theta));
}

TEST(FjrwDirect, EngineAgreesTwoGenerators) {
  auto spec = two_generator_spec();
  auto m = fjrw_build(spec);
  auto engine = glsm_I(m, fjrw_insertions(m), Rational(3), 1);
  auto direct = fjrw_I_direct(spec, Rational(3), 1);
  EXPECT_FALSE(direct.terms.empty());
  EXPECT_TRUE(series_compare(engine, direct).equal());
}

TEST(FjrwDirect, DefaultDerivativeSetDiffersByScalar) {
  // with the derivative set {x} instead of {p} the cubic series is -1/3 times the direct one
  auto m = fixtures::cubic();
  auto ins = default_insertions(m);
  add_insertion(ins, "t=p");
  auto alt = glsm_I(m, ins, Rational(3), 1);
  auto direct = fjrw_I_direct(cubic_spec(), Rational(3), 1);
  ASSERT_EQ(alt.terms.size(), direct.terms.size());
  for (std::size_t i = 0; i < alt.terms.size(); ++i) {
    EXPECT_EQ(alt.terms[i].degree, direct.terms[i].degree);
    EXPECT_EQ(alt.terms[i].value, make_rational(-1, 3) * direct.terms[i].value);
  }
}

TEST(HybridBuild, Shapes) {
  auto m = hybrid_build(hybrid_spec({1}, {3}, {"x1^3"}));
  EXPECT_EQ(m.weights, (IntMatrix{{1, -3}}));
  EXPECT_EQ(m.r_charges, (IntVector{0, 1}));
  EXPECT_EQ(m.theta, RationalVector{Rational(-1)});
  EXPECT_EQ(m.d_w, 1);
  EXPECT_EQ(m.potential->str(m.variable_names), "x1^3*p");
  auto m2 = hybrid_build(hybrid_spec({1, 1}, {2}, {"x1^2 + x2^2"}));
  EXPECT_EQ(m2.weights, (IntMatrix{{1, 1, -2}}));
  EXPECT_TRUE(validate_model(m2).overall());
}

TEST(HybridDirect, Examples) {
  auto spec = hybrid_spec({1}, {3}, {"x1^3"});
  auto direct = hybrid_I_direct(spec, Rational(1), 0);
  // k = 1: exp factor times 1
  int zp = 0;
  EXPECT_EQ(only_scalar(*direct.find(deg(-1, 3), {0}), &zp), 1);
  EXPECT_EQ(zp, 0);
  // k = 3: the endpoint factor -H vanishes in the P(3) ring
  EXPECT_EQ(direct.find(deg(-1), {0}), nullptr);
  // k = 0: the derivative brings down 3H = 0
  EXPECT_EQ(direct.find(deg(0), {0}), nullptr);
  auto display = hybrid_I_display(spec, Rational(1), 0);
  EXPECT_NE(display.find(deg(0), {0}), nullptr);
}

TEST(HybridDirect, EngineAgrees) {
  for (const auto& spec : {hybrid_spec({1}, {3}, {"x1^3"}), hybrid_spec({1, 1}, {2}, {"x1^2 + x2^2"})}) {
    auto m = hybrid_build(spec);
    auto engine = glsm_I(m, hybrid_insertions(m, spec.n()), Rational(3), 2);
    auto direct = hybrid_I_direct(spec, Rational(3), 2);
    auto diff = series_compare(engine, direct);
    EXPECT_TRUE(diff.equal()) << diff.entries.size();
    // the displayed closed form agrees except for its degree-zero unit term
    auto display = hybrid_I_display(spec, Rational(3), 2);
    auto ddiff = series_compare(engine, display);
    ASSERT_EQ(ddiff.entries.size(), 1u);
    EXPECT_TRUE(ddiff.entries[0].degree.is_zero());
    EXPECT_EQ(ddiff.entries[0].value_a, "0");
    EXPECT_EQ(ddiff.entries[0].value_b, "1");
  }
}

TEST(CiBuild, QuinticMatchesFixture) {
  auto m = ci_build(quintic_ci());
  auto ref = fixtures::quintic();
  EXPECT_EQ(m.weights, ref.weights);
  EXPECT_EQ(m.r_charges, ref.r_charges);
  EXPECT_EQ(m.potential, ref.potential);
  EXPECT_EQ(m.hat_set(), ref.hat_set());
}

TEST(CiBuild, RejectsPSupports) {
  CiSpec s;
  s.ambient = parse_model(R"({"r": 2, "k": 1, "weights": [[1,1]], "r_charges": [0,0], "d_w": 1, "theta": ["-1"],
    "potential": null})");
  s.taus = {{1}};
  EXPECT_THROW(ci_build(s), PreconditionError);
}

TEST(CiWang, QuinticClassical) {
  auto spec = quintic_ci();
  auto ins = default_insertions(ci_build(spec));
  auto rhs = ci_wang_rhs(spec, ins, Rational(3), 0);
  EXPECT_EQ(rhs.find(deg(0), {})->value, LaurentZ::one(rhs.find(deg(0), {})->value.ring()));
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(oracle::HZ::from_engine(rhs.find(deg(d), {})->value, 5), oracle::classical_quintic(d));
}

TEST(CiCompare, EmptyDiffs) {
  auto q = quintic_ci();
  auto qins = default_insertions(ci_build(q));
  auto rep = ci_compare(q, qins, Rational(3), 0);
  EXPECT_TRUE(rep.passed()) << rep.diff.entries.size() << " / " << rep.euler_violations.size();
  EXPECT_GT(rep.diff.compared, 3u);
  add_insertion(qins, "t=x1");
  EXPECT_TRUE(ci_compare(q, qins, Rational(2), 2).passed());

  CiSpec c22;
  c22.ambient = parse_model(R"({"r": 4, "k": 1, "weights": [[1,1,1,1]], "r_charges": [0,0,0,0], "d_w": 1,
    "theta": ["1"], "potential": null})");
  c22.taus = {{2}, {2}};
  c22.sections = {"x1^2+x2^2+x3^2+x4^2", "x1^2+2*x2^2+3*x3^2+4*x4^2"};
  EXPECT_TRUE(ci_compare(c22, default_insertions(ci_build(c22)), Rational(2), 0).passed());

  CiSpec none = quintic_ci();
  none.taus.clear();
  none.sections.clear();
  EXPECT_TRUE(ci_compare(none, default_insertions(ci_build(none)), Rational(2), 0).passed());
}

TEST(CiCompare, OrbifoldAmbient) {
  // cubic curve in P(1,1,2): the lambda = 1/2 sectors carry nonzero ages of tau
  CiSpec s;
  s.ambient = parse_model(R"({"r": 3, "k": 1, "weights": [[1,1,2]], "r_charges": [0,0,0], "d_w": 1,
    "theta": ["1"], "potential": null})");
  s.taus = {{3}};
  auto ins = default_insertions(ci_build(s));
  add_insertion(ins, "t=x3");
  auto rep = ci_compare(s, ins, make_rational(5, 2), 1);
  EXPECT_TRUE(rep.passed()) << rep.diff.entries.size();
  bool saw_fractional = false;
  for (const auto& d : effective_degrees(s.ambient, make_rational(5, 2))) saw_fractional |= !is_integer(d.value[0]);
  EXPECT_TRUE(saw_fractional);
}

TEST(SpecFiles, ParseAll) {
  auto f = fjrw_spec_from_json(nlohmann::json::parse(
      R"({"specialize": {"fjrw": {"d_w": 3, "weights": [1], "group": [{"order": 3, "action": [1]}], "potential": "x^3", "variables": ["x"]}}})"));
  EXPECT_EQ(fjrw_build(f).weights, fixtures::cubic().weights);
  auto h = hybrid_spec_from_json(nlohmann::json::parse(R"({"specialize": {"hybrid": {"w": [1,1], "d": [2], "sections": ["x1^2+x2^2"]}}})"));
  EXPECT_EQ(hybrid_build(h).r, 3);
  auto c = ci_spec_from_json(nlohmann::json::parse(R"({"r": 5, "k": 1, "weights": [[1,1,1,1,1]], "r_charges": [0,0,0,0,0],
    "d_w": 1, "theta": ["1"], "potential": null, "specialize": {"ci": {"taus": [[5]], "semipositive": true}}})"));
  EXPECT_EQ(ci_build(c).r, 6);
  EXPECT_THROW(fjrw_spec_from_json(nlohmann::json::parse(R"({"specialize": {}})")), InputError);
  EXPECT_THROW(hybrid_spec_from_json(nlohmann::json::parse(R"({"specialize": {"hybrid": {"w": [0], "d": [2]}}})")),
               InputError);
}
