#include "hawaii/families.hpp"
#include "hawaii/hkappa.hpp"
#include "hawaii/partition.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hawaii;
using testsupport::P;
using testsupport::R;

namespace {

int q_count(const Poly& p, const Rational& k) { return whole_line_counts(p, k).z_r_q; }

void expect_all_hold(const FamilyInstance& f) {
  for (const auto& c : f.claims) {
    if (c.asserted) EXPECT_TRUE(c.holds) << f.name << ": " << c.description << " " << c.detail;
  }
  EXPECT_TRUE(f.all_hold());
}

}  // namespace

TEST(Families, QuarticCounterexample) {
  for (const char* a : {"2", "3", "-1/2"}) expect_all_hold(family_shapiro1_deg4(R(a)));
  const FamilyInstance f = family_shapiro1_deg4(2);
  EXPECT_EQ(R("4/3") * h_kappa(f.p, R("3/4")), P("-6,1").pow(2) * P("2,3").pow(2));
  for (const char* a : {"1", "-1", "0"}) EXPECT_THROW(family_shapiro1_deg4(R(a)), FamilyError);
}

TEST(Families, BinomialSymmetric) {
  expect_all_hold(family_binomial_sym(5));
  const FamilyInstance six = family_binomial_sym(6);
  expect_all_hold(six);
  EXPECT_EQ(whole_line_counts(six.p, R("5/6")).z_r_h, 8);
  EXPECT_EQ(6 - count_roots_with_multiplicity(six.p), 6);

  const FamilyInstance four = family_binomial_sym(4);
  EXPECT_EQ(whole_line_counts(four.p, R("3/4")).z_r_h, 4);
  for (const auto& c : four.claims) EXPECT_FALSE(c.asserted);
}

TEST(Families, MonomialGapInteriorAndEndpoints) {
  for (int n = 3; n <= 6; ++n) {
    const FamilyInstance f = family_monomial_gap(n, 1);
    expect_all_hold(f);
    const Rational left(n - 1, n);
    const Rational right = Rational((2 * n - 3) * (2 * n - 3), 4 * n * (n - 2));
    EXPECT_EQ(q_count(f.p, (left + right) / 2), 4) << n;
    EXPECT_EQ(q_count(f.p, left), 2) << n;
    EXPECT_EQ(q_count(f.p, right), 4) << n;
  }
  EXPECT_EQ(q_count(family_monomial_gap(4, 1).p, R("76/100")), 4);
}

TEST(Families, SecondShapiroFamily) {
  for (int n = 2; n <= 6; ++n) expect_all_hold(family_shapiro2(n));
  const FamilyInstance two = family_shapiro2(2);
  EXPECT_EQ(Rational(-4) * h_kappa(two.p, R("3/4")), P("4,0,11,0,1"));
  EXPECT_EQ(Rational(-6) * h_kappa(family_shapiro2(3).p, R("5/6")), P("6,0,-2,0,30,0,6"));
}

TEST(Families, Chebyshev) {
  EXPECT_EQ(chebyshev_t(0), P("1"));
  EXPECT_EQ(chebyshev_t(3), P("0,-3,0,4"));
  EXPECT_EQ(chebyshev_t(4), P("1,0,-8,0,8"));
  expect_all_hold(make_family("chebyshev", {{"n", 6}}));
}

TEST(Families, SectionSixteen) {
  const FamilyInstance f = section16_example();
  expect_all_hold(f);
  EXPECT_EQ(f.p, P("1/10,0,20,-28,7,1"));
}

TEST(Searches, ChebyshevSharpness) {
  for (int n = 1; n <= 3; ++n) {
    const ChebyshevSearchResult r = theorem7_search(n, R("1/10"));
    EXPECT_EQ(r.expected, 4 * n - 2);
    EXPECT_LE(r.b, R("1/4"));
    ASSERT_EQ(r.verification.size(), 3u);
    for (const auto& [k, count] : r.verification) {
      EXPECT_EQ(count, 4 * n - 2);
      // recount through the oracle on the reduced numerator
      EXPECT_EQ(oracle::roots_with_multiplicity(testsupport::to_oracle(q_reduced(r.p, k).q_num)), 4 * n - 2);
    }
    EXPECT_EQ(r.p, chebyshev_t(2 * n) - P("1") + Poly::constant(r.b));
  }
  EXPECT_THROW(theorem7_search(0, R("1/10")), std::invalid_argument);
}

TEST(Searches, InductiveBuilder) {
  for (int n : {3, 4, 5}) {
    const InductiveBuildResult r = theorem10_build(n, R("1/10"));
    EXPECT_EQ(r.p.degree(), n);
    EXPECT_EQ(count_distinct_roots(r.p), n);
    EXPECT_EQ(static_cast<int>(r.witnesses.size()), n - 2);
    for (const auto& w : r.witnesses) {
      EXPECT_GT(m_eval(r.p, w.y), w.bound);
      EXPECT_EQ(w.bound, Rational(w.interval - 1, w.interval) - R("1/10"));
    }
  }
}

TEST(Searches, BuilderSeedLimit) {
  for (int n = 3; n <= 6; ++n) {
    Poly seed = P("0,1").pow(static_cast<unsigned>(n - 1)) * P("-1,1");
    EXPECT_EQ(m_eval(seed, 0), Rational(n - 2, n - 1));
  }
}

TEST(Registry, NamesParametersAndErrors) {
  const auto names = family_names();
  EXPECT_FALSE(names.empty());
  for (const auto& name : names) EXPECT_NO_THROW(make_family(name, {})) << name;
  EXPECT_THROW(make_family("nope", {}), FamilyError);
  EXPECT_THROW(make_family("binomial-sym", {{"a", 1}}), FamilyError);
  EXPECT_THROW(make_family("binomial-sym", {{"n", R("1/2")}}), FamilyError);
}
