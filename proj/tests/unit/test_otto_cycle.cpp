#include <cmath>

#include "doctest.h"
#include "otto/otto_cycle.hpp"
#include "test_support.hpp"

using namespace otto;

namespace {

// Heats straight from E_k(B) (P - P'), no X/Y decomposition.
struct NaiveHeats {
  double q1, q2;
};

NaiveHeats naive_heats(const SpinPair& pair, const CycleParams& c) {
  const Spectrum sp(pair);
  const auto p = occupation_probabilities(sp, c.B1, c.T1, c.J);
  const auto q = occupation_probabilities(sp, c.B2, c.T2, c.J);
  const auto e1 = sp.energies(c.B1, c.J);
  const auto e2 = sp.energies(c.B2, c.J);
  NaiveHeats h{0, 0};
  for (std::size_t k = 0; k < sp.size(); ++k) {
    h.q1 += e1[k] * (p[k] - q[k]);
    h.q2 += e2[k] * (p[k] - q[k]);
  }
  return h;
}

}  // namespace

TEST_CASE("CycleParams validation") {
  CHECK_NOTHROW(CycleParams{4, 3, 4, 2, 0.1}.validate());
  CHECK_NOTHROW(CycleParams{4, 4, 2, 2, 0.0}.validate());
  CHECK_THROWS_AS(CycleParams({3, 4, 4, 2, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(CycleParams({4, 0, 4, 2, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(CycleParams({4, 3, 2, 4, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(CycleParams({4, 3, 4, 0, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(CycleParams({4, 3, 4, 2, -0.1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(CycleParams({INFINITY, 3, 4, 2, 0}).validate(), std::invalid_argument);
  CHECK(CycleParams{4, 3, 4, 2, 0}.theta() == 0.5);
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(2, 1, 1) == Regime::Engine);
  CHECK(classify_regime(-1, -2, -1) == Regime::Refrigerator);
  CHECK(classify_regime(-2, 1, -3) == Regime::Heater);
  CHECK(classify_regime(-2, 0, -2) == Regime::Heater);
  CHECK(classify_regime(1, 2, -1) == Regime::Accelerator);
  CHECK(classify_regime(0, 1, -1) == Regime::Accelerator);
  CHECK(classify_regime(0, 0, 0) == Regime::Null);
  CHECK(to_string(Regime::Engine) == "engine");
  CHECK(to_string(Regime::Refrigerator) == "refrigerator");
}

TEST_CASE("identical stages give zero factors") {
  const Spectrum sp(SpinPair(2, 3));
  const auto s = occupation_probabilities(sp, 2.0, 1.5, 0.1);
  const auto xy = xy_factors(s, s);
  CHECK(xy.X == 0.0);
  CHECK(xy.Y == 0.0);
  const auto r = average_cycle_report(s, s, CycleParams{2.0, 2.0, 1.5, 1.5, 0.1});
  CHECK(r.W == 0.0);
  CHECK(r.regime == Regime::Null);
  CHECK_THROWS_AS(xy_factors(s, occupation_probabilities(Spectrum(SpinPair(1, 3)), 2.0, 1.5, 0.1)),
                  std::invalid_argument);
}

TEST_CASE("uncoupled efficiency is 1 - B2/B1") {
  for (const auto& p : testing::pairs_with_at_most(40))
    for (double T1 : {1.0, 4.0, 10.0}) {
      const auto r = average_cycle_report(p, CycleParams{4, 3, T1, T1 / 2, 0.0});
      REQUIRE(r.eta.has_value());
      CHECK(*r.eta == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(r.regime == Regime::Engine);
      CHECK(r.X == doctest::Approx(r.v).epsilon(1e-15));
      CHECK(r.dS == doctest::Approx(r.dS0).epsilon(1e-12));
    }
}

TEST_CASE("(1/2, 1) at B1=4 B2=3 T1=4 T2=2 J=0.2") {
  const CycleParams c{4, 3, 4, 2, 0.2};
  const auto r = average_cycle_report(SpinPair(1, 2), c);
  // 40-digit references from a direct Boltzmann evaluation
  CHECK(r.Q1 == doctest::Approx(1.07098082331907221).epsilon(1e-13));
  CHECK(r.Q2 == doctest::Approx(0.771194530368021127).epsilon(1e-13));
  CHECK(r.W == doctest::Approx(0.299786292951051080).epsilon(1e-13));
  REQUIRE(r.eta.has_value());
  CHECK(*r.eta == doctest::Approx(0.279917517124148525).epsilon(1e-13));
  CHECK(r.dS == doctest::Approx(0.117852059354242512).epsilon(1e-12));
  CHECK(r.regime == Regime::Engine);
  CHECK(*r.eta > r.eta0);
  CHECK(*r.eta < 0.25 / 0.7);
}

TEST_CASE("decomposed heats match the direct energy sums") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& p : testing::pairs_with_at_most(60))
    for (int t = 0; t < 5; ++t) {
      const double B1 = 1 + 5 * u(rng);
      const double T1 = 0.5 + 6 * u(rng);
      const CycleParams c{B1, B1 * (0.1 + 0.85 * u(rng)), T1, T1 * (0.1 + 0.85 * u(rng)), 0.5 * u(rng)};
      const auto r = average_cycle_report(p, c);
      const auto n = naive_heats(p, c);
      const double scale = 1.0 + std::abs(n.q1) + std::abs(n.q2);
      CHECK(std::abs(r.Q1 - n.q1) < 1e-12 * scale);
      CHECK(std::abs(r.Q2 - n.q2) < 1e-12 * scale);
      CHECK(r.W == r.Q1 - r.Q2);
      CHECK(r.dS == doctest::Approx(-r.Q1 / c.T1 + r.Q2 / c.T2).epsilon(1e-10).scale(scale));
    }
}

TEST_CASE("no work without a temperature gradient") {
  for (const auto& p : {SpinPair(1, 2), SpinPair(2, 3), SpinPair(1, 1)})
    for (double J = 0.0; J < 1.5; J += 0.05) {
      const auto r = average_cycle_report(p, CycleParams{4, 3, 2, 2, J});
      CHECK(r.W <= 1e-15);
      CHECK(r.regime != Regime::Engine);
    }
}

TEST_CASE("trace identity for the work") {
  CHECK(trace_consistency_check(SpinPair(1, 2), CycleParams{4, 3, 4, 2, 0.2}));
  CHECK(trace_work_deviation(SpinPair(1, 2), CycleParams{3, 3, 2, 2, 0.2}) < 1e-12);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const double B1 = 1 + 4 * u(rng);
    const double T1 = 0.3 + 5 * u(rng);
    const CycleParams c{B1, B1 * (0.05 + 0.9 * u(rng)), T1, T1 * (0.05 + 0.9 * u(rng)), u(rng)};
    CHECK(trace_consistency_check(SpinPair(1, 1), c));
    CHECK(trace_consistency_check(SpinPair(1 + t % 3, 2 + t % 2), c));
  }
}
