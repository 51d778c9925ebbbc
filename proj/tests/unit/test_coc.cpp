#include <cmath>

#include "doctest.h"
#include "otto/coc.hpp"
#include "otto/regime.hpp"
#include "test_support.hpp"

using namespace otto;

namespace {

const CycleParams kFig2a{4, 3, 4, 2, 0.0};

CycleParams with_j(CycleParams c, double J) {
  c.J = J;
  return c;
}

const CocRecord& find(const std::vector<CocRecord>& rs, int i, int f) {
  for (const auto& r : rs)
    if (r.initialK == i && r.finalK == f) return r;
  throw std::logic_error("record not found");
}

}  // namespace

TEST_CASE("class from signs") {
  CHECK(classify_coc(2, 0) == CocClass::FieldOnly);
  CHECK(classify_coc(0, -3) == CocClass::CouplingOnly);
  CHECK(classify_coc(2, 3) == CocClass::Aligned);
  CHECK(classify_coc(-2, -3) == CocClass::Aligned);
  CHECK(classify_coc(2, -3) == CocClass::Opposed);
  CHECK(classify_coc(0, 0) == CocClass::Null);
  CHECK(to_string(CocClass::CouplingOnly) == "COUPLING_ONLY");
}

TEST_CASE("(1/2, 1) records") {
  const Spectrum sp(SpinPair(1, 2));
  const auto c = with_j(kFig2a, 0.2);
  const auto rs = enumerate_cocs(sp, c);
  REQUIRE(rs.size() == 30);
  CHECK(rs.front().initialK == 1);
  CHECK(rs.front().finalK == 2);

  const auto& r16 = find(rs, 1, 6);
  CHECK(r16.x == 6);
  CHECK(r16.twoY == 0);
  CHECK(r16.caseClass == CocClass::FieldOnly);
  CHECK(*r16.efficiency == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r16.dS == doctest::Approx(3.0).epsilon(1e-15));

  // 2 -> 5 leaves the coupled level (m2 = 3/2) for an uncoupled one: the
  // coupling raises the heat intake, so the cycle runs below eta0.
  const auto& r25 = find(rs, 2, 5);
  CHECK(r25.x == 2);
  CHECK(r25.y() == 1.5);
  CHECK(r25.caseClass == CocClass::Aligned);
  CHECK(r25.q1 == doctest::Approx(2 * 4 + 12 * 0.2).epsilon(1e-15));
  CHECK(*r25.efficiency == doctest::Approx(0.25 / 1.3).epsilon(1e-14));

  const auto& r34 = find(rs, 3, 4);
  CHECK(r34.x == 2);
  CHECK(r34.y() == -1.5);
  CHECK(r34.caseClass == CocClass::Opposed);
  CHECK(*r34.efficiency == doctest::Approx(0.25 / 0.7).epsilon(1e-14));

  const auto& r45 = find(rs, 4, 5);
  CHECK(r45.x == 0);
  CHECK(r45.caseClass == CocClass::CouplingOnly);
  CHECK(r45.w == 0.0);
  CHECK(r45.q1 > 0.0);
  CHECK(*r45.efficiency == 0.0);
  CHECK_FALSE(find(rs, 5, 4).efficiency);  // releases heat at the hot bath

  // refrigerator direction: no efficiency
  CHECK_FALSE(find(rs, 6, 1).efficiency);
}

TEST_CASE("records against a direct energy-difference oracle") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& p : testing::pairs_with_at_most(40)) {
    const Spectrum sp(p);
    const CycleParams c{4.5, 2.0 + u(rng), 3.0, 1.0 + u(rng), 0.3 * u(rng)};
    const auto e1 = sp.energies(c.B1, c.J);
    const auto e2 = sp.energies(c.B2, c.J);
    const auto rs = enumerate_cocs(sp, c);
    REQUIRE(rs.size() == sp.size() * (sp.size() - 1));
    for (const auto& r : rs) {
      const auto i = static_cast<std::size_t>(r.initialK - 1);
      const auto f = static_cast<std::size_t>(r.finalK - 1);
      CHECK(r.q1 == doctest::Approx(e1[f] - e1[i]).epsilon(1e-12).scale(1.0));
      CHECK(r.q2 == doctest::Approx(e2[f] - e2[i]).epsilon(1e-12).scale(1.0));
      CHECK(r.w == doctest::Approx(r.q1 - r.q2).epsilon(1e-12).scale(1.0));
      CHECK(r.dS == doctest::Approx(-r.q1 / c.T1 + r.q2 / c.T2).epsilon(1e-12).scale(1.0));
      const auto& back = find(rs, r.finalK, r.initialK);
      CHECK(back.x == -r.x);
      CHECK(back.twoY == -r.twoY);
      CHECK(back.q1 == -r.q1);
      CHECK(back.dS == -r.dS);
    }
  }
}

TEST_CASE("single-cycle efficiencies") {
  const auto c = with_j(kFig2a, 0.2);
  CocRecord r;
  r.x = 6;
  r.twoY = 0;
  r.caseClass = CocClass::FieldOnly;
  CHECK(*coc_efficiency(r, c) == 0.25);
  r.x = 2;
  r.twoY = 3;
  r.caseClass = CocClass::Aligned;
  CHECK(*coc_efficiency(r, c) == doctest::Approx(0.25 / 1.3).epsilon(1e-14));
  CHECK(*coc_efficiency(r, c) == doctest::Approx(0.192307692307692).epsilon(1e-13));
  r.twoY = -3;
  r.caseClass = CocClass::Opposed;
  CHECK(*coc_efficiency(r, c) == doctest::Approx(0.357142857142857).epsilon(1e-13));
  r.x = -2;
  CHECK_FALSE(coc_efficiency(r, c));
  // opposed cycle whose denominator has gone negative
  r.x = 2;
  r.twoY = -3;
  CHECK_FALSE(coc_efficiency(r, with_j(kFig2a, 0.7)));
}

TEST_CASE("maximum engine efficiency") {
  const Spectrum sp(SpinPair(1, 2));
  const auto m = max_engine_coc_efficiency(sp, with_j(kFig2a, 0.2));
  CHECK(m.etaMaxObserved == doctest::Approx(0.25 / 0.7).epsilon(1e-14));
  CHECK(m.witness.x == 2);
  CHECK(m.witness.y() == -1.5);

  const auto m0 = max_engine_coc_efficiency(sp, kFig2a);
  CHECK(m0.etaMaxObserved == 0.25);

  const Spectrum big(SpinPair(3, 4));
  const auto mb = max_engine_coc_efficiency(big, with_j(kFig2a, 0.02));
  CHECK(mb.witness.x == 2);
  CHECK(mb.witness.twoY == -15);
  CHECK(mb.etaMaxObserved == doctest::Approx(*efficiency_bounds(big.pair(), with_j(kFig2a, 0.02)).etaMax)
                                 .epsilon(1e-12));

  CHECK_THROWS_AS(max_engine_coc_efficiency(sp, with_j(kFig2a, 1.0)), std::domain_error);
}

TEST_CASE("second-law audit") {
  const Spectrum sp(SpinPair(1, 2));
  const auto a = second_law_audit(sp, with_j(kFig2a, 0.3));
  CHECK(a.applicable);
  CHECK(a.engineRecords > 0);
  CHECK(a.engineViolations == 0);
  CHECK(a.passed());

  // s1 >= 1, J between Jx and Jc: an opposed engine cycle loses entropy
  // while the averaged cycle still produces work.
  const SpinPair p(2, 3);
  const auto b = coupling_bounds(p, kFig2a);
  REQUIRE(b.jx < b.jc);
  const auto c = with_j(kFig2a, 0.5 * (b.jx + b.jc));
  const auto audit = second_law_audit(Spectrum(p), c);
  CHECK_FALSE(audit.applicable);
  CHECK(audit.engineViolations > 0);
  CHECK(audit.negativeByClass[static_cast<int>(CocClass::Opposed)] > 0);
  for (const auto& v : audit.violations) CHECK(v.caseClass == CocClass::Opposed);
  CHECK(average_cycle_report(p, c).W > 0);
}
