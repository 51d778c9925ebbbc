#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "otto/spectrum.hpp"
#include "test_support.hpp"

using namespace otto;

TEST_CASE("SpinPair validates and canonicalises") {
  CHECK_THROWS_AS(SpinPair(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SpinPair(1, -3), std::invalid_argument);
  const SpinPair p(4, 1);
  CHECK(p.twoS1() == 1);
  CHECK(p.twoS2() == 4);
  CHECK(p.levelCount() == 10);
  CHECK(p == SpinPair(1, 4));
}

TEST_CASE("(1/2, 1) spectrum matches the six-level diagram") {
  const auto sp = build_spectrum(SpinPair(1, 2));
  REQUIRE(sp.size() == 6);
  const std::vector<std::pair<int, int>> expected = {{-3, 0}, {-1, 3}, {-1, 0}, {1, 3}, {1, 0}, {3, 0}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(sp[i].m1 == expected[i].first);
    CHECK(sp[i].twoM2 == expected[i].second);
    CHECK(sp[i].k == static_cast<int>(i) + 1);
    CHECK(sp[i].m1 == sp[i].twoM);
  }
}

TEST_CASE("(1/2, 1/2) spectrum: singlet sits in the zero band") {
  const auto sp = build_spectrum(SpinPair(1, 1));
  REQUIRE(sp.size() == 4);
  CHECK(sp[0].m1 == -2);
  CHECK(sp[0].twoM2 == 0);
  // band m1 = 0 holds m2 = 1 (S = 0) then m2 = 0 (S = 1)
  CHECK(sp[1].m1 == 0);
  CHECK(sp[1].twoM2 == 2);
  CHECK(sp[1].twoS == 0);
  CHECK(sp[2].m1 == 0);
  CHECK(sp[2].twoM2 == 0);
  CHECK(sp[3].m1 == 2);
}

TEST_CASE("energy_of_level") {
  const auto sp = build_spectrum(SpinPair(1, 2));
  CHECK(energy_of_level(sp[1], 4.0, 0.2) == doctest::Approx(-6.4).epsilon(1e-15));
  for (const auto& l : sp.levels()) CHECK(energy_of_level(l, 2.5, 0.0) == l.m1 * 2.5);
  CHECK(energy_of_level(sp[0], 4.0, 0.3) == -12.0);
  CHECK_THROWS_AS(energy_of_level(sp[0], -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(energy_of_level(sp[0], 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("degeneracy profile") {
  auto a = degeneracy_profile(SpinPair(1, 2));
  CHECK(a.g == std::vector<int>{1, 2});
  CHECK(a.zeroEnergyMultiplicity == 0);

  auto b = degeneracy_profile(SpinPair(3, 4));
  CHECK(b.g == std::vector<int>{1, 2, 3, 4});
  CHECK(b.zeroEnergyMultiplicity == 0);

  auto c = degeneracy_profile(SpinPair(1, 1));
  CHECK(c.g == std::vector<int>{1});
  CHECK(c.zeroEnergyMultiplicity == 2);

  for (const auto& p : testing::pairs_with_at_most(120)) {
    const auto d = degeneracy_profile(p);
    int sum = 0;
    for (int g : d.g) sum += g;
    CHECK(static_cast<std::size_t>(2 * sum + d.zeroEnergyMultiplicity) == p.levelCount());
    CHECK(d.zeroEnergyMultiplicity == (p.sameParity() ? p.twoS1() + 1 : 0));
    CHECK(*std::max_element(d.g.begin(), d.g.end()) <= p.twoS1() + 1);
  }
}

TEST_CASE("structural invariants over many pairs") {
  for (const auto& p : testing::pairs_with_at_most(200)) {
    const Spectrum sp(p);
    const int ts = p.twoS();
    CHECK(sp.size() == p.levelCount());

    // multiplet sizes add up to n
    std::map<int, int> multiplet;
    for (const auto& l : sp.levels()) ++multiplet[l.twoS];
    std::size_t total = 0;
    for (auto [twoS, count] : multiplet) {
      CHECK(count == twoS + 1);
      total += static_cast<std::size_t>(count);
    }
    CHECK(total == p.levelCount());

    CHECK(sp.levels().front().m1 == -ts);
    CHECK(sp.levels().back().m1 == ts);
    CHECK(std::count_if(sp.levels().begin(), sp.levels().end(), [&](auto& l) { return l.m1 == -ts; }) == 1);
    CHECK(std::count_if(sp.levels().begin(), sp.levels().end(), [&](auto& l) { return l.m1 == ts; }) == 1);

    for (std::size_t i = 0; i < sp.size(); ++i) {
      const auto& l = sp[i];
      CHECK(std::abs(l.twoM) <= l.twoS);
      CHECK(l.twoM2 >= 0);
      if (l.twoS == ts) CHECK(l.twoM2 == 0);
      if (i > 0) {
        const auto& prev = sp[i - 1];
        CHECK((prev.m1 < l.m1 || (prev.m1 == l.m1 && prev.twoM2 > l.twoM2)));
      }
    }

    // Band m1 = -2(s-q): m2 values are the partial sums 0, s, s+(s-1), ...
    // and the band maximum is q(2s-q+1)/2.
    for (int q = 0; q <= ts; ++q) {
      const int m1 = -ts + 2 * q;
      std::vector<int> twoM2s;
      for (const auto& l : sp.levels())
        if (l.m1 == m1) twoM2s.push_back(l.twoM2);
      std::sort(twoM2s.begin(), twoM2s.end());
      int partial = 0;  // doubled
      for (std::size_t j = 0; j < twoM2s.size(); ++j) {
        CHECK(twoM2s[j] == partial);
        partial += ts - 2 * static_cast<int>(j);  // add 2(s - j)
      }
      if (m1 < 0 && static_cast<int>(twoM2s.size()) == q + 1) {
        CHECK(twoM2s.back() == q * (ts - q + 1));  // 2 * q(2s-q+1)/2
      }
    }
  }
}

TEST_CASE("spectrum of (a, b) equals spectrum of (b, a)") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) CHECK(Spectrum(SpinPair(a, b)).levels() == Spectrum(SpinPair(b, a)).levels());
}

TEST_CASE("level crossing check") {
  const Spectrum sp(SpinPair(1, 2));
  CHECK(check_no_level_crossing(sp, 4.0, 3.0, 0.4));
  CHECK_FALSE(check_no_level_crossing(sp, 4.0, 3.0, 0.6));
  for (const auto& p : testing::pairs_with_at_most(60)) CHECK(check_no_level_crossing(Spectrum(p), 5.0, 0.7, 0.0));
  CHECK_THROWS_AS(check_no_level_crossing(sp, 3.0, 4.0, 0.1), std::invalid_argument);

  // Randomized agreement with a direct comparison of sorted permutations,
  // away from exact ties.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    const SpinPair p(1 + t % 4, 1 + (t / 4) % 5);
    const Spectrum s(p);
    const double b1 = 1.0 + 4.0 * u(rng);
    const double b2 = b1 * (0.1 + 0.85 * u(rng));
    const double j = 0.7 * u(rng) + 1e-3;
    const auto o1 = s.energyOrder(b1, j);
    const auto o2 = s.energyOrder(b2, j);
    auto e1 = s.energies(b1, j);
    auto e2 = s.energies(b2, j);
    bool tie = false;
    for (std::size_t i = 0; i < e1.size(); ++i)
      for (std::size_t k = i + 1; k < e1.size(); ++k)
        tie = tie || std::abs(e1[i] - e1[k]) < 1e-9 || std::abs(e2[i] - e2[k]) < 1e-9;
    if (!tie) CHECK(check_no_level_crossing(s, b1, b2, j) == (o1 == o2));
  }
}
