#include "otto/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace otto {

SpinPair::SpinPair(int twoS1, int twoS2) : twoS1_(twoS1), twoS2_(twoS2) {
  if (twoS1 < 1 || twoS2 < 1) {
    throw std::invalid_argument("spin magnitudes must be at least 1/2 (got 2s1=" +
                                std::to_string(twoS1) + ", 2s2=" + std::to_string(twoS2) + ")");
  }
  if (twoS1_ > twoS2_) std::swap(twoS1_, twoS2_);
}

Spectrum::Spectrum(SpinPair pair) : pair_(pair) {
  const int ts = pair_.twoS();
  levels_.reserve(pair_.levelCount());
  for (int tS = pair_.twoS2() - pair_.twoS1(); tS <= ts; tS += 2) {
    // 2*m2 = s(s+1) - S(S+1) = ((2s)(2s+2) - (2S)(2S+2)) / 4
    const int twoM2 = (ts * (ts + 2) - tS * (tS + 2)) / 4;
    for (int tM = -tS; tM <= tS; tM += 2) {
      levels_.push_back(EnergyLevel{tS, tM, tM, twoM2, 0});
    }
  }
  std::sort(levels_.begin(), levels_.end(), [](const EnergyLevel& a, const EnergyLevel& b) {
    if (a.m1 != b.m1) return a.m1 < b.m1;
    return a.twoM2 > b.twoM2;
  });
  for (std::size_t i = 0; i < levels_.size(); ++i) levels_[i].k = static_cast<int>(i) + 1;
}

std::vector<double> Spectrum::energies(double B, double J) const {
  std::vector<double> e;
  e.reserve(levels_.size());
  for (const auto& l : levels_) e.push_back(energy_of_level(l, B, J));
  return e;
}

std::vector<int> Spectrum::energyOrder(double B, double J) const {
  const auto e = energies(B, J);
  std::vector<int> order(levels_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return e[a] < e[b]; });
  for (auto& k : order) ++k;
  return order;
}

Spectrum build_spectrum(const SpinPair& pair) { return Spectrum(pair); }

double energy_of_level(const EnergyLevel& level, double B, double J) {
  if (!(B >= 0.0)) throw std::invalid_argument("field B must be non-negative");
  if (!(J >= 0.0)) throw std::invalid_argument("coupling J must be non-negative");
  return level.m1 * B - 4.0 * level.twoM2 * J;
}

DegeneracyProfile degeneracy_profile(const SpinPair& pair) {
  DegeneracyProfile profile;
  const Spectrum spectrum(pair);
  int current = 0;
  int count = 0;
  for (const auto& l : spectrum.levels()) {
    if (l.m1 >= 0) {
      if (l.m1 == 0) ++profile.zeroEnergyMultiplicity;
      continue;
    }
    if (count > 0 && l.m1 != current) {
      profile.g.push_back(count);
      count = 0;
    }
    current = l.m1;
    ++count;
  }
  if (count > 0) profile.g.push_back(count);
  return profile;
}

bool check_no_level_crossing(const Spectrum& spectrum, double B1, double B2, double J) {
  if (!(B1 > B2 && B2 > 0.0)) throw std::invalid_argument("level crossing check needs B1 > B2 > 0");
  if (!(J >= 0.0)) throw std::invalid_argument("coupling J must be non-negative");
  const auto e1 = spectrum.energies(B1, J);
  const auto e2 = spectrum.energies(B2, J);
  auto tol = [](double a, double b) { return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); };
  // sign of (a - b) with ties collapsed to 0
  auto sign = [&](double a, double b) {
    const double d = a - b;
    if (std::abs(d) <= tol(a, b)) return 0;
    return d < 0 ? -1 : 1;
  };
  const std::size_t n = spectrum.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sign(e1[i], e1[j]) * sign(e2[i], e2[j]) < 0) return false;
    }
  }
  return true;
}

}  // namespace otto
