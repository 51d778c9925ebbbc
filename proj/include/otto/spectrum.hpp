#pragma once

// Exact spectrum of two isotropically exchange-coupled spins in a z field.
//
// Every eigenvalue of 2B(s1z + s2z) + 8J s1.s2 (with the constant 8 s1 s2 J
// removed) has the form
//
//     E = m1 * B - 8 * m2 * J
//
// where m1 = 2m is twice the total magnetic number and
// m2 = (s(s+1) - S(S+1)) / 2 depends only on the total spin S of the
// multiplet. All half-integer quantities are kept as doubled integers.

#include <cstddef>
#include <vector>

namespace otto {

/// Two spin magnitudes held as 2*s1, 2*s2. Canonical form has twoS1 <= twoS2.
class SpinPair {
public:
  SpinPair(int twoS1, int twoS2);

  int twoS1() const noexcept { return twoS1_; }
  int twoS2() const noexcept { return twoS2_; }
  /// 2s with s = s1 + s2.
  int twoS() const noexcept { return twoS1_ + twoS2_; }

  double s1() const noexcept { return 0.5 * twoS1_; }
  double s2() const noexcept { return 0.5 * twoS2_; }
  double s() const noexcept { return 0.5 * twoS(); }

  /// n = (2s1+1)(2s2+1).
  std::size_t levelCount() const noexcept {
    return static_cast<std::size_t>((twoS1_ + 1) * (twoS2_ + 1));
  }

  /// Both spins integer or both half-integer. Such pairs have a zero-energy band.
  bool sameParity() const noexcept { return (twoS1_ - twoS2_) % 2 == 0; }

  /// Largest exchange factor m2, reached by the lowest multiplet:
  /// s + (s-1) + ... + (s - (2s1-1)) = s1(2s2+1), doubled.
  int twoMaxM2() const noexcept { return twoS1_ * (twoS2_ + 1); }

  friend bool operator==(const SpinPair&, const SpinPair&) = default;

private:
  int twoS1_;
  int twoS2_;
};

struct EnergyLevel {
  int twoS = 0;   ///< 2S, total spin of the multiplet
  int twoM = 0;   ///< 2m, total magnetic number
  int m1 = 0;     ///< coefficient of B; equal to 2m
  int twoM2 = 0;  ///< 2*m2, coefficient pair of -8J
  int k = 0;      ///< canonical 1-based index

  double m2() const noexcept { return 0.5 * twoM2; }

  friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
};

/// Levels in canonical order: ascending m1, and within one m1 band,
/// descending m2. This is a labelling, not an energy order for all (B, J).
class Spectrum {
public:
  explicit Spectrum(SpinPair pair);

  const SpinPair& pair() const noexcept { return pair_; }
  const std::vector<EnergyLevel>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  const EnergyLevel& operator[](std::size_t i) const { return levels_[i]; }

  /// Energies in canonical order.
  std::vector<double> energies(double B, double J) const;

  /// Canonical indices (1-based) sorted by energy at (B, J); ties keep
  /// canonical order.
  std::vector<int> energyOrder(double B, double J) const;

private:
  SpinPair pair_;
  std::vector<EnergyLevel> levels_;
};

Spectrum build_spectrum(const SpinPair& pair);

/// m1*B - 8*m2*J. Throws std::invalid_argument for negative B or J.
double energy_of_level(const EnergyLevel& level, double B, double J);

struct DegeneracyProfile {
  /// Uncoupled degeneracies g of the levels with m1 = -2s, -2s+2, ... < 0.
  std::vector<int> g;
  /// Size of the m1 = 0 band; 0 for mixed-parity pairs, 2s1+1 otherwise.
  int zeroEnergyMultiplicity = 0;
};

DegeneracyProfile degeneracy_profile(const SpinPair& pair);

/// True iff the energy order of the levels is the same at (B1, J) and
/// (B2, J). Two levels only count as crossed when their energy difference
/// changes sign by more than 1e-12 * max(1, |E|) on both sides.
bool check_no_level_crossing(const Spectrum& spectrum, double B1, double B2, double J);

}  // namespace otto
