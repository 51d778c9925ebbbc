#pragma once

// Canonical (Gibbs) states of the two-spin medium, k_B = 1.

#include <vector>

#include "otto/spectrum.hpp"

namespace otto {

struct ThermalState {
  Spectrum spectrum;
  double B = 0.0;
  double T = 1.0;
  double J = 0.0;
  std::vector<double> probabilities;  ///< indexed by canonical k-1
  double logZ = 0.0;

  std::size_t size() const noexcept { return probabilities.size(); }
  double operator[](std::size_t i) const { return probabilities[i]; }
};

/// log of sum_k exp(-E_k/T), evaluated with a shift by the lowest energy.
double partition_function(const Spectrum& spectrum, double B, double T, double J);

/// p_k = exp(-E_k/T) / Z. Throws std::invalid_argument unless T > 0 (finite)
/// and B, J >= 0.
ThermalState occupation_probabilities(const Spectrum& spectrum, double B, double T, double J);

/// -sum p ln p over the state's probabilities.
double shannon_entropy(const ThermalState& state);
double shannon_entropy(const std::vector<double>& p);

}  // namespace otto
