#include "otto/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otto {
namespace {

void validate(double B, double T, double J) {
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("temperature must be positive and finite");
  if (!(B >= 0.0) || !std::isfinite(B)) throw std::invalid_argument("field B must be non-negative");
  if (!(J >= 0.0) || !std::isfinite(J)) throw std::invalid_argument("coupling J must be non-negative");
}

// Fills w with exp(-(E_k - E_min)/T) and returns log Z.
double boltzmann_weights(const Spectrum& spectrum, double B, double T, double J, std::vector<double>& w) {
  validate(B, T, J);
  w = spectrum.energies(B, J);
  const double eMin = *std::min_element(w.begin(), w.end());
  double sum = 0.0;
  for (auto& x : w) {
    x = std::exp(-(x - eMin) / T);
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return -eMin / T + std::log(sum);
}

}  // namespace

double partition_function(const Spectrum& spectrum, double B, double T, double J) {
  std::vector<double> w;
  return boltzmann_weights(spectrum, B, T, J, w);
}

ThermalState occupation_probabilities(const Spectrum& spectrum, double B, double T, double J) {
  ThermalState state{spectrum, B, T, J, {}, 0.0};
  state.logZ = boltzmann_weights(spectrum, B, T, J, state.probabilities);
  return state;
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

double shannon_entropy(const ThermalState& state) { return shannon_entropy(state.probabilities); }

}  // namespace otto
