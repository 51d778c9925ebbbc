#pragma once

// Brute-force reference: the two-spin Hamiltonian as a dense matrix in the
// product basis |m_a> (x) |m_b>, diagonalised by cyclic Jacobi rotations.
// Nothing here uses the multiplet formulas of spectrum.hpp.

#include <cstddef>
#include <vector>

#include "otto/spectrum.hpp"

namespace otto {

/// Square row-major matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double frobeniusNorm() const;
  double maxAbsAsymmetry() const;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

struct DenseHamiltonian {
  DenseMatrix matrix;
  double B = 0.0;
  double J = 0.0;

  std::size_t dim() const noexcept { return matrix.dim(); }
};

/// 2B (s1z (x) I + I (x) s2z) + 8J s1.s2, real symmetric.
DenseHamiltonian build_hamiltonian(const SpinPair& pair, double B, double J);

/// h0 = s1z (x) I + I (x) s2z, so that the free Hamiltonian is 2B h0.
DenseMatrix zeeman_operator(const SpinPair& pair);

struct EigenDecomposition {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< column j belongs to values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi. Stops when off(A) < 1e-12 ||A||_F; throws
/// std::runtime_error (with the remaining off-diagonal norm) after 100 sweeps.
EigenDecomposition jacobi_eigen(const DenseMatrix& a);

/// Ascending eigenvalues of h.
std::vector<double> eigen_spectrum(const DenseHamiltonian& h);

/// max_j || H v_j - lambda_j v_j ||_2.
double max_residual(const DenseMatrix& a, const EigenDecomposition& eig);

/// Max |oracle eigenvalue - 8 s1 s2 J - analytic energy| after sorting both.
double compare_with_analytic(const SpinPair& pair, double B, double J);

/// ln Tr exp(-(H - 8 s1 s2 J)/T) from the oracle eigenvalues, i.e. on the
/// same energy origin as the analytic spectrum.
double oracle_log_partition(const SpinPair& pair, double B, double T, double J);

/// exp(-H/T) / Z built from the eigendecomposition.
DenseMatrix thermal_density_matrix(const DenseHamiltonian& h, double T);

/// Tr[a b].
double trace_product(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace otto
