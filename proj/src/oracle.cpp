#include "otto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace otto {

double DenseMatrix::frobeniusNorm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double DenseMatrix::maxAbsAsymmetry() const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.dim();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  DenseMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

namespace {

// Single-spin operators in the basis m = s, s-1, ..., -s (doubled: tm = ts - 2a).
struct SpinOperators {
  DenseMatrix z;
  DenseMatrix plus;   // s+
  DenseMatrix minus;  // s-
};

SpinOperators spin_operators(int twoS) {
  const std::size_t d = static_cast<std::size_t>(twoS) + 1;
  SpinOperators ops{DenseMatrix(d), DenseMatrix(d), DenseMatrix(d)};
  for (std::size_t a = 0; a < d; ++a) {
    const int tm = twoS - 2 * static_cast<int>(a);
    ops.z(a, a) = 0.5 * tm;
    if (a > 0) {
      // <m+1| s+ |m> = sqrt(s(s+1) - m(m+1))
      const double c = 0.5 * std::sqrt(static_cast<double>(twoS * (twoS + 2) - tm * (tm + 2)));
      ops.plus(a - 1, a) = c;
      ops.minus(a, a - 1) = c;
    }
  }
  return ops;
}

// (A (x) I)(I (x) B) element accumulation: out += c * (A (x) B).
void add_kron(DenseMatrix& out, double c, const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      if (a(i, j) == 0.0) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          if (b(k, l) == 0.0) continue;
          out(i * db + k, j * db + l) += c * a(i, j) * b(k, l);
        }
    }
}

DenseMatrix identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

}  // namespace

DenseMatrix zeeman_operator(const SpinPair& pair) {
  const auto s1 = spin_operators(pair.twoS1());
  const auto s2 = spin_operators(pair.twoS2());
  const std::size_t n = pair.levelCount();
  DenseMatrix h0(n);
  add_kron(h0, 1.0, s1.z, identity(s2.z.dim()));
  add_kron(h0, 1.0, identity(s1.z.dim()), s2.z);
  return h0;
}

DenseHamiltonian build_hamiltonian(const SpinPair& pair, double B, double J) {
  if (!(B >= 0.0) || !(J >= 0.0)) throw std::invalid_argument("build_hamiltonian needs B, J >= 0");
  const auto s1 = spin_operators(pair.twoS1());
  const auto s2 = spin_operators(pair.twoS2());
  const std::size_t n = pair.levelCount();
  DenseMatrix h(n);
  add_kron(h, 2.0 * B, s1.z, identity(s2.z.dim()));
  add_kron(h, 2.0 * B, identity(s1.z.dim()), s2.z);
  // s1.s2 = s1z s2z + (s1+ s2- + s1- s2+) / 2
  add_kron(h, 8.0 * J, s1.z, s2.z);
  add_kron(h, 4.0 * J, s1.plus, s2.minus);
  add_kron(h, 4.0 * J, s1.minus, s2.plus);
  return DenseHamiltonian{std::move(h), B, J};
}

EigenDecomposition jacobi_eigen(const DenseMatrix& input) {
  constexpr int kMaxSweeps = 100;
  const std::size_t n = input.dim();
  DenseMatrix a = input;
  DenseMatrix v = identity(n);
  const double norm = input.frobeniusNorm();

  auto off = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; off() >= 1e-12 * norm && norm > 0.0; ++sweep) {
    if (sweep == kMaxSweeps) {
      throw std::runtime_error("Jacobi eigensolver did not converge after " + std::to_string(kMaxSweeps) +
                               " sweeps; off-diagonal norm " + std::to_string(off()));
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  EigenDecomposition out{std::vector<double>(n), DenseMatrix(n), sweep};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> eigen_spectrum(const DenseHamiltonian& h) { return jacobi_eigen(h.matrix).values; }

double max_residual(const DenseMatrix& a, const EigenDecomposition& eig) {
  const std::size_t n = a.dim();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double hv = 0.0;
      for (std::size_t k = 0; k < n; ++k) hv += a(i, k) * eig.vectors(k, j);
      const double r = hv - eig.values[j] * eig.vectors(i, j);
      r2 += r * r;
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  return worst;
}

double compare_with_analytic(const SpinPair& pair, double B, double J) {
  const auto oracle = eigen_spectrum(build_hamiltonian(pair, B, J));
  auto analytic = Spectrum(pair).energies(B, J);
  std::sort(analytic.begin(), analytic.end());
  // 8 s1 s2 J = 2 (2s1)(2s2) J
  const double shift = 2.0 * pair.twoS1() * pair.twoS2() * J;
  double dev = 0.0;
  for (std::size_t i = 0; i < oracle.size(); ++i) dev = std::max(dev, std::abs(oracle[i] - shift - analytic[i]));
  return dev;
}

double oracle_log_partition(const SpinPair& pair, double B, double T, double J) {
  if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive");
  const auto ev = eigen_spectrum(build_hamiltonian(pair, B, J));
  const double shift = 2.0 * pair.twoS1() * pair.twoS2() * J;
  double z = 0.0;
  for (double e : ev) z += std::exp(-(e - ev.front()) / T);
  return std::log(z) - (ev.front() - shift) / T;
}

DenseMatrix thermal_density_matrix(const DenseHamiltonian& h, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive");
  const auto eig = jacobi_eigen(h.matrix);
  const std::size_t n = h.dim();
  std::vector<double> w(n);
  double z = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = std::exp(-(eig.values[j] - eig.values.front()) / T);
    z += w[j];
  }
  DenseMatrix rho(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double p = w[j] / z;
    for (std::size_t r = 0; r < n; ++r) {
      const double vr = eig.vectors(r, j) * p;
      if (vr == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) rho(r, c) += vr * eig.vectors(c, j);
    }
  }
  return rho;
}

double trace_product(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
  return t;
}

}  // namespace otto
