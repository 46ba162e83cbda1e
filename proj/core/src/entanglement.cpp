#include "spinnet/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

// (Y tensor Y) in the computational basis |00>,|01>,|10>,|11>. Real.
const Eigen::Matrix4cd& y_tensor_y() {
  static const Eigen::Matrix4cd yy = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return yy;
}

}  // namespace

TwoQubitDensity::TwoQubitDensity(Eigen::Matrix4cd rho) : rho_(std::move(rho)) {
  if ((rho_ - rho_.adjoint().eval()).cwiseAbs().maxCoeff() > tol::state)
    throw input_error("two-qubit density is not Hermitian within tolerance");
  if (std::abs(rho_.trace().real() - 1.0) > tol::state || std::abs(rho_.trace().imag()) > tol::state)
    throw input_error("two-qubit density trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho_);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eigensolver failed on two-qubit density");
  if (solver.eigenvalues().minCoeff() < -tol::eig_clamp)
    throw input_error("two-qubit density has a negative eigenvalue beyond tolerance");
}

Eigen::Matrix4cd spin_flip(const TwoQubitDensity& rho) {
  return y_tensor_y() * rho.matrix().conjugate() * y_tensor_y();
}

double concurrence(const TwoQubitDensity& rho) {
  const Eigen::Matrix4cd product = rho.matrix() * spin_flip(rho);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eigensolver failed on rho * spin_flip(rho)");

  std::array<double, 4> lambda{};
  for (int k = 0; k < 4; ++k) {
    const Complex ev = solver.eigenvalues()(k);
    // The product has a real non-negative spectrum; residual imaginary
    // parts and small negatives are numerical noise.
    double re = ev.real();
    if (std::abs(ev.imag()) > 1e-9)
      throw numeric_error("concurrence eigenvalue has a large imaginary part");
    if (re < 0.0) re = 0.0;
    lambda[static_cast<size_t>(k)] = re;
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  // The square root magnifies eigensolver noise on rank-deficient products
  // (sqrt of a 1e-16 ghost is 1e-8), so snap near-zero eigenvalues to zero
  // relative to the dominant one before taking roots.
  const double floor = lambda[0] * tol::spectral_noise;
  for (double& v : lambda)
    if (v < floor) v = 0.0;
  const double c = std::sqrt(lambda[0]) - std::sqrt(lambda[1]) - std::sqrt(lambda[2]) -
                   std::sqrt(lambda[3]);
  return std::max(0.0, c);
}

double concurrence_of_pure(const Eigen::Vector4cd& psi) {
  return 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
}

QuantumState pure_pair(double theta) {
  if (theta < 0.0 || theta > M_PI / 2.0 + 1e-12)
    throw input_error("pure pair angle must lie in [0, pi/2]");
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::cos(theta);
  v(3) = std::sin(theta);
  return QuantumState::pure(QubitRegister({"A1", "B1"}), std::move(v));
}

TwoQubitDensity werner(double fidelity) {
  if (fidelity < 0.25 - 1e-12 || fidelity > 1.0 + 1e-12)
    throw input_error("Werner fidelity must lie in [1/4, 1]");
  const double inv = std::sqrt(0.5);
  Eigen::Vector4cd phi_plus(inv, 0.0, 0.0, inv);
  Eigen::Vector4cd phi_minus(inv, 0.0, 0.0, -inv);
  Eigen::Vector4cd psi_plus(0.0, inv, inv, 0.0);
  Eigen::Vector4cd psi_minus(0.0, inv, -inv, 0.0);
  const double rest = (1.0 - fidelity) / 3.0;
  Eigen::Matrix4cd rho = fidelity * phi_plus * phi_plus.adjoint() +
                         rest * (phi_minus * phi_minus.adjoint() +
                                 psi_plus * psi_plus.adjoint() +
                                 psi_minus * psi_minus.adjoint());
  return TwoQubitDensity(std::move(rho));
}

}  // namespace spinnet
