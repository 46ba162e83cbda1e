#pragma once

#include <Eigen/Dense>

#include "spinnet/linalg.hpp"

namespace spinnet {

/// 4x4 two-qubit density matrix, validated at construction: Hermitian and
/// unit trace within tol::state, eigenvalues >= -tol::eig_clamp.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(Eigen::Matrix4cd rho);

  const Eigen::Matrix4cd& matrix() const { return rho_; }

 private:
  Eigen::Matrix4cd rho_;
};

/// Spin-flipped state (Y tensor Y) conj(rho) (Y tensor Y).
Eigen::Matrix4cd spin_flip(const TwoQubitDensity& rho);

/// Wootters concurrence: with lambda_i the eigenvalues of rho * spin_flip(rho)
/// in descending order (imaginary parts below 1e-9 discarded, negatives above
/// -tol::eig_clamp clamped to zero),
///   C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).
double concurrence(const TwoQubitDensity& rho);

/// Concurrence of a normalized two-qubit pure state (psi00, psi01, psi10,
/// psi11): C = 2 |psi00 psi11 - psi01 psi10|. Matches concurrence() on the
/// outer product; costs O(1) instead of an eigensolve.
double concurrence_of_pure(const Eigen::Vector4cd& psi);

/// cos(theta)|00> + sin(theta)|11> on labels (A1, B1); theta in [0, pi/2].
QuantumState pure_pair(double theta);

/// Werner state f |Phi+><Phi+| + (1-f)/3 (|Phi-><Phi-| + |Psi+><Psi+| +
/// |Psi-><Psi-|), f in [1/4, 1]. Its concurrence is max(0, 2f - 1).
TwoQubitDensity werner(double fidelity);

}  // namespace spinnet
