#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace splitcheck::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerance used to accept a matrix as skew-Hermitian (entrywise on M + M^H).
inline constexpr double kSkewHermitianTol = 1e-13;

/// e^{tM} by scaling and squaring with diagonal Pade approximants of degree
/// 3, 5, 7, 9 or 13 (Higham's 2005 selection thresholds).
///
/// Throws DimensionMismatch for non-square input and OverflowGuard when
/// |t| * ||M||_1 exceeds 1e6 or M has non-finite entries.
ComplexMatrix expm(const ComplexMatrix& m, double t = 1.0);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Spectral norm (largest singular value).
double op_norm(const ComplexMatrix& m);

double frobenius(const ComplexMatrix& m);

/// ||U^H U - I||_2.
double unitarity_defect(const ComplexMatrix& u);

bool is_skew_hermitian(const ComplexMatrix& m, double tol = kSkewHermitianTol);

// A matrix checked on construction to satisfy M + M^H = 0 within
// kSkewHermitianTol; its exponential is unitary.
class SkewHermitian {
 public:
  explicit SkewHermitian(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Deterministic random skew-Hermitian matrix (G - G^H)/2 with the real and
/// imaginary parts of G uniform on [-1, 1], drawn from std::mt19937_64(seed).
ComplexMatrix random_skew_hermitian(int n, std::uint64_t seed);

/// Minimum-Frobenius-norm P3 with [P1,P2] + [P1,P3] + [P2,P3] = 0, i.e.
/// [P1+P2, P3] = -[P1,P2], from the Kronecker-vectorised system.
/// Throws ResidualTooLarge when the re-evaluated residual exceeds
/// 1e-10 * (1 + ||[P1,P2]||).
ComplexMatrix solve_second_order_constraint(const ComplexMatrix& p1, const ComplexMatrix& p2);

/// ||[P1,P2] + [P1,P3] + [P2,P3]||_2.
double second_order_residual(const ComplexMatrix& p1, const ComplexMatrix& p2,
                             const ComplexMatrix& p3);

}  // namespace splitcheck::linalg
