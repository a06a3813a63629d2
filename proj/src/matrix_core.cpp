#include "splitcheck/matrix_core.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "splitcheck/errors.hpp"

namespace splitcheck::linalg {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
}

void require_same_dims(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
  require_square(a, who);
  require_square(b, who);
  if (a.rows() != b.rows()) {
    throw DimensionMismatch(std::string(who) + ": dimensions " + std::to_string(a.rows()) +
                            " and " + std::to_string(b.rows()) + " differ");
  }
}

double norm1(const ComplexMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Pade (m,m) numerator/denominator pieces: e^A ~ (V - U)^{-1} (V + U).
template <std::size_t N>
void pade_low(const ComplexMatrix& a, const std::array<double, N>& b, ComplexMatrix& u,
              ComplexMatrix& v) {
  const auto n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix odd = b[1] * id;
  ComplexMatrix even = b[0] * id;
  ComplexMatrix power = id;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    odd += b[k + 1] * power;
    even += b[k] * power;
  }
  u = a * odd;
  v = even;
}

void pade13(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  const auto n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix inner_u = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const ComplexMatrix inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

constexpr double kOverflowGuard = 1e6;

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m, double t) {
  require_square(m, "expm");
  const auto n = m.rows();
  if (!m.allFinite() || !std::isfinite(t)) throw OverflowGuard("expm: non-finite input");
  if (t == 0.0 || n == 0) return ComplexMatrix::Identity(n, n);

  const ComplexMatrix a = t * m;
  const double nrm = norm1(a);
  if (nrm > kOverflowGuard) {
    throw OverflowGuard("expm: |t|*||M||_1 = " + std::to_string(nrm) + " exceeds guard");
  }
  if (nrm == 0.0) return ComplexMatrix::Identity(n, n);

  ComplexMatrix u, v;
  int squarings = 0;
  if (nrm <= kTheta3) {
    pade_low(a, kPade3, u, v);
  } else if (nrm <= kTheta5) {
    pade_low(a, kPade5, u, v);
  } else if (nrm <= kTheta7) {
    pade_low(a, kPade7, u, v);
  } else if (nrm <= kTheta9) {
    pade_low(a, kPade9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / kTheta13))));
    pade13(a * std::ldexp(1.0, -squarings), u, v);
  }
  ComplexMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dims(a, b, "commutator");
  return a * b - b * a;
}

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity_defect");
  return op_norm(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

bool is_skew_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m + m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SkewHermitian::SkewHermitian(ComplexMatrix m) : m_(std::move(m)) {
  require_square(m_, "SkewHermitian");
  if (!is_skew_hermitian(m_)) throw InvalidArgument("SkewHermitian: M + M^H != 0");
}

ComplexMatrix random_skew_hermitian(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("random_skew_hermitian: n must be >= 1");
  std::mt19937_64 rng(seed);
  // Explicit 53-bit mapping instead of std::uniform_real_distribution so the
  // stream is identical across standard library implementations.
  auto uniform = [&rng] { return std::ldexp(static_cast<double>(rng() >> 11), -53) * 2.0 - 1.0; };
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = uniform();
      const double im = uniform();
      g(i, j) = Complex(re, im);
    }
  }
  ComplexMatrix m = 0.5 * (g - g.adjoint());
  // Exact skew-Hermitian symmetry, not just to rounding.
  for (int i = 0; i < n; ++i) {
    m(i, i) = Complex(0.0, m(i, i).imag());
    for (int j = i + 1; j < n; ++j) m(j, i) = -std::conj(m(i, j));
  }
  return m;
}

double second_order_residual(const ComplexMatrix& p1, const ComplexMatrix& p2,
                             const ComplexMatrix& p3) {
  return op_norm(commutator(p1, p2) + commutator(p1, p3) + commutator(p2, p3));
}

ComplexMatrix solve_second_order_constraint(const ComplexMatrix& p1, const ComplexMatrix& p2) {
  require_same_dims(p1, p2, "solve_second_order_constraint");
  const auto n = p1.rows();
  const ComplexMatrix sum = p1 + p2;
  const ComplexMatrix rhs_matrix = -commutator(p1, p2);

  // Column-major vec: vec(M X - X M) = (I (x) M - M^T (x) I) vec(X).
  const auto nn = n * n;
  ComplexMatrix kron = ComplexMatrix::Zero(nn, nn);
  for (Eigen::Index col = 0; col < n; ++col) {
    kron.block(col * n, col * n, n, n) += sum;
    for (Eigen::Index row = 0; row < n; ++row) {
      kron.block(row * n, col * n, n, n) -= sum(col, row) * ComplexMatrix::Identity(n, n);
    }
  }
  const ComplexVector rhs = rhs_matrix.reshaped();

  ComplexMatrix p3 = ComplexMatrix::Zero(n, n);
  if (rhs.norm() > 0.0) {
    Eigen::JacobiSVD<ComplexMatrix> svd(kron, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    p3 = svd.solve(rhs).reshaped(n, n);
  }

  const double residual = second_order_residual(p1, p2, p3);
  const double gate = 1e-10 * (1.0 + op_norm(rhs_matrix));
  if (!(residual <= gate)) {
    throw ResidualTooLarge("solve_second_order_constraint: residual " + std::to_string(residual) +
                           " exceeds " + std::to_string(gate));
  }
  return p3;
}

}  // namespace splitcheck::linalg
