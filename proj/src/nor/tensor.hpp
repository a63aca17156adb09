#ifndef NOR_TENSOR_HPP
#define NOR_TENSOR_HPP

#include <array>
#include <limits>

#include "common.hpp"

namespace nor {

// Symmetric traceless 3x3 order parameter in five-component storage:
//   q1 = Q11, q2 = Q12, q3 = Q13, q4 = Q22, q5 = Q23, Q33 = -q1 - q4.
// Symmetry and tracelessness hold by construction, so they cannot drift
// during time stepping.
struct QTensor {
  double q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0;

  double q33() const { return -q1 - q4; }

  // |Q|^2 = tr Q^2 = sum_ij Qij^2
  double tr2() const {
    const double z = q33();
    return q1 * q1 + q4 * q4 + z * z + 2.0 * (q2 * q2 + q3 * q3 + q5 * q5);
  }

  // tr Q^3 = Qij Qjk Qki
  double tr3() const;

  std::array<double, 9> matrix() const {
    const double z = q33();
    return {q1, q2, q3, q2, q4, q5, q3, q5, z};
  }

  QTensor& operator+=(const QTensor& o) {
    q1 += o.q1; q2 += o.q2; q3 += o.q3; q4 += o.q4; q5 += o.q5;
    return *this;
  }
  QTensor& operator-=(const QTensor& o) {
    q1 -= o.q1; q2 -= o.q2; q3 -= o.q3; q4 -= o.q4; q5 -= o.q5;
    return *this;
  }
  QTensor& operator*=(double s) {
    q1 *= s; q2 *= s; q3 *= s; q4 *= s; q5 *= s;
    return *this;
  }
  friend QTensor operator+(QTensor a, const QTensor& b) { return a += b; }
  friend QTensor operator-(QTensor a, const QTensor& b) { return a -= b; }
  friend QTensor operator*(double s, QTensor a) { return a *= s; }
};

inline double max_abs_component(const QTensor& q) {
  double m = std::abs(q.q1);
  m = std::max(m, std::abs(q.q2));
  m = std::max(m, std::abs(q.q3));
  m = std::max(m, std::abs(q.q4));
  m = std::max(m, std::abs(q.q5));
  return std::max(m, std::abs(q.q33()));
}

// Symmetric traceless 2x2 tensor of the planar reduction:
//   P11 = p, P12 = r, P22 = -p, |P|^2 = 2(p^2 + r^2).
struct PTensor {
  double p = 0, r = 0;
  double tr2() const { return 2.0 * (p * p + r * r); }
};

// Material constants of the bulk potential and elastic energy, in the units
// the paper quotes them in (A, B, C in N m^-2, L in N, lambda in m).
struct MaterialParams {
  double A;       // reduced temperature; defaults to -B^2/(3C)
  double B;       // bulk constant
  double C;       // bulk constant
  double L;       // elastic constant
  double lambda;  // edge-length scale of the physical domain

  static MaterialParams make(double B = 0.64e4, double C = 0.35e4, double L = 1e-11,
                             double A = std::numeric_limits<double>::quiet_NaN(),
                             double lambda = 1e-7);

  // Bulk-minimizing uniaxial order parameter (B + sqrt(B^2 + 24|A|C)) / 4C.
  double s_plus() const;

  // Half the minimizing order parameter at A = -B^2/3C; the scalar problem's
  // well positions are +-q0.
  double q0() const { return B / (2.0 * C); }

  // Exponential rate of the short-edge boundary profile, mu = lambda B / sqrt(C L).
  double mu_g() const { return lambda * B / std::sqrt(C * L); }

  // Rescaled squared sizes; both conventions are used by different experiments
  // and are kept separate on purpose.
  double lambda_bar_sq_scalar() const { return 2.0 * C * lambda * lambda / L; }
  double lambda_bar_sq_full() const { return lambda * lambda / L; }

  MaterialParams with_lambda_bar_sq_scalar(double v) const;
  MaterialParams with_lambda_bar_sq_full(double v) const;
};

// Orthonormal right-handed frame used by the scalar embedding.
struct Frame {
  Vec3 n1{1, 0, 0};
  Vec3 n2{0, 1, 0};
  Vec3 z{0, 0, 1};
};

// Q_u = s (n (x) n - I/3). Throws invalid_input unless |n| = 1 within 1e-12.
QTensor uniaxial(double s, const Vec3& n);

// f_B(Q) = (A/2) tr Q^2 - (B/3) tr Q^3 + (C/4) (tr Q^2)^2
double bulk_potential(const QTensor& q, const MaterialParams& mp);

// Algebraic bulk gradient G = A Q - B (QQ - |Q|^2 I/3) + C |Q|^2 Q.
// The gradient-flow right-hand side is dQ/dt = Lap Q - (lambda^2/L) G.
QTensor bulk_gradient(const QTensor& q, const MaterialParams& mp);

// beta^2 = 1 - 6 (tr Q^3)^2 / |Q|^6, clamped to [0,1].
// Undefined (throws) when |Q| <= tol: 0/0 carries no information.
double biaxiality(const QTensor& q, double tol = 1e-10);

// Q = q (n1 (x) n1 - n2 (x) n2) + q3 (2 z (x) z - n1 (x) n1 - n2 (x) n2).
// Frame must be orthonormal and right-handed within 1e-12.
QTensor embed_scalar_or(double q, double q3, const Frame& f = Frame{});

// Q = [ P + (B/6C) I2 , 0 ; 0 , -B/3C ]
QTensor embed_planar(const PTensor& p, const MaterialParams& mp);

// Inverse of embed_planar on the planar manifold: p = (Q11 - Q22)/2, r = Q12.
PTensor extract_planar(const QTensor& q);

}  // namespace nor

#endif
