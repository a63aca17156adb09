#include "tensor.hpp"

#include <algorithm>
#include <limits>

namespace nor {

double QTensor::tr3() const {
  const double z = q33();
  // (QQ) diagonal entries, then contract with Q row by row; off-diagonal
  // products appear twice.
  const double qq11 = q1 * q1 + q2 * q2 + q3 * q3;
  const double qq22 = q2 * q2 + q4 * q4 + q5 * q5;
  const double qq33 = q3 * q3 + q5 * q5 + z * z;
  const double qq12 = q1 * q2 + q2 * q4 + q3 * q5;
  const double qq13 = q1 * q3 + q2 * q5 + q3 * z;
  const double qq23 = q2 * q3 + q4 * q5 + q5 * z;
  return qq11 * q1 + qq22 * q4 + qq33 * z + 2.0 * (qq12 * q2 + qq13 * q3 + qq23 * q5);
}

MaterialParams MaterialParams::make(double B, double C, double L, double A, double lambda) {
  if (!(B > 0) || !(C > 0) || !(L > 0) || !(lambda > 0))
    fail(Errc::invalid_input, "material constants B, C, L, lambda must be positive");
  MaterialParams mp;
  mp.B = B;
  mp.C = C;
  mp.L = L;
  mp.lambda = lambda;
  mp.A = std::isnan(A) ? -B * B / (3.0 * C) : A;
  return mp;
}

double MaterialParams::s_plus() const {
  return (B + std::sqrt(B * B + 24.0 * std::abs(A) * C)) / (4.0 * C);
}

MaterialParams MaterialParams::with_lambda_bar_sq_scalar(double v) const {
  if (!(v >= 0)) fail(Errc::invalid_input, "lambda_bar_sq_scalar must be >= 0");
  MaterialParams mp = *this;
  mp.lambda = std::sqrt(v * L / (2.0 * C));
  return mp;
}

MaterialParams MaterialParams::with_lambda_bar_sq_full(double v) const {
  if (!(v >= 0)) fail(Errc::invalid_input, "lambda_bar_sq_full must be >= 0");
  MaterialParams mp = *this;
  mp.lambda = std::sqrt(v * L);
  return mp;
}

QTensor uniaxial(double s, const Vec3& n) {
  if (std::abs(norm(n) - 1.0) > 1e-12)
    fail(Errc::invalid_input, "uniaxial: director must be a unit vector");
  QTensor q;
  q.q1 = s * (n[0] * n[0] - 1.0 / 3.0);
  q.q2 = s * (n[0] * n[1]);
  q.q3 = s * (n[0] * n[2]);
  q.q4 = s * (n[1] * n[1] - 1.0 / 3.0);
  q.q5 = s * (n[1] * n[2]);
  return q;
}

double bulk_potential(const QTensor& q, const MaterialParams& mp) {
  const double t2 = q.tr2();
  const double t3 = q.tr3();
  return 0.5 * mp.A * t2 - mp.B / 3.0 * t3 + 0.25 * mp.C * t2 * t2;
}

QTensor bulk_gradient(const QTensor& q, const MaterialParams& mp) {
  const double z = q.q33();
  const double t2 = q.tr2();
  const double qq11 = q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
  const double qq22 = q.q2 * q.q2 + q.q4 * q.q4 + q.q5 * q.q5;
  const double qq12 = q.q1 * q.q2 + q.q2 * q.q4 + q.q3 * q.q5;
  const double qq13 = q.q1 * q.q3 + q.q2 * q.q5 + q.q3 * z;
  const double qq23 = q.q2 * q.q3 + q.q4 * q.q5 + q.q5 * z;
  const double third_t2 = t2 / 3.0;
  QTensor g;
  g.q1 = mp.A * q.q1 - mp.B * (qq11 - third_t2) + mp.C * t2 * q.q1;
  g.q2 = mp.A * q.q2 - mp.B * qq12 + mp.C * t2 * q.q2;
  g.q3 = mp.A * q.q3 - mp.B * qq13 + mp.C * t2 * q.q3;
  g.q4 = mp.A * q.q4 - mp.B * (qq22 - third_t2) + mp.C * t2 * q.q4;
  g.q5 = mp.A * q.q5 - mp.B * qq23 + mp.C * t2 * q.q5;
  return g;
}

double biaxiality(const QTensor& q, double tol) {
  const double t2 = q.tr2();
  if (!(std::sqrt(t2) > tol))
    fail(Errc::undefined_biaxiality, "biaxiality undefined: |Q| below tolerance");
  const double t3 = q.tr3();
  const double b2 = 1.0 - 6.0 * t3 * t3 / (t2 * t2 * t2);
  return std::clamp(b2, 0.0, 1.0);
}

namespace {
void check_frame(const Frame& f) {
  const double tol = 1e-12;
  bool ok = std::abs(norm(f.n1) - 1.0) <= tol && std::abs(norm(f.n2) - 1.0) <= tol &&
            std::abs(norm(f.z) - 1.0) <= tol && std::abs(dot(f.n1, f.n2)) <= tol &&
            std::abs(dot(f.n1, f.z)) <= tol && std::abs(dot(f.n2, f.z)) <= tol;
  if (ok) {
    const Vec3 c = cross(f.n1, f.n2);
    ok = std::abs(c[0] - f.z[0]) <= tol && std::abs(c[1] - f.z[1]) <= tol &&
         std::abs(c[2] - f.z[2]) <= tol;
  }
  if (!ok) fail(Errc::invalid_input, "embed_scalar_or: frame must be orthonormal right-handed");
}
}  // namespace

QTensor embed_scalar_or(double q, double q3, const Frame& f) {
  check_frame(f);
  QTensor out;
  auto add_outer = [&out](double w, const Vec3& n) {
    out.q1 += w * n[0] * n[0];
    out.q2 += w * n[0] * n[1];
    out.q3 += w * n[0] * n[2];
    out.q4 += w * n[1] * n[1];
    out.q5 += w * n[1] * n[2];
  };
  add_outer(q - q3, f.n1);
  add_outer(-q - q3, f.n2);
  add_outer(2.0 * q3, f.z);
  return out;
}

QTensor embed_planar(const PTensor& p, const MaterialParams& mp) {
  const double a = mp.B / (6.0 * mp.C);
  QTensor q;
  q.q1 = p.p + a;
  q.q2 = p.r;
  q.q3 = 0.0;
  q.q4 = -p.p + a;
  q.q5 = 0.0;
  return q;
}

PTensor extract_planar(const QTensor& q) {
  return PTensor{0.5 * (q.q1 - q.q4), q.q2};
}

}  // namespace nor
