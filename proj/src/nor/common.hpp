#ifndef NOR_COMMON_HPP
#define NOR_COMMON_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nor {

// Error categories, mirrored one-to-one by the C API status codes.
enum class Errc {
  invalid_input = 1,
  config = 2,
  divergence = 3,
  timeout = 4,
  solver = 5,
  reflection_inconsistency = 6,
  not_on_planar_manifold = 7,
  no_bifurcation_in_range = 8,
  undefined_biaxiality = 9,
  io = 10,
  internal = 11,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double sq(double x) { return x * x; }

}  // namespace nor

#endif
