#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace navdop {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

namespace constants {
// IAU 2012 definition of the astronomical unit.
inline constexpr double kAuKm = 149597870.7;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kArcsecToRad = kDegToRad / 3600.0;
inline constexpr double kMasToRad = kArcsecToRad * 1e-3;
inline constexpr double kEarthRadiusKm = 6378.0;
inline constexpr double kEarthRotationRadDay = kTwoPi;        // sidereal/solar distinction ignored
inline constexpr double kEarthMeanMotionRadDay = kTwoPi / 365.25;
// PN-range noise strength at 1 AU, 1 m (1-sigma) over a 60 s integration.
inline constexpr double kRangeNoiseSqrtHr = 8.6e-13;
}  // namespace constants

// Thrown when inputs violate a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an iterative or quadrature computation fails to meet its
// declared tolerance; carries the tolerance actually achieved.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_tol)
      : std::runtime_error(what), achieved_tolerance(achieved_tol) {}
  double achieved_tolerance;
};

// Thrown on singular Schur complements / velocity blocks; carries the
// offending (smallest) eigenvalue so callers can report rank diagnostics.
class RankDeficiencyError : public std::runtime_error {
 public:
  RankDeficiencyError(const std::string& what, double eig)
      : std::runtime_error(what), offending_eigenvalue(eig) {}
  double offending_eigenvalue;
};

inline Mat2 rotation2(double angle) {
  Mat2 r;
  const double c = std::cos(angle), s = std::sin(angle);
  r << c, -s, s, c;
  return r;
}

// 2x2 inverse by Cramer's rule. Throws RankDeficiencyError when the
// determinant underflows relative to the matrix scale.
Mat2 invert2x2(const Mat2& m, const char* context);

// Normalize an angle to (-pi, pi].
double wrap_angle(double angle);

}  // namespace navdop
