#include "navdop/types.hpp"

#include <cmath>

namespace navdop {

Mat2 invert2x2(const Mat2& m, const char* context) {
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale <= 0.0 || std::abs(det) < 1e-300 * scale ||
      std::abs(det) / (scale * scale) < 1e-15 * 1e-15) {
    // smallest eigenvalue of the symmetric part, for the error report
    const double tr = m(0, 0) + m(1, 1);
    const double off = 0.5 * (m(0, 1) + m(1, 0));
    const double d = std::sqrt(0.25 * (m(0, 0) - m(1, 1)) * (m(0, 0) - m(1, 1)) + off * off);
    throw RankDeficiencyError(std::string(context) + ": singular 2x2 block", 0.5 * tr - d);
  }
  Mat2 inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

double wrap_angle(double angle) {
  double a = std::remainder(angle, constants::kTwoPi);
  if (a <= -constants::kPi) a += constants::kTwoPi;
  return a;
}

}  // namespace navdop
