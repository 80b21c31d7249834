#pragma once

#include <array>
#include <functional>
#include <vector>

#include "navdop/types.hpp"

namespace navdop::quad {

// 64-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre64 {
  std::array<double, 64> nodes;
  std::array<double, 64> weights;
};
const GaussLegendre64& gl64();

struct PanelResult {
  Mat4 value = Mat4::Zero();
  double achieved_rel = 0.0;  // Frobenius difference between refinements
};

// Composite GL64 integration of a matrix-valued integrand over fixed panels,
// with one panel-halving Richardson check against rel_tol. Throws
// NumericalError (carrying the achieved tolerance) when the check fails.
PanelResult integrate_matrix(const std::function<Mat4(double)>& f,
                             const std::vector<std::pair<double, double>>& panels, double rel_tol,
                             const char* context);

}  // namespace navdop::quad
