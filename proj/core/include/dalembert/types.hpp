#pragma once

#include <Eigen/Dense>

namespace dalembert {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Phase-space point z = (t, x, v): time, position and velocity in the
/// truncated configuration space. Covectors share the same coordinate
/// representation as vectors (see space.hpp for the identification).
struct PhasePoint {
  double t = 0.0;
  Vector x;
  Vector v;
};

}  // namespace dalembert
