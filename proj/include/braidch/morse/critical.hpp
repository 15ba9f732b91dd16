#pragma once

#include <vector>

#include "braidch/morse/strand_system.hpp"

namespace braidch::morse {

struct CriticalPoint {
  double t = 0.0;
  double theta = 0.0;   // both in [0, 1)
  double value = 0.0;
  int index = 0;        // Morse index, 0..2
  double residual = 0.0;  // |grad g| after refinement
};

// Critical points of g_ij on T^2, seeded from the radial profile (angles
// aligned and anti-aligned with f_i - f_j at each radial extremum) and
// refined by 2D Newton to |grad| < tol_crit. Under the one-minimum/
// one-maximum hypothesis the result is exactly 4 points with Morse index
// multiset {0, 1, 1, 2}; any other outcome raises GeometryError.
std::vector<CriticalPoint> critical_points(const DiffFunction& g,
                                           const MorseTolerances& tol = {});

// distance on the flat unit torus
double torus_dist(double t0, double th0, double t1, double th1);

}  // namespace braidch::morse
