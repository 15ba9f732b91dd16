#pragma once

#include <vector>

#include "braidch/config.hpp"

namespace braidch::morse {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const;
};

struct Mat2 {
  // symmetric 2x2: [[a, b], [b, c]]
  double a = 0.0, b = 0.0, c = 0.0;

  double det() const { return a * c - b * b; }
  // eigenvalues ascending, with unit eigenvectors
  void eigen(double lam[2], Vec2 vec[2]) const;
};

// Closed curve S^1 -> R^2 as a truncated Fourier series per coordinate:
// f(t) = sum_h (cx[h] cos 2*pi*h*t + sx[h] sin 2*pi*h*t, same with cy/sy).
// Index 0 of the sine arrays is inert.
struct FourierCurve {
  std::vector<double> cx, sx, cy, sy;

  Vec2 eval(double t) const;
  Vec2 d1(double t) const;
  Vec2 d2(double t) const;

  FourierCurve minus(const FourierCurve& o) const;  // coefficient-wise difference
};

// n pairwise-disjoint closed strand curves. Only the differences f_i - f_j
// matter downstream, so no containment in a disk is enforced, just pairwise
// separation.
struct StrandSystem {
  int n = 0;
  std::vector<FourierCurve> strands;
};

// Throws GeometryError when min_t |f_i(t) - f_j(t)| <= sep_min for some pair.
void validate_separation(const StrandSystem& s, const MorseTolerances& tol = {});

// The difference function g_ij(t, theta) = <f_i(t) - f_j(t),
// (cos 2*pi*theta, sin 2*pi*theta)> on the torus, with closed-form derivatives.
class DiffFunction {
 public:
  DiffFunction(const StrandSystem& s, int i, int j);

  int i() const { return i_; }
  int j() const { return j_; }

  Vec2 diff(double t) const { return d_.eval(t); }
  Vec2 diff_d1(double t) const { return d_.d1(t); }
  Vec2 diff_d2(double t) const { return d_.d2(t); }

  double value(double t, double theta) const;
  Vec2 grad(double t, double theta) const;    // (d/dt, d/dtheta)
  Mat2 hessian(double t, double theta) const;

  double radial(double t) const { return d_.eval(t).norm(); }

 private:
  int i_, j_;
  FourierCurve d_;  // f_i - f_j
};

struct RadialCritical {
  double t = 0.0;
  double r = 0.0;       // |f_i - f_j| at t
  double r_second = 0.0;
  bool is_min = false;
};

struct RadialProfile {
  std::vector<RadialCritical> points;  // sorted by t
  int min_count = 0;
  int max_count = 0;

  // exactly one minimum and one maximum: the generic position the braid
  // generator inventory needs
  bool one_min_one_max() const { return min_count == 1 && max_count == 1; }
};

// All critical points of r_ij(t) = |f_i(t) - f_j(t)| on S^1: dense sampling
// followed by Newton refinement on (d/dt) r^2. Throws GeometryError on
// degenerate critical points or separation violations.
RadialProfile radial_profile(const DiffFunction& g, const MorseTolerances& tol = {});
RadialProfile radial_profile(const StrandSystem& s, int i, int j,
                             const MorseTolerances& tol = {});

}  // namespace braidch::morse
