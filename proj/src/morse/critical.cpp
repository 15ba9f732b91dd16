#include "braidch/morse/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "braidch/errors.hpp"

namespace braidch::morse {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap01(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}
}  // namespace

double torus_dist(double t0, double th0, double t1, double th1) {
  auto axis = [](double a, double b) {
    double d = std::abs(wrap01(a) - wrap01(b));
    return std::min(d, 1.0 - d);
  };
  return std::hypot(axis(t0, t1), axis(th0, th1));
}

std::vector<CriticalPoint> critical_points(const DiffFunction& g, const MorseTolerances& tol) {
  RadialProfile profile = radial_profile(g, tol);
  const bool one_pair = profile.one_min_one_max();

  std::vector<CriticalPoint> cps;
  for (const RadialCritical& rc : profile.points) {
    // the angle is aligned or anti-aligned with f_i - f_j at the extremum
    Vec2 d = g.diff(rc.t);
    double psi = std::atan2(d.y, d.x);
    for (int branch = 0; branch < 2; ++branch) {
      double t = rc.t;
      double theta = wrap01(psi / kTwoPi + 0.5 * branch);
      double residual = 0.0;
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        Vec2 gr = g.grad(t, theta);
        residual = gr.norm();
        if (residual < tol.tol_crit) {
          converged = true;
          break;
        }
        Mat2 h = g.hessian(t, theta);
        double det = h.det();
        if (std::abs(det) < tol.tol_nondeg)
          throw GeometryError("degenerate Hessian during critical-point refinement");
        t -= (h.c * gr.x - h.b * gr.y) / det;
        theta -= (-h.b * gr.x + h.a * gr.y) / det;
      }
      if (!converged) throw GeometryError("critical-point refinement did not converge");

      CriticalPoint cp;
      cp.t = wrap01(t);
      cp.theta = wrap01(theta);
      cp.value = g.value(cp.t, cp.theta);
      cp.residual = residual;
      Mat2 h = g.hessian(cp.t, cp.theta);
      if (std::abs(h.det()) < tol.tol_nondeg)
        throw GeometryError("degenerate Hessian at critical point");
      double lam[2];
      Vec2 vec[2];
      h.eigen(lam, vec);
      if (std::abs(lam[0]) < tol.tol_nondeg || std::abs(lam[1]) < tol.tol_nondeg)
        throw GeometryError("near-zero Hessian eigenvalue at critical point");
      cp.index = (lam[0] < 0 ? 1 : 0) + (lam[1] < 0 ? 1 : 0);
      cps.push_back(cp);
    }
  }

  for (std::size_t p = 0; p < cps.size(); ++p)
    for (std::size_t r = p + 1; r < cps.size(); ++r)
      if (torus_dist(cps[p].t, cps[p].theta, cps[r].t, cps[r].theta) < 1e-6)
        throw GeometryError("two critical-point refinements coincide");

  if (one_pair) {
    if (cps.size() != 4)
      throw GeometryError("expected 4 critical points under the one-min-one-max profile, found " +
                          std::to_string(cps.size()));
    int histogram[3] = {0, 0, 0};
    for (const auto& cp : cps) ++histogram[cp.index];
    if (histogram[0] != 1 || histogram[1] != 2 || histogram[2] != 1)
      throw GeometryError("unexpected Morse index multiset for a generic pair");
  }

  std::sort(cps.begin(), cps.end(), [](const CriticalPoint& x, const CriticalPoint& y) {
    return x.t != y.t ? x.t < y.t : x.theta < y.theta;
  });
  return cps;
}

}  // namespace braidch::morse
