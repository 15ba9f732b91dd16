#include "braidch/morse/flow.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "braidch/errors.hpp"

namespace braidch::morse {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

struct Branches {
  Vec2 dirs[4];
  int count = 0;
};

Branches branch_dirs(const DiffFunction& g, const CriticalPoint& cp, bool descending) {
  Mat2 h = g.hessian(cp.t, cp.theta);
  double lam[2];
  Vec2 vec[2];
  h.eigen(lam, vec);
  Branches br;
  for (int e = 0; e < 2; ++e) {
    bool usable = descending ? lam[e] < 0 : lam[e] > 0;
    if (!usable) continue;
    br.dirs[br.count++] = vec[e];
    br.dirs[br.count++] = vec[e] * -1.0;
  }
  return br;
}

}  // namespace

int branch_count(const CriticalPoint& cp, bool descending) {
  int down = cp.index;  // negative eigenvalues
  int up = 2 - cp.index;
  return 2 * (descending ? down : up);
}

FlowLine trace_flow(const DiffFunction& g, const std::vector<CriticalPoint>& cps, int start,
                    int branch, const MorseTolerances& tol, bool descending) {
  if (start < 0 || start >= static_cast<int>(cps.size()))
    throw std::invalid_argument("start index out of range");
  const CriticalPoint& cp = cps[start];
  Branches br = branch_dirs(g, cp, descending);
  if (br.count == 0)
    throw std::invalid_argument(descending ? "no unstable directions at this critical point"
                                           : "no ascending directions at this critical point");
  if (branch < 0 || branch >= br.count) throw std::invalid_argument("branch index out of range");

  const double sign = descending ? -1.0 : 1.0;  // x' = sign * grad g
  auto field = [&](Vec2 x) {
    Vec2 gr = g.grad(x.x, x.y);
    return Vec2{sign * gr.x, sign * gr.y};
  };

  FlowLine line;
  line.start = start;
  line.descending = descending;

  Vec2 x{cp.t + 2.0 * tol.tol_capture * br.dirs[branch].x,
         cp.theta + 2.0 * tol.tol_capture * br.dirs[branch].y};
  line.path.push_back({cp.t, cp.theta});
  line.path.push_back(x);
  double g_prev = g.value(x.x, x.y);
  bool escaped = false;
  double h = 1e-3;

  for (int step = 0; step < tol.max_flow_steps; ++step) {
    // one adaptive Dormand-Prince step
    Vec2 k1 = field(x);
    double speed = k1.norm();
    Vec2 k2 = field(x + k1 * (A21 * h));
    Vec2 k3 = field(x + k1 * (A31 * h) + k2 * (A32 * h));
    Vec2 k4 = field(x + k1 * (A41 * h) + k2 * (A42 * h) + k3 * (A43 * h));
    Vec2 k5 = field(x + k1 * (A51 * h) + k2 * (A52 * h) + k3 * (A53 * h) + k4 * (A54 * h));
    Vec2 k6 = field(x + k1 * (A61 * h) + k2 * (A62 * h) + k3 * (A63 * h) + k4 * (A64 * h) +
                    k5 * (A65 * h));
    Vec2 x5 = x + (k1 * B1 + k3 * B3 + k4 * B4 + k5 * B5 + k6 * B6) * h;
    Vec2 k7 = field(x5);
    Vec2 errv = (k1 * E1 + k3 * E3 + k4 * E4 + k5 * E5 + k6 * E6 + k7 * E7) * h;
    double err = errv.norm();
    double tol_step = tol.integrator_tol * h * std::max(speed, 1e-6);
    if (err > tol_step && h > 1e-12) {
      h = std::max(1e-12, 0.9 * h * std::pow(tol_step / std::max(err, 1e-300), 0.2));
      continue;
    }

    x = x5;
    line.arclength += (x - line.path.back()).norm();
    line.path.push_back(x);

    double g_here = g.value(x.x, x.y);
    if (descending ? g_here > g_prev + 1e-12 : g_here < g_prev - 1e-12)
      throw GeometryError("flow value is not monotone; integrator tolerance too loose");
    g_prev = g_here;

    if (!escaped && torus_dist(x.x, x.y, cp.t, cp.theta) > 4.0 * tol.tol_capture) escaped = true;

    int captured = -1;
    for (int c = 0; c < static_cast<int>(cps.size()); ++c) {
      if (!escaped && c == start) continue;
      if (torus_dist(x.x, x.y, cps[c].t, cps[c].theta) < tol.tol_capture) {
        if (captured >= 0)
          throw GeometryError("trajectory ended within capture radius of two critical points");
        captured = c;
      }
    }
    if (captured >= 0) {
      line.end = captured;
      line.path.push_back({cps[captured].t, cps[captured].theta});
      return line;
    }

    // grow the step; capture detection bounds it above
    if (err < 0.25 * tol_step) h = std::min(h * 2.0, 0.05);
  }
  throw GeometryError("flow trace exceeded the step budget without capture");
}

}  // namespace braidch::morse
