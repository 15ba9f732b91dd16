#include "braidch/morse/strand_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "braidch/errors.hpp"

namespace braidch::morse {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double Vec2::norm() const { return std::hypot(x, y); }

void Mat2::eigen(double lam[2], Vec2 vec[2]) const {
  double mean = 0.5 * (a + c);
  double half = 0.5 * (a - c);
  double disc = std::hypot(half, b);
  lam[0] = mean - disc;
  lam[1] = mean + disc;
  if (std::abs(b) < 1e-300) {
    // already diagonal; order eigenvectors to match ascending eigenvalues
    if (a <= c) {
      vec[0] = {1, 0};
      vec[1] = {0, 1};
    } else {
      vec[0] = {0, 1};
      vec[1] = {1, 0};
    }
    return;
  }
  for (int t = 0; t < 2; ++t) {
    // (A - lam I) v = 0; pick the better-conditioned row
    Vec2 v1{b, lam[t] - a}, v2{lam[t] - c, b};
    Vec2 v = v1.norm() >= v2.norm() ? v1 : v2;
    double n = v.norm();
    vec[t] = {v.x / n, v.y / n};
  }
}

static double series(const std::vector<double>& cs, const std::vector<double>& sn, double t,
                     int deriv) {
  double acc = 0.0;
  std::size_t H = std::max(cs.size(), sn.size());
  for (std::size_t h = 0; h < H; ++h) {
    double c = h < cs.size() ? cs[h] : 0.0;
    double s = h < sn.size() ? sn[h] : 0.0;
    double w = kTwoPi * static_cast<double>(h);
    double ph = w * t;
    switch (deriv) {
      case 0: acc += c * std::cos(ph) + s * std::sin(ph); break;
      case 1: acc += w * (-c * std::sin(ph) + s * std::cos(ph)); break;
      case 2: acc += w * w * (-c * std::cos(ph) - s * std::sin(ph)); break;
      default: throw std::invalid_argument("unsupported derivative order");
    }
  }
  return acc;
}

Vec2 FourierCurve::eval(double t) const { return {series(cx, sx, t, 0), series(cy, sy, t, 0)}; }
Vec2 FourierCurve::d1(double t) const { return {series(cx, sx, t, 1), series(cy, sy, t, 1)}; }
Vec2 FourierCurve::d2(double t) const { return {series(cx, sx, t, 2), series(cy, sy, t, 2)}; }

FourierCurve FourierCurve::minus(const FourierCurve& o) const {
  auto sub = [](const std::vector<double>& u, const std::vector<double>& v) {
    std::vector<double> r(std::max(u.size(), v.size()), 0.0);
    for (std::size_t h = 0; h < r.size(); ++h)
      r[h] = (h < u.size() ? u[h] : 0.0) - (h < v.size() ? v[h] : 0.0);
    return r;
  };
  return {sub(cx, o.cx), sub(sx, o.sx), sub(cy, o.cy), sub(sy, o.sy)};
}

void validate_separation(const StrandSystem& s, const MorseTolerances& tol) {
  if (s.n != static_cast<int>(s.strands.size()))
    throw std::invalid_argument("strand count does not match strand list");
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j) {
      FourierCurve d = s.strands[i].minus(s.strands[j]);
      for (int k = 0; k < tol.profile_samples; ++k) {
        double t = static_cast<double>(k) / tol.profile_samples;
        if (d.eval(t).norm() <= tol.sep_min)
          throw GeometryError("strands " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              " closer than separation tolerance near t=" + std::to_string(t));
      }
    }
  }
}

DiffFunction::DiffFunction(const StrandSystem& s, int i, int j) : i_(i), j_(j) {
  if (i < 1 || j < 1 || i > s.n || j > s.n || i == j)
    throw std::invalid_argument("bad strand pair");
  d_ = s.strands[i - 1].minus(s.strands[j - 1]);
}

double DiffFunction::value(double t, double theta) const {
  Vec2 d = d_.eval(t);
  return d.x * std::cos(kTwoPi * theta) + d.y * std::sin(kTwoPi * theta);
}

Vec2 DiffFunction::grad(double t, double theta) const {
  Vec2 d = d_.eval(t), dp = d_.d1(t);
  double c = std::cos(kTwoPi * theta), s = std::sin(kTwoPi * theta);
  return {dp.x * c + dp.y * s, kTwoPi * (-d.x * s + d.y * c)};
}

Mat2 DiffFunction::hessian(double t, double theta) const {
  Vec2 d = d_.eval(t), dp = d_.d1(t), dpp = d_.d2(t);
  double c = std::cos(kTwoPi * theta), s = std::sin(kTwoPi * theta);
  Mat2 h;
  h.a = dpp.x * c + dpp.y * s;                     // g_tt
  h.b = kTwoPi * (-dp.x * s + dp.y * c);           // g_t,theta
  h.c = -kTwoPi * kTwoPi * (d.x * c + d.y * s);    // g_theta,theta
  return h;
}

RadialProfile radial_profile(const StrandSystem& s, int i, int j, const MorseTolerances& tol) {
  return radial_profile(DiffFunction(s, i, j), tol);
}

RadialProfile radial_profile(const DiffFunction& g, const MorseTolerances& tol) {
  // critical points of r = |f_i - f_j| are the zeros of u(t) = d . d' = r r'
  auto u = [&](double t) { return g.diff(t).dot(g.diff_d1(t)); };
  auto du = [&](double t) {
    Vec2 dp = g.diff_d1(t);
    return dp.dot(dp) + g.diff(t).dot(g.diff_d2(t));
  };

  const int N = tol.profile_samples;
  std::vector<double> roots;
  double scale = 0.0;
  for (int k = 0; k < N; ++k) scale = std::max(scale, std::abs(u(static_cast<double>(k) / N)));
  if (scale < tol.tol_nondeg)
    throw GeometryError("radial distance is constant to tolerance: degenerate pair (" +
                        std::to_string(g.i()) + "," + std::to_string(g.j()) + ")");

  for (int k = 0; k < N; ++k) {
    double t0 = static_cast<double>(k) / N, t1 = static_cast<double>(k + 1) / N;
    double u0 = u(t0), u1 = u(t1);
    if (u0 == 0.0 || u0 * u1 < 0.0) {
      // Newton from the midpoint, bisection fallback to stay in the bracket
      double lo = t0, hi = t1, ulo = u0;
      double t = 0.5 * (t0 + t1);
      for (int it = 0; it < 80; ++it) {
        double f = u(t), fp = du(t);
        double step = fp != 0.0 ? f / fp : 0.0;
        double tn = t - step;
        if (!(tn > lo && tn < hi) || fp == 0.0) {
          if ((f > 0) == (ulo > 0)) lo = t; else hi = t;
          tn = 0.5 * (lo + hi);
        }
        if (std::abs(tn - t) < 1e-15) { t = tn; break; }
        t = tn;
      }
      double tr = t - std::floor(t);
      bool dup = false;
      for (double r0 : roots) {
        double dt = std::abs(tr - r0);
        if (std::min(dt, 1.0 - dt) < 1e-8) dup = true;
      }
      if (!dup) roots.push_back(tr);
    }
  }

  RadialProfile profile;
  for (double t : roots) {
    double r = g.radial(t);
    if (r <= tol.sep_min)
      throw GeometryError("separation violation at radial critical point of pair (" +
                          std::to_string(g.i()) + "," + std::to_string(g.j()) + ")");
    double r_second = du(t) / r;  // r'' = u' / r when r' = 0
    if (std::abs(r_second) < tol.tol_nondeg)
      throw GeometryError("degenerate radial critical point at t=" + std::to_string(t));
    RadialCritical cp;
    cp.t = t;
    cp.r = r;
    cp.r_second = r_second;
    cp.is_min = r_second > 0;
    profile.points.push_back(cp);
  }
  std::sort(profile.points.begin(), profile.points.end(),
            [](const RadialCritical& a, const RadialCritical& b) { return a.t < b.t; });
  for (const auto& p : profile.points) (p.is_min ? profile.min_count : profile.max_count)++;
  if (profile.min_count != profile.max_count)
    throw GeometryError("radial minima and maxima do not alternate; sampling too coarse?");
  return profile;
}

}  // namespace braidch::morse
