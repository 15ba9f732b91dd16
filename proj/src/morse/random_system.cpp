#include "braidch/morse/random_system.hpp"

#include <cmath>
#include <stdexcept>

#include "braidch/errors.hpp"
#include "braidch/morse/critical.hpp"
#include "braidch/rng.hpp"

namespace braidch::morse {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

StrandSystem draw(Rng& rng, int n) {
  StrandSystem s;
  s.n = n;
  const double radius = 4.0 * n;
  for (int k = 0; k < n; ++k) {
    double angle = kTwoPi * k / n;
    FourierCurve f;
    f.cx = {radius * std::cos(angle), rng.uniform(-1.0, 1.0), rng.uniform(-0.3, 0.3)};
    f.sx = {0.0, rng.uniform(-1.0, 1.0), rng.uniform(-0.3, 0.3)};
    f.cy = {radius * std::sin(angle), rng.uniform(-1.0, 1.0), rng.uniform(-0.3, 0.3)};
    f.sy = {0.0, rng.uniform(-1.0, 1.0), rng.uniform(-0.3, 0.3)};
    s.strands.push_back(std::move(f));
  }
  return s;
}

bool generic(const StrandSystem& s, const MorseTolerances& tol) {
  try {
    validate_separation(s, tol);
    for (int i = 1; i <= s.n; ++i) {
      for (int j = i + 1; j <= s.n; ++j) {
        DiffFunction g(s, i, j);
        if (!radial_profile(g, tol).one_min_one_max()) return false;
        critical_points(g, tol);
      }
    }
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

}  // namespace

StrandSystem random_generic_system(int n, std::uint64_t seed, const MorseTolerances& tol) {
  if (n < 2) throw std::invalid_argument("random system needs n >= 2");
  Rng rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    StrandSystem s = draw(rng, n);
    if (generic(s, tol)) return s;
  }
  throw GeometryError("no generic system found for this seed");
}

}  // namespace braidch::morse
