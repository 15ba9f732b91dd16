#include "braidch/rng.hpp"

#include <stdexcept>

namespace braidch {

BraidWord random_braid(Rng& rng, int n, int len) {
  if (n < 2) throw std::invalid_argument("random braid needs n >= 2");
  BraidWord w{n, {}};
  w.letters.reserve(len);
  for (int t = 0; t < len; ++t) {
    int k = rng.range(1, n - 1);
    w.letters.push_back(rng.below(2) == 0 ? k : -k);
  }
  return w;
}

}  // namespace braidch
