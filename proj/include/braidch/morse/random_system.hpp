#pragma once

#include <cstdint>

#include "braidch/morse/strand_system.hpp"

namespace braidch::morse {

// Seeded random strand system in generic position: strand centers spread on
// a large circle, low-harmonic random wiggles, rejection-sampled until every
// pair passes separation, has a one-minimum/one-maximum radial profile, and
// refines to a clean critical-point set. Deterministic for a fixed seed.
StrandSystem random_generic_system(int n, std::uint64_t seed, const MorseTolerances& tol = {});

}  // namespace braidch::morse
