#pragma once

#include <cstdint>
#include <string>

#include "braidch/ring.hpp"

namespace braidch {

inline constexpr const char* kToolName = "braidch";
inline constexpr const char* kToolVersion = "0.1.0";

struct MorseTolerances {
  double tol_crit = 1e-9;      // max |grad g| at a refined critical point
  double tol_nondeg = 1e-6;    // min |r''| and Hessian-determinant scale
  double tol_capture = 1e-4;   // flow terminates inside this radius
  double sep_min = 1e-3;       // min pairwise strand separation
  double integrator_tol = 1e-10;  // local error target per unit arclength
  int profile_samples = 2048;  // dense sampling of S^1
  int max_flow_steps = 200000;
};

struct RunConfig {
  Ring ring = Ring::integers();
  std::uint32_t q = 2;  // prime for F_q computations
  int cutoff = 2;       // homology truncation L
  std::uint64_t aug_budget = std::uint64_t{1} << 24;
  std::uint64_t word_budget = std::uint64_t{1} << 21;
  std::uint64_t seed = 0;
  std::string format = "json";  // "json" | "text"
  MorseTolerances morse;
};

// Stable 64-bit FNV-1a, used for the config hash in report headers.
std::uint64_t fnv1a64(const std::string& s);

}  // namespace braidch
