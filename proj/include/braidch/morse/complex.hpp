#pragma once

#include <array>
#include <vector>

#include "braidch/gensym.hpp"
#include "braidch/morse/flow.hpp"

namespace braidch::morse {

// Morse chain complex of one difference function over F_2: boundary maps
// from rigid flow-line counts between critical points of adjacent index.
struct MorseComplex {
  std::vector<CriticalPoint> points;
  // flow_matrix[s][t] = number of traced flow lines from point s down to
  // point t (index difference 1); the F_2 boundary is the parity
  std::vector<std::vector<int>> flow_matrix;
  std::vector<FlowLine> lines;
  std::array<long, 3> ranks = {0, 0, 0};  // H_0, H_1, H_2 over F_2
  bool d_squared_ok = false;
};

// Builds the complex by tracing descents from every saddle branch and
// ascents into every maximum (via saddle stable manifolds), verifies
// d^2 = 0 over F_2, and reports homology ranks. For a generic difference
// function on T^2 the ranks are (1, 2, 1).
MorseComplex morse_complex(const DiffFunction& g, const MorseTolerances& tol = {});

// One labeled double point of the front: the Morse-theoretic realization of
// a braid DGA generator.
struct LabeledPoint {
  GenSym label;  // a_ij or b_ij
  int i = 0, j = 0;
  CriticalPoint cp;
};

// For every ordered pair (i, j): a_ij is the positive-value critical point
// over the radial minimum, b_ij the positive-value point over the radial
// maximum (swapping i and j negates g, so the negative-value partners are
// a_ji, b_ji). Size 2*n*(n-1), matching the braid DGA generator count.
// Pairs are processed independently (OpenMP) with deterministic output order.
std::vector<LabeledPoint> generator_inventory(const StrandSystem& s,
                                              const MorseTolerances& tol = {});

}  // namespace braidch::morse
