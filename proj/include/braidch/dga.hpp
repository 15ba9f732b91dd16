#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidch/braid.hpp"
#include "braidch/ncpoly.hpp"

namespace braidch {

// A free differential graded algebra presented by generators with integer
// gradings and the differential's values on them. Immutable after
// construction; every differential image is homogeneous of degree
// deg(generator) - 1 (or zero) and mentions declared generators only.
struct Dga {
  Ring ring;
  std::vector<GenSym> generators;                  // canonical order
  std::map<GenSym, NCPoly, SymLess> differential;  // one entry per generator
  std::string provenance;                          // "braid" | "unknot" | "custom"
  int braid_strands = 0;                           // braid provenance only
  int closure_cycles = 0;                          // braid provenance only

  bool has_generator(const GenSym& g) const;
  const NCPoly& d_of(const GenSym& g) const;
  std::vector<GenSym> degree_zero_generators() const;
};

// The braid DGA on generators {a_ij (degree 0), b_ij (degree 1)} with
// d a_ij = 0 and d b_ij = a_ij - phi_B(a_ij). An invariant of the braid word
// up to conjugation, not of its closure. closure_cycles records how many
// components the closure has so callers can warn when it is not a knot.
Dga braid_dga(const BraidWord& w, Ring ring = Ring::integers());

// Fixed four-generator DGA over F_2: a_1, a_2 in degree 1 with d a_i = 0 and
// b_1, b_2 in degree 2 with d b_i = a_1 + a_2.
Dga unknot_dga();

// User-supplied DGA. Always validates grading and symbol closure; optionally
// asserts d^2 = 0 (disable to build deliberately broken complexes and run
// check_d_squared on them).
Dga custom_dga(Ring ring, std::vector<GenSym> generators,
               std::map<GenSym, NCPoly, SymLess> differential, bool check_d2 = true);

// Extension of the differential by the signed Leibniz rule
// d(xy) = (dx) y + (-1)^{deg x} x (dy), linearly over the ring.
// Throws on symbols that are not generators of d.
NCPoly differential(const Dga& d, const NCPoly& p);

struct DSquaredReport {
  struct Violation {
    GenSym gen;
    NCPoly image;  // the nonzero d(d(gen))
  };
  std::vector<Violation> violations;
  std::size_t generators_checked = 0;

  bool ok() const { return violations.empty(); }
};

DSquaredReport check_d_squared(const Dga& d);

}  // namespace braidch
