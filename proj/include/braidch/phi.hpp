#pragma once

#include <vector>

#include "braidch/braid.hpp"
#include "braidch/ncpoly.hpp"

namespace braidch {

// All a_ij generators for an n-strand braid, in canonical order.
std::vector<GenSym> braid_a_generators(int n);

// The substitution action of a single Artin generator sigma_k^{sign} on the
// free algebra over {a_ij}, over Z. For sign = -1 the table is the two-sided
// inverse of the sign = +1 table; tests verify the composition identity on
// every generator. Requires 1 <= k <= n-1.
SubstitutionHom phi_letter(int k, int sign, int n);

// Composite action of a braid word, first letter applied innermost. The
// returned table lists every a_ij of the word's strand count, including the
// fixed ones. Empty word yields the identity table.
SubstitutionHom phi_braid(const BraidWord& w);

}  // namespace braidch
