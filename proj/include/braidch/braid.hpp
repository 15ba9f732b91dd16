#pragma once

#include <string>
#include <vector>

namespace braidch {

// Braid word on n strands. Letters are nonzero integers k with 1 <= |k| <= n-1;
// the sign is the crossing sign, the absolute value the Artin generator index.
// The empty letter list is the identity braid.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Throws std::invalid_argument on out-of-range letters or n < 1.
void validate(const BraidWord& w);

// Grammar: "<n> ':' (<signed-int>)*", whitespace separated, e.g. "3: 1 -2 1".
BraidWord parse_braid(const std::string& text);
std::string to_text(const BraidWord& w);

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Cancel adjacent (k, -k) pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// g * w * g^{-1}, freely reduced.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

// Markov stabilization: append sigma_n^{sign} on n+1 strands. Changes the
// closure's knot type bookkeeping only; it is NOT a move the braid DGA is
// invariant under, so it is exposed purely for experiments.
BraidWord stabilize(const BraidWord& w, int sign);

struct Permutation {
  std::vector<int> image;  // 1-based: image[i-1] is where strand i ends

  int size() const { return static_cast<int>(image.size()); }
  int apply(int i) const { return image[i - 1]; }
  int cycle_count() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
};

// Composes the transposition (|k|, |k|+1) per letter, left to right.
Permutation closure_permutation(const BraidWord& w);

}  // namespace braidch
