#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidch/dga.hpp"

namespace braidch {

// A ring map from the DGA to F_q: the unit goes to 1, positive-degree
// generators to 0, and degree-0 generators to the stored values (listed in
// the DGA's canonical generator order). Evaluation of words is commutative
// since the target is a field.
struct Augmentation {
  std::uint32_t q = 2;
  std::vector<std::pair<GenSym, std::uint32_t>> values;

  std::uint32_t value_of(const GenSym& g) const;  // 0 for positive degree
};

struct AugScanOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;  // cap on q^m assignments
  bool parallel = true;
};

// Exhaustive scan of all q^m assignments to the m degree-0 generators,
// in lexicographic order. An assignment passes iff every relation d(g)
// evaluates to 0 in F_q. OpenMP-partitioned by assignment index; results are
// independent of the worker count.
std::vector<Augmentation> enumerate_augmentations(const Dga& d, std::uint32_t q,
                                                  const AugScanOptions& opt = {});
std::uint64_t aug_count(const Dga& d, std::uint32_t q, const AugScanOptions& opt = {});

// Serial reference scan, kept for testing and benchmarking: evaluates every
// relation word by word on the NCPoly representation with no precompilation.
std::vector<Augmentation> enumerate_augmentations_serial(const Dga& d, std::uint32_t q,
                                                         const AugScanOptions& opt = {});
std::uint64_t aug_count_serial(const Dga& d, std::uint32_t q, const AugScanOptions& opt = {});

// Re-checks one assignment against every relation by direct evaluation.
bool satisfies_relations(const Dga& d, const Augmentation& aug);

struct ConjugationTrial {
  std::string conjugator;  // braid text
  std::uint64_t count = 0;
  bool matches_base = false;
};

struct ConjugationReport {
  std::string braid;
  std::uint32_t q = 2;
  std::uint64_t seed = 0;
  int trials = 0;
  int conjugator_max_len = 4;
  std::uint64_t base_count = 0;
  std::vector<ConjugationTrial> results;
  std::vector<std::string> violations;  // witness conjugators, empty on success

  bool ok() const { return violations.empty(); }
};

// Draws `trials` random conjugators g (letters uniform, length uniform in
// [0, conjugator_max_len]) from a seeded PRNG and compares aug_count of
// g w g^{-1} against w.
ConjugationReport conjugation_experiment(const BraidWord& w, int trials, std::uint32_t q,
                                         std::uint64_t seed, int conjugator_max_len = 4,
                                         const AugScanOptions& opt = {});

}  // namespace braidch
