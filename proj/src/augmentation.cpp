#include "braidch/augmentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "braidch/errors.hpp"
#include "braidch/rng.hpp"

namespace braidch {

std::uint32_t Augmentation::value_of(const GenSym& g) const {
  for (const auto& [gen, v] : values)
    if (gen == g) return v;
  return 0;
}

namespace {

struct ScanSetup {
  std::uint32_t q = 2;
  std::vector<GenSym> vars;   // degree-0 generators, canonical order
  std::uint64_t total = 0;    // q^m
  // relations as commutative polynomials over the vars: each monomial is a
  // coefficient and (var, exponent) pairs; words with positive-degree symbols
  // evaluate to 0 and are dropped at compile time
  struct Monomial {
    std::uint32_t coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;
  };
  std::vector<std::vector<Monomial>> relations;  // only nonempty ones
  bool impossible = false;  // some relation has a bare nonzero constant... still scan-correct
};

std::uint64_t checked_pow(std::uint32_t q, std::size_t m, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < m; ++t) {
    if (total > budget / q)
      throw BudgetExceeded("augmentation scan needs q^m = " + std::to_string(q) + "^" +
                           std::to_string(m) + " > budget " + std::to_string(budget) +
                           " assignments; raise the budget or lower q or n");
    total *= q;
  }
  return total;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t q) {
  std::uint64_t r = 1, b = base % q;
  while (exp) {
    if (exp & 1) r = r * b % q;
    b = b * b % q;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void require_scan_ring(const Dga& d, std::uint32_t q) {
  if (!is_prime(q)) throw std::invalid_argument("augmentation target modulus must be prime");
  if (!d.ring.is_integers() && d.ring.modulus != q)
    throw std::invalid_argument("DGA over " + d.ring.name() + " cannot be evaluated in F_" +
                                std::to_string(q));
}

ScanSetup compile_scan(const Dga& d, std::uint32_t q, const AugScanOptions& opt) {
  require_scan_ring(d, q);
  ScanSetup setup;
  setup.q = q;
  setup.vars = d.degree_zero_generators();
  setup.total = checked_pow(q, setup.vars.size(), opt.budget);

  std::map<GenSym, std::uint32_t, SymLess> var_index;
  for (std::uint32_t t = 0; t < setup.vars.size(); ++t) var_index.emplace(setup.vars[t], t);

  for (const auto& [g, image] : d.differential) {
    if (image.is_zero()) continue;
    // commutative collapse: exponent vector per word, coefficients mod q
    std::map<std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::uint32_t> collapsed;
    for (const auto& [word, coeff] : image.terms()) {
      bool kills = false;
      std::map<std::uint32_t, std::uint32_t> exps;
      for (const auto& sym : word) {
        if (sym.degree() != 0) {
          kills = true;  // positive-degree symbols evaluate to 0
          break;
        }
        ++exps[var_index.at(sym)];
      }
      if (kills) continue;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> key(exps.begin(), exps.end());
      std::uint32_t c = static_cast<std::uint32_t>(((coeff % q) + q) % q);
      auto [it, inserted] = collapsed.emplace(std::move(key), c);
      if (!inserted) it->second = (it->second + c) % q;
    }
    ScanSetup::Monomial mono;
    std::vector<ScanSetup::Monomial> rel;
    for (auto& [key, c] : collapsed) {
      if (c == 0) continue;
      rel.push_back({c, key});
    }
    if (!rel.empty()) setup.relations.push_back(std::move(rel));
  }
  // cheapest relations first so failing assignments exit early
  std::stable_sort(setup.relations.begin(), setup.relations.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return setup;
}

void index_to_values(const ScanSetup& s, std::uint64_t index, std::vector<std::uint32_t>& out) {
  // first variable is the most significant digit: scan order is lexicographic
  out.resize(s.vars.size());
  for (std::size_t t = s.vars.size(); t-- > 0;) {
    out[t] = static_cast<std::uint32_t>(index % s.q);
    index /= s.q;
  }
}

bool passes(const ScanSetup& s, const std::vector<std::uint32_t>& values) {
  for (const auto& rel : s.relations) {
    std::uint64_t sum = 0;
    for (const auto& mono : rel) {
      std::uint64_t term = mono.coeff;
      for (const auto& [var, exp] : mono.powers) {
        std::uint32_t v = values[var];
        if (v == 0) {
          term = 0;
          break;
        }
        term = term * pow_mod(v, exp, s.q) % s.q;
      }
      sum += term;
    }
    if (sum % s.q != 0) return false;
  }
  return true;
}

Augmentation make_augmentation(const ScanSetup& s, const std::vector<std::uint32_t>& values) {
  Augmentation a;
  a.q = s.q;
  for (std::size_t t = 0; t < s.vars.size(); ++t) a.values.emplace_back(s.vars[t], values[t]);
  return a;
}

}  // namespace

std::uint64_t aug_count(const Dga& d, std::uint32_t q, const AugScanOptions& opt) {
  ScanSetup s = compile_scan(d, q, opt);
  const std::int64_t total = static_cast<std::int64_t>(s.total);
  std::uint64_t count = 0;
#pragma omp parallel if (opt.parallel)
  {
    std::vector<std::uint32_t> values(s.vars.size());
    std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t index = 0; index < total; ++index) {
      index_to_values(s, static_cast<std::uint64_t>(index), values);
      if (passes(s, values)) ++local;
    }
#pragma omp atomic
    count += local;
  }
  return count;
}

std::vector<Augmentation> enumerate_augmentations(const Dga& d, std::uint32_t q,
                                                  const AugScanOptions& opt) {
  ScanSetup s = compile_scan(d, q, opt);
  const std::int64_t total = static_cast<std::int64_t>(s.total);
  std::vector<std::uint64_t> passing;
#pragma omp parallel if (opt.parallel)
  {
    std::vector<std::uint32_t> values(s.vars.size());
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t index = 0; index < total; ++index) {
      index_to_values(s, static_cast<std::uint64_t>(index), values);
      if (passes(s, values)) local.push_back(static_cast<std::uint64_t>(index));
    }
#pragma omp critical
    passing.insert(passing.end(), local.begin(), local.end());
  }
  // lexicographic order independent of the partitioning
  std::sort(passing.begin(), passing.end());

  std::vector<Augmentation> result;
  result.reserve(passing.size());
  std::vector<std::uint32_t> values;
  for (std::uint64_t index : passing) {
    index_to_values(s, index, values);
    result.push_back(make_augmentation(s, values));
  }
  return result;
}

namespace {

// direct word-by-word evaluation of d(g) under an assignment, no compilation
std::uint32_t evaluate_poly(const NCPoly& p, std::uint32_t q,
                            const std::map<GenSym, std::uint32_t, SymLess>& assignment) {
  std::uint64_t sum = 0;
  for (const auto& [word, coeff] : p.terms()) {
    std::uint64_t term = static_cast<std::uint64_t>(((coeff % q) + q) % q);
    for (const auto& sym : word) {
      std::uint32_t v = 0;
      if (sym.degree() == 0) {
        auto it = assignment.find(sym);
        if (it == assignment.end()) throw std::invalid_argument("unassigned degree-0 symbol " + sym.name());
        v = it->second;
      }
      term = term * v % q;
    }
    sum = (sum + term) % q;
  }
  return static_cast<std::uint32_t>(sum);
}

}  // namespace

std::vector<Augmentation> enumerate_augmentations_serial(const Dga& d, std::uint32_t q,
                                                         const AugScanOptions& opt) {
  require_scan_ring(d, q);
  std::vector<GenSym> vars = d.degree_zero_generators();
  std::uint64_t total = checked_pow(q, vars.size(), opt.budget);

  std::vector<Augmentation> result;
  std::vector<std::uint32_t> values(vars.size(), 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rem = index;
    for (std::size_t t = vars.size(); t-- > 0;) {
      values[t] = static_cast<std::uint32_t>(rem % q);
      rem /= q;
    }
    std::map<GenSym, std::uint32_t, SymLess> assignment;
    for (std::size_t t = 0; t < vars.size(); ++t) assignment.emplace(vars[t], values[t]);
    bool ok = true;
    for (const auto& [g, image] : d.differential) {
      if (evaluate_poly(image, q, assignment) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Augmentation a;
      a.q = q;
      for (std::size_t t = 0; t < vars.size(); ++t) a.values.emplace_back(vars[t], values[t]);
      result.push_back(std::move(a));
    }
  }
  return result;
}

std::uint64_t aug_count_serial(const Dga& d, std::uint32_t q, const AugScanOptions& opt) {
  return enumerate_augmentations_serial(d, q, opt).size();
}

bool satisfies_relations(const Dga& d, const Augmentation& aug) {
  require_scan_ring(d, aug.q);
  std::map<GenSym, std::uint32_t, SymLess> assignment;
  for (const auto& [g, v] : aug.values) assignment.emplace(g, v % aug.q);
  for (const auto& [g, image] : d.differential)
    if (evaluate_poly(image, aug.q, assignment) != 0) return false;
  return true;
}

ConjugationReport conjugation_experiment(const BraidWord& w, int trials, std::uint32_t q,
                                         std::uint64_t seed, int conjugator_max_len,
                                         const AugScanOptions& opt) {
  if (trials < 0) throw std::invalid_argument("trial count must be >= 0");
  ConjugationReport rep;
  rep.braid = to_text(w);
  rep.q = q;
  rep.seed = seed;
  rep.trials = trials;
  rep.conjugator_max_len = conjugator_max_len;
  rep.base_count = aug_count(braid_dga(w), q, opt);

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(conjugator_max_len) + 1));
    BraidWord g = w.n >= 2 ? random_braid(rng, w.n, len) : BraidWord{w.n, {}};
    ConjugationTrial trial;
    trial.conjugator = to_text(g);
    trial.count = aug_count(braid_dga(conjugate(w, g)), q, opt);
    trial.matches_base = trial.count == rep.base_count;
    if (!trial.matches_base) rep.violations.push_back(trial.conjugator);
    rep.results.push_back(std::move(trial));
  }
  return rep;
}

}  // namespace braidch
