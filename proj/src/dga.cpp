#include "braidch/dga.hpp"

#include <algorithm>
#include <stdexcept>

#include "braidch/phi.hpp"

namespace braidch {

bool Dga::has_generator(const GenSym& g) const { return differential.count(g) != 0; }

const NCPoly& Dga::d_of(const GenSym& g) const {
  auto it = differential.find(g);
  if (it == differential.end()) throw std::invalid_argument("unknown generator " + g.name());
  return it->second;
}

std::vector<GenSym> Dga::degree_zero_generators() const {
  std::vector<GenSym> r;
  for (const auto& g : generators)
    if (g.degree() == 0) r.push_back(g);
  return r;
}

namespace {

void validate_structure(const Dga& d) {
  for (const auto& g : d.generators)
    if (!d.has_generator(g)) throw std::invalid_argument("generator " + g.name() + " has no differential entry");
  if (d.differential.size() != d.generators.size())
    throw std::invalid_argument("differential mentions undeclared generators");
  for (const auto& [g, image] : d.differential) {
    DegreeInfo info = image.degree();
    if (!info.is_homogeneous())
      throw std::invalid_argument("d(" + g.name() + ") is inhomogeneous");
    if (!info.is_zero() && info.value != g.degree() - 1)
      throw std::invalid_argument("d(" + g.name() + ") has degree " + std::to_string(info.value) +
                                  ", expected " + std::to_string(g.degree() - 1));
    if (!(image.ring() == d.ring)) throw std::invalid_argument("differential ring mismatch");
    for (const auto& [w, c] : image.terms())
      for (const auto& sym : w)
        if (!d.has_generator(sym))
          throw std::invalid_argument("d(" + g.name() + ") mentions undeclared symbol " + sym.name());
  }
}

}  // namespace

Dga braid_dga(const BraidWord& w, Ring ring) {
  validate(w);
  Dga d;
  d.ring = ring;
  d.provenance = "braid";
  d.braid_strands = w.n;
  d.closure_cycles = closure_permutation(w).cycle_count();

  auto a_gens = braid_a_generators(w.n);
  d.generators = a_gens;
  for (const auto& g : a_gens) d.generators.push_back(GenSym::b(g.i, g.j));
  std::sort(d.generators.begin(), d.generators.end(), sym_less);

  SubstitutionHom phi = phi_braid(w);
  for (const auto& g : a_gens) {
    d.differential.emplace(g, NCPoly::zero(ring));
    NCPoly relation = NCPoly::generator(Ring::integers(), g) - *phi.image(g);
    if (!ring.is_integers()) relation = relation.reduced_mod(ring.modulus);
    d.differential.emplace(GenSym::b(g.i, g.j), std::move(relation));
  }
  validate_structure(d);
  return d;
}

Dga unknot_dga() {
  const Ring f2 = Ring::prime_field(2);
  Dga d;
  d.ring = f2;
  d.provenance = "unknot";
  GenSym a1 = GenSym::named("a_1", 1), a2 = GenSym::named("a_2", 1);
  GenSym b1 = GenSym::named("b_1", 2), b2 = GenSym::named("b_2", 2);
  d.generators = {a1, a2, b1, b2};
  NCPoly a1_plus_a2 = NCPoly::generator(f2, a1) + NCPoly::generator(f2, a2);
  d.differential.emplace(a1, NCPoly::zero(f2));
  d.differential.emplace(a2, NCPoly::zero(f2));
  d.differential.emplace(b1, a1_plus_a2);
  d.differential.emplace(b2, a1_plus_a2);
  validate_structure(d);
  return d;
}

Dga custom_dga(Ring ring, std::vector<GenSym> generators,
               std::map<GenSym, NCPoly, SymLess> diff, bool check_d2) {
  Dga d;
  d.ring = ring;
  d.provenance = "custom";
  d.generators = std::move(generators);
  std::sort(d.generators.begin(), d.generators.end(), sym_less);
  d.differential = std::move(diff);
  for (const auto& g : d.generators)
    d.differential.try_emplace(g, NCPoly::zero(ring));
  validate_structure(d);
  if (check_d2) {
    DSquaredReport rep = check_d_squared(d);
    if (!rep.ok())
      throw std::invalid_argument("d^2 != 0 on generator " + rep.violations.front().gen.name());
  }
  return d;
}

NCPoly differential(const Dga& d, const NCPoly& p) {
  if (!(p.ring() == d.ring)) throw std::invalid_argument("operand ring does not match DGA ring");
  NCPoly result(d.ring);
  for (const auto& [word, coeff] : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t t = 0; t < word.size(); ++t) {
      const NCPoly& dg = d.d_of(word[t]);
      if (!dg.is_zero()) {
        // (-1)^{deg(prefix)} * prefix * d(g_t) * suffix
        NCPoly piece = NCPoly::monomial(d.ring, Word(word.begin(), word.begin() + t),
                                        prefix_degree % 2 == 0 ? coeff : d.ring.neg(coeff));
        piece = piece * dg;
        piece = piece * NCPoly::monomial(d.ring, Word(word.begin() + t + 1, word.end()), 1);
        result += piece;
      }
      prefix_degree += word[t].degree();
    }
  }
  return result;
}

DSquaredReport check_d_squared(const Dga& d) {
  DSquaredReport rep;
  for (const auto& g : d.generators) {
    NCPoly dd = differential(d, d.d_of(g));
    ++rep.generators_checked;
    if (!dd.is_zero()) rep.violations.push_back({g, std::move(dd)});
  }
  return rep;
}

}  // namespace braidch
