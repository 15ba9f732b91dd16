#include "braidch/phi.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidch {

std::vector<GenSym> braid_a_generators(int n) {
  std::vector<GenSym> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(GenSym::a(i, j));
  return gens;
}

namespace {

const Ring kZ = Ring::integers();

NCPoly gen(int i, int j) { return NCPoly::generator(kZ, GenSym::a(i, j)); }

// sigma_k acting on a_ij. Rows, for i outside {k, k+1}:
//   a_{k,i}   -> -a_{k+1,i} - a_{k+1,k} a_{k,i}
//   a_{i,k}   -> -a_{i,k+1} - a_{i,k} a_{k,k+1}
//   a_{k+1,i} ->  a_{k,i}
//   a_{i,k+1} ->  a_{i,k}
//   a_{k,k+1} ->  a_{k+1,k},  a_{k+1,k} -> a_{k,k+1},  others fixed.
NCPoly positive_image(int k, int i, int j) {
  const int kk = k + 1;
  if (i == k && j == kk) return gen(kk, k);
  if (i == kk && j == k) return gen(k, kk);
  if (i == k) return -gen(kk, j) - gen(kk, k) * gen(k, j);
  if (j == k) return -gen(i, kk) - gen(i, k) * gen(k, kk);
  if (i == kk) return gen(k, j);
  if (j == kk) return gen(i, k);
  return gen(i, j);
}

// Two-sided inverse of the positive table, solved from the composition
// identity and verified exhaustively in the test suite:
//   a_{k,i}   ->  a_{k+1,i}
//   a_{i,k}   ->  a_{i,k+1}
//   a_{k+1,i} -> -a_{k,i} - a_{k,k+1} a_{k+1,i}
//   a_{i,k+1} -> -a_{i,k} - a_{i,k+1} a_{k+1,k}
//   a_{k,k+1} ->  a_{k+1,k},  a_{k+1,k} -> a_{k,k+1},  others fixed.
NCPoly negative_image(int k, int i, int j) {
  const int kk = k + 1;
  if (i == k && j == kk) return gen(kk, k);
  if (i == kk && j == k) return gen(k, kk);
  if (i == k) return gen(kk, j);
  if (j == k) return gen(i, kk);
  if (i == kk) return -gen(k, j) - gen(k, kk) * gen(kk, j);
  if (j == kk) return -gen(i, k) - gen(i, kk) * gen(kk, k);
  return gen(i, j);
}

}  // namespace

SubstitutionHom phi_letter(int k, int sign, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("generator index k out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  SubstitutionHom h;
  for (const auto& g : braid_a_generators(n))
    h.set(g, sign > 0 ? positive_image(k, g.i, g.j) : negative_image(k, g.i, g.j));
  return h;
}

SubstitutionHom phi_braid(const BraidWord& w) {
  validate(w);
  SubstitutionHom table;
  for (const auto& g : braid_a_generators(w.n)) table.set(g, NCPoly::generator(kZ, g));
  // first letter innermost: fold each letter's action over the running table
  for (int letter : w.letters) {
    SubstitutionHom step = phi_letter(std::abs(letter), letter > 0 ? 1 : -1, w.n);
    SubstitutionHom next;
    for (const auto& [g, image] : table.table()) next.set(g, step.apply(image));
    table = std::move(next);
  }
  return table;
}

}  // namespace braidch
