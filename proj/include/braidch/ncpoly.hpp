#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidch/gensym.hpp"
#include "braidch/ring.hpp"

namespace braidch {

struct DegreeInfo {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind = Kind::zero;
  int value = 0;  // meaningful when homogeneous; the unit has degree 0

  bool is_zero() const { return kind == Kind::zero; }
  bool is_homogeneous() const { return kind != Kind::inhomogeneous; }
};

// Noncommutative polynomial: a finite formal sum of coeff * word over a fixed
// coefficient ring. Terms are kept in canonical order (word length, then
// lexicographic) with no zero coefficients, so equal polynomials compare and
// serialize identically.
class NCPoly {
 public:
  using Term = std::pair<Word, Coeff>;

  explicit NCPoly(Ring ring = Ring::integers()) : ring_(ring) {}

  static NCPoly zero(Ring ring) { return NCPoly(ring); }
  static NCPoly unit(Ring ring) { return monomial(ring, Word{}, 1); }
  static NCPoly generator(Ring ring, const GenSym& g) { return monomial(ring, Word{g}, 1); }
  static NCPoly monomial(Ring ring, Word w, Coeff c);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Coeff coeff_of(const Word& w) const;

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly scaled(Coeff c) const;

  bool operator==(const NCPoly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

  // Coefficient reduction Z -> F_q. Reducing an F_q polynomial to the same q
  // is the identity; any other source ring is rejected.
  NCPoly reduced_mod(std::uint32_t q) const;

  DegreeInfo degree() const;

  std::string to_string() const;

 private:
  void insert_term(Word w, Coeff c);  // merges, prunes zeros
  void require_same_ring(const NCPoly& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

// A generator -> polynomial map extended as a unital algebra homomorphism.
// Symbols absent from the table are fixed.
class SubstitutionHom {
 public:
  void set(const GenSym& g, NCPoly image) { table_.insert_or_assign(g, std::move(image)); }
  const NCPoly* image(const GenSym& g) const;
  const std::map<GenSym, NCPoly, SymLess>& table() const { return table_; }

  NCPoly apply(const NCPoly& p) const;

 private:
  std::map<GenSym, NCPoly, SymLess> table_;
};

}  // namespace braidch
