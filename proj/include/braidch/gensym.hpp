#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidch {

enum class SymKind : std::uint8_t { A = 0, B = 1, Named = 2 };

// A graded generator symbol. The a/b kinds are the doubly indexed braid
// generators with fixed degrees 0 and 1; Named symbols carry an explicit
// label and degree.
struct GenSym {
  SymKind kind = SymKind::A;
  int i = 0;
  int j = 0;
  std::string label;
  int named_degree = 0;

  static GenSym a(int i, int j);
  static GenSym b(int i, int j);
  static GenSym named(std::string label, int degree);

  int degree() const;
  std::string name() const;  // "a_<i>_<j>", "b_<i>_<j>", or the label

  bool operator==(const GenSym&) const = default;
};

// Canonical symbol order: kind (a < b < named), then indices, then label.
int sym_cmp(const GenSym& x, const GenSym& y);
inline bool sym_less(const GenSym& x, const GenSym& y) { return sym_cmp(x, y) < 0; }

struct SymLess {
  bool operator()(const GenSym& x, const GenSym& y) const { return sym_less(x, y); }
};

// A word in generator symbols; the empty word is the algebra unit.
using Word = std::vector<GenSym>;

int word_degree(const Word& w);

// Canonical word order: length first, then symbol-wise.
int word_cmp(const Word& u, const Word& v);
inline bool word_less(const Word& u, const Word& v) { return word_cmp(u, v) < 0; }

std::string word_name(const Word& w);  // "a_1_2*b_2_1", "1" for the unit

}  // namespace braidch
