#include "braidch/gensym.hpp"

#include <stdexcept>

namespace braidch {

static void check_indices(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("generator indices must be >= 1");
  if (i == j) throw std::invalid_argument("generator indices must differ");
}

GenSym GenSym::a(int i, int j) {
  check_indices(i, j);
  return GenSym{SymKind::A, i, j, {}, 0};
}

GenSym GenSym::b(int i, int j) {
  check_indices(i, j);
  return GenSym{SymKind::B, i, j, {}, 0};
}

GenSym GenSym::named(std::string label, int degree) {
  if (label.empty()) throw std::invalid_argument("named generator needs a label");
  return GenSym{SymKind::Named, 0, 0, std::move(label), degree};
}

int GenSym::degree() const {
  switch (kind) {
    case SymKind::A: return 0;
    case SymKind::B: return 1;
    case SymKind::Named: return named_degree;
  }
  return 0;
}

std::string GenSym::name() const {
  switch (kind) {
    case SymKind::A: return "a_" + std::to_string(i) + "_" + std::to_string(j);
    case SymKind::B: return "b_" + std::to_string(i) + "_" + std::to_string(j);
    case SymKind::Named: return label;
  }
  return {};
}

int sym_cmp(const GenSym& x, const GenSym& y) {
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  if (x.i != y.i) return x.i < y.i ? -1 : 1;
  if (x.j != y.j) return x.j < y.j ? -1 : 1;
  if (int c = x.label.compare(y.label); c != 0) return c < 0 ? -1 : 1;
  if (x.named_degree != y.named_degree) return x.named_degree < y.named_degree ? -1 : 1;
  return 0;
}

int word_degree(const Word& w) {
  int d = 0;
  for (const auto& g : w) d += g.degree();
  return d;
}

int word_cmp(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (std::size_t t = 0; t < u.size(); ++t)
    if (int c = sym_cmp(u[t], v[t]); c != 0) return c;
  return 0;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += "*";
    s += w[t].name();
  }
  return s;
}

}  // namespace braidch
