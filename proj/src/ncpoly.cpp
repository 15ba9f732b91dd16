#include "braidch/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidch {

NCPoly NCPoly::monomial(Ring ring, Word w, Coeff c) {
  NCPoly p(ring);
  p.insert_term(std::move(w), ring.normalize(c));
  return p;
}

Coeff NCPoly::coeff_of(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return word_less(t.first, key); });
  if (it != terms_.end() && word_cmp(it->first, w) == 0) return it->second;
  return 0;
}

void NCPoly::insert_term(Word w, Coeff c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return word_less(t.first, key); });
  if (it != terms_.end() && word_cmp(it->first, w) == 0) {
    it->second = ring_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{std::move(w), c});
  }
}

void NCPoly::require_same_ring(const NCPoly& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("coefficient ring mismatch");
}

NCPoly NCPoly::operator-() const {
  NCPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace_back(w, ring_.neg(c));
  return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  require_same_ring(o);
  // merge two canonically sorted term lists
  NCPoly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t s = 0, t = 0;
  while (s < terms_.size() && t < o.terms_.size()) {
    int c = word_cmp(terms_[s].first, o.terms_[t].first);
    if (c < 0) {
      r.terms_.push_back(terms_[s++]);
    } else if (c > 0) {
      r.terms_.push_back(o.terms_[t++]);
    } else {
      Coeff sum = ring_.add(terms_[s].second, o.terms_[t].second);
      if (sum != 0) r.terms_.emplace_back(terms_[s].first, sum);
      ++s, ++t;
    }
  }
  for (; s < terms_.size(); ++s) r.terms_.push_back(terms_[s]);
  for (; t < o.terms_.size(); ++t) r.terms_.push_back(o.terms_[t]);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const {
  require_same_ring(o);
  NCPoly r(ring_);
  for (const auto& [wu, cu] : terms_) {
    for (const auto& [wv, cv] : o.terms_) {
      Word w;
      w.reserve(wu.size() + wv.size());
      w.insert(w.end(), wu.begin(), wu.end());
      w.insert(w.end(), wv.begin(), wv.end());
      r.insert_term(std::move(w), ring_.mul(cu, cv));
    }
  }
  return r;
}

NCPoly NCPoly::scaled(Coeff c) const {
  NCPoly r(ring_);
  c = ring_.normalize(c);
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) {
    Coeff m = ring_.mul(k, c);
    if (m != 0) r.terms_.emplace_back(w, m);
  }
  return r;
}

NCPoly NCPoly::reduced_mod(std::uint32_t q) const {
  if (!is_prime(q)) throw std::invalid_argument("modulus " + std::to_string(q) + " is not prime");
  if (!ring_.is_integers()) {
    if (ring_.modulus == q) return *this;
    throw std::invalid_argument("cannot reduce " + ring_.name() + " coefficients mod " + std::to_string(q));
  }
  Ring rq = Ring::prime_field(q);
  NCPoly r(rq);
  for (const auto& [w, c] : terms_) {
    Coeff m = rq.normalize(c);
    if (m != 0) r.terms_.emplace_back(w, m);
  }
  return r;
}

DegreeInfo NCPoly::degree() const {
  if (terms_.empty()) return {DegreeInfo::Kind::zero, 0};
  int d = word_degree(terms_.front().first);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) != d) return {DegreeInfo::Kind::inhomogeneous, 0};
  return {DegreeInfo::Kind::homogeneous, d};
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    Coeff c = terms_[t].second;
    if (t == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Coeff mag = c < 0 ? -c : c;
    if (mag != 1 || terms_[t].first.empty()) {
      s += std::to_string(mag);
      if (!terms_[t].first.empty()) s += "*";
    }
    if (!terms_[t].first.empty()) s += word_name(terms_[t].first);
  }
  return s;
}

const NCPoly* SubstitutionHom::image(const GenSym& g) const {
  auto it = table_.find(g);
  return it == table_.end() ? nullptr : &it->second;
}

NCPoly SubstitutionHom::apply(const NCPoly& p) const {
  const Ring ring = p.ring();
  auto image_in_ring = [&](const GenSym& g) -> NCPoly {
    const NCPoly* im = image(g);
    if (!im) return NCPoly::generator(ring, g);
    if (im->ring() == ring) return *im;
    if (im->ring().is_integers() && !ring.is_integers()) return im->reduced_mod(ring.modulus);
    throw std::invalid_argument("substitution image ring incompatible with operand ring");
  };
  NCPoly result(ring);
  for (const auto& [w, c] : p.terms()) {
    NCPoly prod = NCPoly::monomial(ring, Word{}, c);
    for (const auto& g : w) prod = prod * image_in_ring(g);
    result += prod;
  }
  return result;
}

}  // namespace braidch
