#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidch/ncpoly.hpp"
#include "braidch/rng.hpp"

using namespace braidch;

namespace {

const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);

NCPoly a(int i, int j, Ring r = Z) { return NCPoly::generator(r, GenSym::a(i, j)); }
NCPoly b(int i, int j, Ring r = Z) { return NCPoly::generator(r, GenSym::b(i, j)); }

// random polynomial in low-index a/b symbols
NCPoly random_poly(Rng& rng, Ring ring) {
  NCPoly p(ring);
  int terms = rng.range(0, 4);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = rng.range(0, 3);
    for (int s = 0; s < len; ++s) {
      int i = rng.range(1, 3);
      int j = rng.range(1, 3);
      if (i == j) j = i == 3 ? 1 : i + 1;
      w.push_back(rng.below(2) == 0 ? GenSym::a(i, j) : GenSym::b(i, j));
    }
    p += NCPoly::monomial(ring, std::move(w), rng.range(-4, 4));
  }
  return p;
}

}  // namespace

TEST_CASE("symbol construction and degrees") {
  CHECK(GenSym::a(1, 2).degree() == 0);
  CHECK(GenSym::b(1, 2).degree() == 1);
  CHECK(GenSym::named("a_1", 1).degree() == 1);
  CHECK(GenSym::a(1, 2).name() == "a_1_2");
  CHECK_THROWS_AS(GenSym::a(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GenSym::a(0, 2), std::invalid_argument);
}

TEST_CASE("addition") {
  CHECK((a(1, 2, F2) + a(1, 2, F2)).is_zero());           // characteristic 2
  CHECK((a(1, 2) + a(2, 1)).term_count() == 2);
  CHECK((a(1, 2) - a(2, 1)) + a(2, 1) == a(1, 2));
  CHECK_THROWS_AS(a(1, 2) + a(1, 2, F2), std::invalid_argument);  // ring mismatch
}

TEST_CASE("multiplication") {
  CHECK(NCPoly::unit(Z) * a(1, 2) == a(1, 2));
  CHECK(a(1, 2) * NCPoly::unit(Z) == a(1, 2));

  NCPoly prod = a(1, 2) * a(2, 1);
  REQUIRE(prod.term_count() == 1);
  CHECK(prod.terms()[0].first == Word{GenSym::a(1, 2), GenSym::a(2, 1)});

  // distributivity over F_2
  NCPoly lhs = (a(1, 2, F2) + a(2, 1, F2)) * a(1, 2, F2);
  NCPoly rhs = a(1, 2, F2) * a(1, 2, F2) + a(2, 1, F2) * a(1, 2, F2);
  CHECK(lhs == rhs);
  CHECK(lhs.term_count() == 2);

  // noncommutativity
  CHECK(a(1, 2) * a(2, 1) != a(2, 1) * a(1, 2));
}

TEST_CASE("associativity on random inputs") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Ring ring = rng.below(2) == 0 ? Z : F2;
    NCPoly p = random_poly(rng, ring), q = random_poly(rng, ring), r = random_poly(rng, ring);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("substitution homomorphism") {
  SubstitutionHom swap12;
  swap12.set(GenSym::a(1, 2), a(2, 1));
  swap12.set(GenSym::a(2, 1), a(1, 2));

  SUBCASE("identity fixes everything") {
    SubstitutionHom id;
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      NCPoly p = random_poly(rng, Z);
      CHECK(id.apply(p) == p);
    }
  }

  SUBCASE("multiplicative extension") {
    NCPoly image = swap12.apply(a(1, 2) * a(2, 1));
    CHECK(image == a(2, 1) * a(1, 2));
  }

  SUBCASE("the braid action row with k=1, i=3") {
    SubstitutionHom h;
    h.set(GenSym::a(1, 3), -a(2, 3) - a(2, 1) * a(1, 3));
    NCPoly image = h.apply(a(1, 3));
    CHECK(image == -a(2, 3) - a(2, 1) * a(1, 3));
    CHECK(image.term_count() == 2);
  }

  SUBCASE("homomorphism law on random inputs") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      NCPoly p = random_poly(rng, Z), q = random_poly(rng, Z);
      CHECK(swap12.apply(p * q) == swap12.apply(p) * swap12.apply(q));
    }
    CHECK(swap12.apply(NCPoly::unit(Z)) == NCPoly::unit(Z));
  }
}

TEST_CASE("degree") {
  CHECK((a(1, 2) * a(2, 1)).degree().is_homogeneous());
  CHECK((a(1, 2) * a(2, 1)).degree().value == 0);

  NCPoly ba = b(1, 2) * a(2, 1);
  CHECK(ba.degree().value == 1);

  NCPoly mixed = a(1, 2) + b(1, 2);
  CHECK(!mixed.degree().is_homogeneous());

  CHECK(NCPoly::unit(Z).degree().value == 0);
  CHECK(NCPoly::zero(Z).degree().is_zero());
}

TEST_CASE("reduction mod q") {
  CHECK((a(1, 2) - a(2, 1)).reduced_mod(2) == a(1, 2, F2) + a(2, 1, F2));
  CHECK(a(1, 2).scaled(2).reduced_mod(2).is_zero());

  NCPoly p = -a(2, 3) - a(2, 1) * a(1, 3);
  NCPoly r = p.reduced_mod(3);
  CHECK(r.coeff_of(Word{GenSym::a(2, 3)}) == 2);
  CHECK(r.coeff_of(Word{GenSym::a(2, 1), GenSym::a(1, 3)}) == 2);

  CHECK_THROWS_AS(a(1, 2).reduced_mod(4), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(a(1, 2, F2).reduced_mod(3), std::invalid_argument);
}

TEST_CASE("reduce_mod commutes with the ring operations") {
  Rng rng(29);
  SubstitutionHom h;
  h.set(GenSym::a(1, 2), -a(2, 1) - a(1, 2) * a(2, 1));
  for (int trial = 0; trial < 40; ++trial) {
    NCPoly p = random_poly(rng, Z), q = random_poly(rng, Z);
    CHECK((p + q).reduced_mod(3) == p.reduced_mod(3) + q.reduced_mod(3));
    CHECK((p * q).reduced_mod(3) == p.reduced_mod(3) * q.reduced_mod(3));
    CHECK(h.apply(p).reduced_mod(3) == h.apply(p.reduced_mod(3)));
  }
}

TEST_CASE("canonical form is deterministic") {
  // same polynomial assembled in two different orders
  NCPoly p1 = a(1, 2) * a(2, 1) + a(1, 2) + NCPoly::unit(Z);
  NCPoly p2 = NCPoly::unit(Z) + a(1, 2) + a(1, 2) * a(2, 1);
  CHECK(p1 == p2);
  CHECK(p1.to_string() == p2.to_string());
  // canonical order: unit first (shortest), then by symbols
  CHECK(p1.terms().front().first.empty());
  CHECK(p1.to_string() == "1 + a_1_2 + a_1_2*a_2_1");
}

TEST_CASE("integer overflow is detected") {
  NCPoly big = NCPoly::monomial(Z, Word{GenSym::a(1, 2)}, INT64_MAX);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big.scaled(2), std::overflow_error);
}
