#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidch/dga.hpp"
#include "braidch/rng.hpp"

using namespace braidch;

namespace {

const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);

NCPoly a(int i, int j, Ring r = Z) { return NCPoly::generator(r, GenSym::a(i, j)); }
NCPoly b(int i, int j, Ring r = Z) { return NCPoly::generator(r, GenSym::b(i, j)); }

}  // namespace

TEST_CASE("identity braid has vanishing differential") {
  Dga d = braid_dga(BraidWord{3, {}});
  CHECK(d.generators.size() == 12);
  for (const auto& g : d.generators) CHECK(d.d_of(g).is_zero());
  CHECK(d.closure_cycles == 3);
}

TEST_CASE("single positive crossing on two strands") {
  Dga d = braid_dga(BraidWord{2, {1}});
  CHECK(d.d_of(GenSym::b(1, 2)) == a(1, 2) - a(2, 1));
  CHECK(d.d_of(GenSym::b(2, 1)) == a(2, 1) - a(1, 2));
  CHECK(d.d_of(GenSym::a(1, 2)).is_zero());
  CHECK(d.closure_cycles == 1);
}

TEST_CASE("single crossing inside three strands") {
  Dga d = braid_dga(BraidWord{3, {1}});
  CHECK(d.d_of(GenSym::b(1, 3)) == a(1, 3) + a(2, 3) + a(2, 1) * a(1, 3));
  CHECK(d.closure_cycles == 2);  // closure is a two-component link
}

TEST_CASE("one-strand braid gives the empty DGA") {
  Dga d = braid_dga(BraidWord{1, {}});
  CHECK(d.generators.empty());
}

TEST_CASE("unknot fixture") {
  Dga d = unknot_dga();
  GenSym a1 = GenSym::named("a_1", 1), a2 = GenSym::named("a_2", 1);
  GenSym b1 = GenSym::named("b_1", 2), b2 = GenSym::named("b_2", 2);

  CHECK(d.ring == F2);
  CHECK(d.d_of(a1).is_zero());
  CHECK(d.d_of(a2).is_zero());
  NCPoly expected = NCPoly::generator(F2, a1) + NCPoly::generator(F2, a2);
  CHECK(d.d_of(b1) == expected);
  CHECK(d.d_of(b2) == expected);

  CHECK(a1.degree() == 1);
  CHECK(b1.degree() == 2);
  CHECK(d.d_of(b1).degree().value == 1);  // deg(b_1) - 1
}

TEST_CASE("Leibniz rule") {
  SUBCASE("products of cycles are cycles in the unknot DGA") {
    Dga d = unknot_dga();
    NCPoly a1 = NCPoly::generator(F2, GenSym::named("a_1", 1));
    NCPoly a2 = NCPoly::generator(F2, GenSym::named("a_2", 1));
    CHECK(differential(d, a1 * a2).is_zero());
  }

  SUBCASE("even-degree left factor keeps the plus sign") {
    Dga d = unknot_dga();
    NCPoly b1 = NCPoly::generator(F2, GenSym::named("b_1", 2));
    NCPoly b2 = NCPoly::generator(F2, GenSym::named("b_2", 2));
    NCPoly s = NCPoly::generator(F2, GenSym::named("a_1", 1)) +
               NCPoly::generator(F2, GenSym::named("a_2", 1));
    CHECK(differential(d, b1 * b2) == s * b2 + b1 * s);
  }

  SUBCASE("odd-degree left factor flips the sign over Z") {
    Dga d = braid_dga(BraidWord{2, {1}});
    NCPoly lhs = differential(d, b(1, 2) * b(2, 1));
    NCPoly expected = (a(1, 2) - a(2, 1)) * b(2, 1) - b(1, 2) * (a(2, 1) - a(1, 2));
    CHECK(lhs == expected);
  }

  SUBCASE("linearity on random inputs") {
    Dga d = braid_dga(BraidWord{3, {1, -2, 1}});
    Rng rng(37);
    auto random_poly = [&](int max_terms) {
      NCPoly p(Z);
      for (int t = 0, terms = rng.range(0, max_terms); t < terms; ++t) {
        Word w;
        for (int s = 0, len = rng.range(0, 3); s < len; ++s) {
          const auto& g = d.generators[rng.below(d.generators.size())];
          w.push_back(g);
        }
        p += NCPoly::monomial(Z, std::move(w), rng.range(-3, 3));
      }
      return p;
    };
    for (int trial = 0; trial < 40; ++trial) {
      NCPoly p = random_poly(4), q = random_poly(4);
      CHECK(differential(d, p + q) == differential(d, p) + differential(d, q));
    }
  }

  SUBCASE("unknown symbols are rejected") {
    Dga d = braid_dga(BraidWord{2, {1}});
    NCPoly alien = NCPoly::generator(Z, GenSym::a(1, 3));
    CHECK_THROWS_AS(differential(d, alien), std::invalid_argument);
  }
}

TEST_CASE("grading of differential images") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord w = random_braid(rng, rng.range(2, 4), rng.range(0, 6));
    Dga d = braid_dga(w);
    for (const auto& g : d.generators) {
      DegreeInfo info = d.d_of(g).degree();
      CHECK(info.is_homogeneous());
      if (!info.is_zero()) CHECK(info.value == g.degree() - 1);
    }
  }
}

TEST_CASE("d squared vanishes") {
  SUBCASE("unknot") { CHECK(check_d_squared(unknot_dga()).ok()); }

  SUBCASE("random braids") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
      BraidWord w = random_braid(rng, rng.range(2, 4), rng.range(0, 6));
      CHECK(check_d_squared(braid_dga(w)).ok());
    }
  }

  SUBCASE("constructed counterexample is flagged") {
    GenSym ga = GenSym::named("a", 1), gb = GenSym::named("b", 2);
    std::map<GenSym, NCPoly, SymLess> diff;
    diff.emplace(ga, NCPoly::unit(F2));                 // d(a) = 1
    diff.emplace(gb, NCPoly::generator(F2, ga));        // d(b) = a
    CHECK_THROWS_AS(custom_dga(F2, {ga, gb}, diff, true), std::invalid_argument);

    Dga d = custom_dga(F2, {ga, gb}, diff, false);
    DSquaredReport rep = check_d_squared(d);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].gen == gb);
    CHECK(rep.violations[0].image == NCPoly::unit(F2));  // d^2 b = 1 != 0
  }
}

TEST_CASE("custom DGA validation") {
  GenSym ga = GenSym::named("x", 1), gb = GenSym::named("y", 3);
  SUBCASE("undeclared symbol in an image") {
    std::map<GenSym, NCPoly, SymLess> diff;
    diff.emplace(ga, NCPoly::generator(F2, GenSym::named("ghost", 0)));
    CHECK_THROWS_AS(custom_dga(F2, {ga}, diff, false), std::invalid_argument);
  }
  SUBCASE("wrong image degree") {
    std::map<GenSym, NCPoly, SymLess> diff;
    diff.emplace(gb, NCPoly::generator(F2, ga));  // degree 1, needs 2
    CHECK_THROWS_AS(custom_dga(F2, {ga, gb}, diff, false), std::invalid_argument);
  }
  SUBCASE("inhomogeneous image") {
    std::map<GenSym, NCPoly, SymLess> diff;
    diff.emplace(gb, NCPoly::generator(F2, ga) + NCPoly::unit(F2));
    CHECK_THROWS_AS(custom_dga(F2, {ga, gb}, diff, false), std::invalid_argument);
  }
}

TEST_CASE("free reduction does not change the DGA") {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.range(2, 4);
    BraidWord w = random_braid(rng, n, rng.range(0, 5));
    // splice a canceling pair into a random spot
    BraidWord padded = w;
    int k = rng.range(1, n - 1);
    std::size_t at = rng.below(padded.letters.size() + 1);
    padded.letters.insert(padded.letters.begin() + at, {k, -k});
    Dga d1 = braid_dga(w);
    Dga d2 = braid_dga(padded);
    CHECK(d1.differential == d2.differential);
    CHECK(free_reduce(padded) == free_reduce(w));
  }
}

TEST_CASE("F_2 braid DGA is the integral one reduced mod 2") {
  Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    BraidWord w = random_braid(rng, rng.range(2, 4), rng.range(0, 6));
    Dga dz = braid_dga(w, Z);
    Dga d2 = braid_dga(w, F2);
    for (const auto& g : dz.generators) CHECK(dz.d_of(g).reduced_mod(2) == d2.d_of(g));
  }
}
