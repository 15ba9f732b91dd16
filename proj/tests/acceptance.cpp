// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Reports are JSON strings built deterministically so the final
// criterion can assert byte-identical reruns.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "braidch/augmentation.hpp"
#include "braidch/homology.hpp"
#include "braidch/json_io.hpp"
#include "braidch/morse/complex.hpp"
#include "braidch/morse/random_system.hpp"
#include "braidch/phi.hpp"
#include "braidch/rng.hpp"
#include "naive_aug.hpp"

using namespace braidch;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json report = Json::object();

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

const Ring Z = Ring::integers();

NCPoly a(int i, int j) { return NCPoly::generator(Z, GenSym::a(i, j)); }

// ---------------------------------------------------------------- criterion 1
Outcome unknot_fixture() {
  Outcome o;
  Dga d = unknot_dga();
  const Ring F2 = Ring::prime_field(2);
  GenSym a1 = GenSym::named("a_1", 1), a2 = GenSym::named("a_2", 1);
  GenSym b1 = GenSym::named("b_1", 2), b2 = GenSym::named("b_2", 2);
  o.require(d.ring == F2, "ring is F_2");
  o.require(d.d_of(a1).is_zero() && d.d_of(a2).is_zero(), "d a_i = 0");
  NCPoly sum = NCPoly::generator(F2, a1) + NCPoly::generator(F2, a2);
  o.require(d.d_of(b1) == sum && d.d_of(b2) == sum, "d b_i = a_1 + a_2");
  o.require(a1.degree() == 1 && a2.degree() == 1 && b1.degree() == 2 && b2.degree() == 2,
            "degrees (1,1,2,2)");

  Json ranks = Json::array();
  for (int L : {2, 3, 4}) {
    for (int degree : {0, 1}) {
      HomologyReport rep = homology_ranks(d, 2, degree, L);
      o.require(rep.rank == 1, "rank 1 in degree " + std::to_string(degree) + " at L=" +
                                   std::to_string(L));
      o.require(rep.stable, "stable at L=" + std::to_string(L));
      ranks.push_back(homology_report_to_json(rep));
    }
  }
  o.report = Json{{"criterion", 1}, {"dga", dga_to_json(d)}, {"homology", std::move(ranks)}};
  return o;
}

// ---------------------------------------------------------------- criterion 2
Outcome phi_self_consistency() {
  Outcome o;
  int relations = 0, commutations = 0, inversions = 0;
  for (int n = 2; n <= 5; ++n) {
    auto gens = braid_a_generators(n);
    auto equal_on_gens = [&](const SubstitutionHom& h1, const SubstitutionHom& h2) {
      for (const auto& g : gens)
        if (h1.apply(NCPoly::generator(Z, g)) != h2.apply(NCPoly::generator(Z, g))) return false;
      return true;
    };
    for (int k = 1; k + 1 <= n - 1; ++k) {
      ++relations;
      if (!equal_on_gens(phi_braid(BraidWord{n, {k, k + 1, k}}),
                         phi_braid(BraidWord{n, {k + 1, k, k + 1}})))
        o.fail("braid relation k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        ++commutations;
        if (!equal_on_gens(phi_braid(BraidWord{n, {i, j}}), phi_braid(BraidWord{n, {j, i}})))
          o.fail("far commutation " + std::to_string(i) + "," + std::to_string(j));
      }
    for (int k = 1; k <= n - 1; ++k) {
      ++inversions;
      SubstitutionHom pos = phi_letter(k, 1, n), neg = phi_letter(k, -1, n);
      for (const auto& g : gens) {
        NCPoly x = NCPoly::generator(Z, g);
        if (neg.apply(pos.apply(x)) != x || pos.apply(neg.apply(x)) != x)
          o.fail("inverse identity k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  }
  o.report = Json{{"criterion", 2},
                  {"braid_relations_checked", relations},
                  {"far_commutations_checked", commutations},
                  {"letter_inversions_checked", inversions},
                  {"pass", o.pass}};
  return o;
}

// ---------------------------------------------------------------- criterion 3
Outcome d_squared_sweep() {
  Outcome o;
  Json violations = Json::array();
  int exhaustive = 0;
  // every word with n <= 3, length <= 4
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> alphabet;
    for (int k = 1; k <= n - 1; ++k) {
      alphabet.push_back(k);
      alphabet.push_back(-k);
    }
    std::function<void(BraidWord&)> visit = [&](BraidWord& w) {
      ++exhaustive;
      DSquaredReport rep = check_d_squared(braid_dga(w));
      if (!rep.ok()) {
        o.fail("exhaustive violation at " + to_text(w));
        violations.push_back(to_text(w));
      }
      if (static_cast<int>(w.letters.size()) == 4) return;
      for (int letter : alphabet) {
        w.letters.push_back(letter);
        visit(w);
        w.letters.pop_back();
      }
    };
    BraidWord w{n, {}};
    visit(w);
  }

  const std::uint64_t seed = 20260809;
  const int random_trials = 500;
  Rng rng(seed);
  for (int t = 0; t < random_trials; ++t) {
    BraidWord w = random_braid(rng, rng.range(2, 4), rng.range(0, 8));
    DSquaredReport rep = check_d_squared(braid_dga(w));
    if (!rep.ok()) {
      o.fail("random violation at " + to_text(w));
      violations.push_back(to_text(w));
    }
  }
  o.report = Json{{"criterion", 3},
                  {"exhaustive_checked", exhaustive},
                  {"random_checked", random_trials},
                  {"seed", seed},
                  {"violations", std::move(violations)}};
  return o;
}

// ---------------------------------------------------------------- criterion 4
Outcome conjugation_invariance() {
  Outcome o;
  const std::uint64_t seed = 404;
  const int pairs = 50;
  Rng rng(seed);
  Json checked = Json::array();
  for (int t = 0; t < pairs; ++t) {
    int n = rng.range(2, 4);
    BraidWord w = random_braid(rng, n, rng.range(0, 6));
    BraidWord g = random_braid(rng, n, rng.range(0, 4));
    BraidWord c = conjugate(w, g);
    Json entry{{"w", to_text(w)}, {"g", to_text(g)}};
    for (std::uint32_t q : {2u, 3u}) {
      std::uint64_t base = aug_count(braid_dga(w), q);
      std::uint64_t conj = aug_count(braid_dga(c), q);
      entry["q" + std::to_string(q)] = Json::array({base, conj});
      if (base != conj)
        o.fail("mismatch at w=" + to_text(w) + " g=" + to_text(g) + " q=" + std::to_string(q));
    }
    checked.push_back(std::move(entry));
  }
  o.report = Json{{"criterion", 4}, {"seed", seed}, {"pairs", pairs}, {"results", std::move(checked)}};
  return o;
}

// ---------------------------------------------------------------- criterion 5
Outcome oracle_equality() {
  Outcome o;
  int words = 0;
  Json counts = Json::array();
  std::function<void(BraidWord&)> visit = [&](BraidWord& w) {
    ++words;
    Dga d = braid_dga(w);
    std::string dga_json = dump_canonical(dga_to_json(d));
    for (std::uint32_t q : {2u, 3u}) {
      std::uint64_t scan = aug_count(d, q);
      std::uint64_t reference = aug_count_serial(d, q);
      std::uint64_t naive =
          naive::count_augmentations(naive::parse_dga_json(dga_json), q);
      if (scan != naive || scan != reference)
        o.fail("count mismatch at " + to_text(w) + " q=" + std::to_string(q));
      if (q == 2) counts.push_back(Json{{"w", to_text(w)}, {"count", scan}});
    }
    if (static_cast<int>(w.letters.size()) == 4) return;
    for (int letter : {1, -1}) {
      w.letters.push_back(letter);
      visit(w);
      w.letters.pop_back();
    }
  };
  BraidWord w{2, {}};
  visit(w);
  o.report = Json{{"criterion", 5}, {"words_checked", words}, {"counts_f2", std::move(counts)}};
  return o;
}

// ---------------------------------------------------------------- criterion 6
morse::StrandSystem closed_form_system() {
  morse::StrandSystem s;
  s.n = 2;
  morse::FourierCurve f1;
  f1.cx = {2.0, 1.0};
  f1.sx = {0.0, 0.0};
  f1.cy = {0.0, 0.0};
  f1.sy = {0.0, 1.0};
  morse::FourierCurve f2;
  f2.cx = {0.0};
  f2.sx = {0.0};
  f2.cy = {0.0};
  f2.sy = {0.0};
  s.strands = {f1, f2};
  return s;
}

Outcome morse_oracle() {
  Outcome o;
  Json systems = Json::array();
  auto check_system = [&](const morse::StrandSystem& s, const std::string& name) {
    morse::DiffFunction g(s, 1, 2);
    try {
      auto cps = morse::critical_points(g);
      if (cps.size() != 4) {
        o.fail(name + ": expected 4 critical points");
        return;
      }
      int histogram[3] = {0, 0, 0};
      for (const auto& cp : cps) {
        ++histogram[cp.index];
        if (!(cp.residual < 1e-9)) o.fail(name + ": residual too large");
      }
      if (histogram[0] != 1 || histogram[1] != 2 || histogram[2] != 1)
        o.fail(name + ": index multiset is not {0,1,1,2}");
      morse::MorseComplex mc = morse::morse_complex(g);
      if (!mc.d_squared_ok) o.fail(name + ": d^2 != 0");
      if (mc.ranks != std::array<long, 3>{1, 2, 1}) o.fail(name + ": homology is not (1,2,1)");
      systems.push_back(Json{{"system", name}, {"complex", morse_complex_to_json(mc)}});
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  };

  check_system(closed_form_system(), "closed-form");
  for (std::uint64_t seed : {1ull, 2ull, 3ull})
    check_system(morse::random_generic_system(2, seed), "random-seed-" + std::to_string(seed));

  // closed-form radial oracle: min r = 1 at t = 1/2, max r = 3 at t = 0
  morse::RadialProfile profile = morse::radial_profile(closed_form_system(), 1, 2);
  o.require(profile.one_min_one_max(), "closed-form profile is generic");
  for (const auto& rc : profile.points) {
    if (rc.is_min)
      o.require(std::abs(rc.t - 0.5) < 1e-9 && std::abs(rc.r - 1.0) < 1e-9, "radial minimum");
    else
      o.require(std::abs(rc.t - 0.0) < 1e-9 && std::abs(rc.r - 3.0) < 1e-9, "radial maximum");
  }
  o.report = Json{{"criterion", 6}, {"systems", std::move(systems)}};
  return o;
}

// ---------------------------------------------------------------- criterion 7
Outcome inventory_match() {
  Outcome o;
  Json entries = Json::array();
  struct Case {
    int n;
    std::uint64_t seed;
  };
  for (Case c : {Case{2, 21}, Case{3, 7}}) {
    morse::StrandSystem s = morse::random_generic_system(c.n, c.seed);
    auto inv = morse::generator_inventory(s);
    std::size_t expected = 2u * c.n * (c.n - 1);
    if (inv.size() != expected)
      o.fail("inventory size " + std::to_string(inv.size()) + " != " + std::to_string(expected));
    Dga d = braid_dga(BraidWord{c.n, {}});
    if (d.generators.size() != inv.size()) o.fail("generator count mismatch with the braid DGA");
    for (std::size_t t = 0; t < std::min(inv.size(), d.generators.size()); ++t)
      if (!(inv[t].label == d.generators[t])) o.fail("label mismatch at position " + std::to_string(t));
    entries.push_back(Json{{"n", c.n}, {"seed", c.seed}, {"inventory", inventory_to_json(inv)}});
  }
  o.report = Json{{"criterion", 7}, {"cases", std::move(entries)}};
  return o;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* label;
    double limit_s;  // 0 = no limit stated
    std::function<Outcome()> run;
  };
  std::vector<Row> rows = {
      {1, "unknot fixture: differentials, degrees, homology ranks", 1.0, unknot_fixture},
      {2, "phi self-consistency: braid relations, commutation, inverses", 10.0, phi_self_consistency},
      {3, "d^2 = 0 sweep: exhaustive n<=3 len<=4 plus 500 seeded random", 0.0, d_squared_sweep},
      {4, "augmentation-count conjugation invariance over F_2 and F_3", 60.0, conjugation_invariance},
      {5, "optimized scan equals serial reference and JSON oracle", 0.0, oracle_equality},
      {6, "Morse oracle: 4 points, {0,1,1,2}, d^2 = 0, ranks (1,2,1)", 30.0, morse_oracle},
      {7, "generator inventory sizes 4 and 12 match the braid DGA", 0.0, inventory_match},
  };

  bool all_pass = true;
  std::vector<std::string> first_reports;
  for (const auto& row : rows) {
    auto t0 = Clock::now();
    Outcome o = row.run();
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (row.limit_s > 0 && elapsed > row.limit_s)
      o.fail("runtime " + std::to_string(elapsed) + "s exceeds " + std::to_string(row.limit_s) + "s");
    if (row.id >= 3) first_reports.push_back(dump_canonical(o.report));
    all_pass = all_pass && o.pass;
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", row.id, row.label,
                elapsed, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }

  // criterion 8: rerun 3..7 with the same seeds, reports must be byte-identical
  {
    auto t0 = Clock::now();
    bool identical = true;
    std::vector<std::function<Outcome()>> again = {d_squared_sweep, conjugation_invariance,
                                                   oracle_equality, morse_oracle, inventory_match};
    for (std::size_t t = 0; t < again.size(); ++t)
      if (dump_canonical(again[t]().report) != first_reports[t]) identical = false;
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    all_pass = all_pass && identical;
    std::printf("[%s] criterion 8: reruns of 3-7 are byte-identical (%.2fs)\n",
                identical ? "PASS" : "FAIL", elapsed);
  }

  return all_pass ? 0 : 1;
}
