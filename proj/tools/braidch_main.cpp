// braidch: braid DGAs from knot contact homology, their augmentation and
// truncated-homology invariants, and the Morse-theoretic model of the
// generators on the torus.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "braidch/augmentation.hpp"
#include "braidch/errors.hpp"
#include "braidch/homology.hpp"
#include "braidch/json_io.hpp"
#include "braidch/morse/complex.hpp"
#include "braidch/phi.hpp"
#include "braidch/morse/random_system.hpp"
#include "braidch/rng.hpp"

using namespace braidch;

namespace {

// Flag values live beside the config so precedence can be applied after
// parsing: defaults < config file < environment (budget caps only) < flags.
struct CliState {
  RunConfig config;     // final merged configuration
  RunConfig flags;      // raw flag values
  std::string config_path;
  std::string format_override;
  CLI::Option* opt_seed = nullptr;
  CLI::Option* opt_aug_budget = nullptr;
  CLI::Option* opt_word_budget = nullptr;
  CLI::Option* opt_tol_crit = nullptr;
  CLI::Option* opt_tol_nondeg = nullptr;
  CLI::Option* opt_tol_capture = nullptr;
  CLI::Option* opt_sep_min = nullptr;
  CLI::Option* opt_integrator_tol = nullptr;
  CLI::Option* opt_profile_samples = nullptr;
};

void finalize_config(CliState& st, const std::string& subcommand_default_format) {
  st.config = RunConfig{};
  if (!st.config_path.empty()) st.config = load_config(st.config_path, st.config);
  if (const char* v = std::getenv("BRAIDCH_AUG_BUDGET")) st.config.aug_budget = std::stoull(v);
  if (const char* v = std::getenv("BRAIDCH_WORD_BUDGET")) st.config.word_budget = std::stoull(v);
  if (st.opt_seed->count()) st.config.seed = st.flags.seed;
  if (st.opt_aug_budget->count()) st.config.aug_budget = st.flags.aug_budget;
  if (st.opt_word_budget->count()) st.config.word_budget = st.flags.word_budget;
  if (st.opt_tol_crit->count()) st.config.morse.tol_crit = st.flags.morse.tol_crit;
  if (st.opt_tol_nondeg->count()) st.config.morse.tol_nondeg = st.flags.morse.tol_nondeg;
  if (st.opt_tol_capture->count()) st.config.morse.tol_capture = st.flags.morse.tol_capture;
  if (st.opt_sep_min->count()) st.config.morse.sep_min = st.flags.morse.sep_min;
  if (st.opt_integrator_tol->count())
    st.config.morse.integrator_tol = st.flags.morse.integrator_tol;
  if (st.opt_profile_samples->count())
    st.config.morse.profile_samples = st.flags.morse.profile_samples;
  if (!st.format_override.empty())
    st.config.format = st.format_override;
  else
    st.config.format = subcommand_default_format;
  if (st.config.format != "json" && st.config.format != "text")
    throw std::invalid_argument("format must be json or text");
}

void emit(const Json& j) { std::cout << dump_canonical(j); }

AugScanOptions scan_options(const RunConfig& c) {
  AugScanOptions opt;
  opt.budget = c.aug_budget;
  return opt;
}

Ring ring_from_flag(const std::string& name) { return Ring::from_name(name); }

int warn_if_link(const Dga& d) {
  if (d.provenance == "braid" && d.closure_cycles != 1)
    std::cerr << "warning: closure has " << d.closure_cycles
              << " components (not a knot); the DGA is still a braid invariant\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid DGA and Morse-flow toolkit for knot contact homology"};
  app.require_subcommand(1);

  CliState st;
  app.add_option("--config", st.config_path, "JSON config file; flags win over file values");
  app.add_option("--format", st.format_override, "output format: json | text");
  st.opt_seed = app.add_option("--seed", st.flags.seed, "PRNG seed for randomized subcommands");
  st.opt_aug_budget = app.add_option("--aug-budget", st.flags.aug_budget,
                                     "max assignments an augmentation scan may visit");
  st.opt_word_budget = app.add_option("--word-budget", st.flags.word_budget,
                                      "max words a homology enumeration may visit");
  st.opt_tol_crit = app.add_option("--tol-crit", st.flags.morse.tol_crit,
                                   "critical point gradient tolerance");
  st.opt_tol_nondeg = app.add_option("--tol-nondeg", st.flags.morse.tol_nondeg,
                                     "nondegeneracy tolerance");
  st.opt_tol_capture = app.add_option("--tol-capture", st.flags.morse.tol_capture,
                                      "flow capture radius");
  st.opt_sep_min = app.add_option("--sep-min", st.flags.morse.sep_min, "minimum strand separation");
  st.opt_integrator_tol = app.add_option("--integrator-tol", st.flags.morse.integrator_tol,
                                         "flow integrator error target per unit arclength");
  st.opt_profile_samples = app.add_option("--profile-samples", st.flags.morse.profile_samples,
                                          "dense samples for radial profiles");

  // dga <braid>
  std::string dga_braid, dga_ring = "Z";
  auto* cmd_dga = app.add_subcommand("dga", "print the braid DGA as JSON");
  cmd_dga->add_option("braid", dga_braid, "braid word, e.g. \"3: 1 -2 1\"")->required();
  cmd_dga->add_option("--ring", dga_ring, "coefficient ring: Z or F_<p>");

  // phi <braid>
  std::string phi_arg;
  auto* cmd_phi = app.add_subcommand("phi", "print the generator table of the braid action");
  cmd_phi->add_option("braid", phi_arg, "braid word")->required();

  // check [<braid>] [--input file]
  std::string check_braid, check_input;
  auto* cmd_check = app.add_subcommand("check", "verify d^2 = 0");
  cmd_check->add_option("braid", check_braid, "braid word");
  cmd_check->add_option("--input", check_input, "custom DGA JSON file");

  // aug <braid> | --input | --unknot
  std::string aug_braid, aug_input;
  bool aug_unknot = false, aug_list = false, aug_serial = false;
  std::uint32_t aug_q = 2;
  auto* cmd_aug = app.add_subcommand("aug", "count (or list) augmentations into F_q");
  cmd_aug->add_option("braid", aug_braid, "braid word");
  cmd_aug->add_option("--input", aug_input, "custom DGA JSON file");
  cmd_aug->add_flag("--unknot", aug_unknot, "use the built-in unknot DGA");
  cmd_aug->add_option("--q", aug_q, "target field F_q");
  cmd_aug->add_flag("--list", aug_list, "list the augmentations, not just the count");
  cmd_aug->add_flag("--serial", aug_serial, "use the serial reference scan");

  // homology
  std::string hom_braid, hom_input;
  bool hom_unknot = false;
  std::uint32_t hom_q = 2;
  int hom_degree = 1;
  auto* cmd_hom = app.add_subcommand("homology", "truncated homology rank in one degree");
  cmd_hom->add_option("braid", hom_braid, "braid word");
  cmd_hom->add_option("--input", hom_input, "custom DGA JSON file");
  cmd_hom->add_flag("--unknot", hom_unknot, "use the built-in unknot DGA");
  cmd_hom->add_option("--q", hom_q, "coefficient field F_q");
  cmd_hom->add_option("--degree", hom_degree, "homological degree");
  int hom_cutoff = -1;
  cmd_hom->add_option("--L,--cutoff", hom_cutoff, "word-length cutoff (default from config)");

  // conj-test
  std::string conj_braid;
  int conj_trials = 20, conj_max_len = 4;
  std::uint32_t conj_q = 2;
  auto* cmd_conj = app.add_subcommand("conj-test", "augmentation-count invariance under random conjugation");
  cmd_conj->add_option("braid", conj_braid, "braid word")->required();
  cmd_conj->add_option("--trials", conj_trials, "number of random conjugators");
  cmd_conj->add_option("--q", conj_q, "target field F_q");
  cmd_conj->add_option("--max-len", conj_max_len, "max conjugator length");

  // unknot
  bool unknot_homology = false;
  std::uint32_t unknot_q = 2;
  int unknot_degree = 1, unknot_cutoff = -1;
  auto* cmd_unknot = app.add_subcommand("unknot", "the four-generator unknot DGA over F_2");
  cmd_unknot->add_flag("--homology", unknot_homology, "report a truncated homology rank instead");
  cmd_unknot->add_option("--q", unknot_q, "coefficient field (must be 2)");
  cmd_unknot->add_option("--degree", unknot_degree, "homological degree");
  cmd_unknot->add_option("--L,--cutoff", unknot_cutoff, "word-length cutoff");

  // morse
  std::string morse_system;
  int morse_random_n = 0;
  std::vector<int> morse_pair;
  bool morse_inventory = false;
  auto* cmd_morse = app.add_subcommand("morse", "critical points, flow lines and Morse homology of strand differences");
  cmd_morse->add_option("--system", morse_system, "StrandSystem JSON file");
  cmd_morse->add_option("--random-n", morse_random_n, "generate a seeded random generic system with n strands");
  cmd_morse->add_option("--pair", morse_pair, "restrict to one strand pair i j")->expected(2);
  cmd_morse->add_flag("--inventory", morse_inventory, "label all critical points as DGA generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_dga->parsed()) {
      finalize_config(st, "json");
      Dga d = braid_dga(parse_braid(dga_braid), ring_from_flag(dga_ring));
      warn_if_link(d);
      emit(dga_to_json(d));
    } else if (cmd_phi->parsed()) {
      finalize_config(st, "json");
      BraidWord w = parse_braid(phi_arg);
      Json j;
      j["header"] = report_header(st.config);
      Json body = phi_table_to_json(phi_braid(w), w.n);
      for (auto& [k, v] : body.items()) j[k] = v;
      emit(j);
    } else if (cmd_check->parsed()) {
      finalize_config(st, "text");
      if (check_braid.empty() && check_input.empty())
        throw std::invalid_argument("check needs a braid word or --input FILE");
      Dga d = !check_input.empty() ? load_dga(check_input, false)
                                   : braid_dga(parse_braid(check_braid));
      DSquaredReport rep = check_d_squared(d);
      if (st.config.format == "text") {
        std::cout << (rep.ok() ? "d^2 = 0: PASS" : "d^2 = 0: FAIL") << "\n";
        for (const auto& v : rep.violations)
          std::cout << "  d^2(" << v.gen.name() << ") = " << v.image.to_string() << "\n";
      } else {
        Json j;
        j["header"] = report_header(st.config);
        j["pass"] = rep.ok();
        j["generators_checked"] = rep.generators_checked;
        Json viols = Json::array();
        for (const auto& v : rep.violations)
          viols.push_back(Json{{"generator", v.gen.name()}, {"image", ncpoly_to_json(v.image)}});
        j["violations"] = std::move(viols);
        emit(j);
      }
      return rep.ok() ? 0 : 1;
    } else if (cmd_aug->parsed()) {
      finalize_config(st, "json");
      if (aug_braid.empty() && aug_input.empty() && !aug_unknot)
        throw std::invalid_argument("aug needs a braid word, --input FILE, or --unknot");
      Dga d = aug_unknot ? unknot_dga()
              : !aug_input.empty() ? load_dga(aug_input)
                                   : braid_dga(parse_braid(aug_braid));
      warn_if_link(d);
      AugScanOptions opt = scan_options(st.config);
      Json j;
      j["header"] = report_header(st.config);
      j["braid"] = aug_unknot ? std::string("unknot") : !aug_input.empty() ? aug_input : aug_braid;
      j["q"] = aug_q;
      if (aug_list) {
        auto augs = aug_serial ? enumerate_augmentations_serial(d, aug_q, opt)
                               : enumerate_augmentations(d, aug_q, opt);
        j["aug_count"] = augs.size();
        Json list = Json::array();
        for (const auto& a : augs) list.push_back(augmentation_to_json(a));
        j["augmentations"] = std::move(list);
      } else {
        j["aug_count"] = aug_serial ? aug_count_serial(d, aug_q, opt) : aug_count(d, aug_q, opt);
      }
      emit(j);
    } else if (cmd_hom->parsed() || cmd_unknot->parsed()) {
      bool is_unknot_cmd = cmd_unknot->parsed();
      finalize_config(st, "json");
      if (is_unknot_cmd && !unknot_homology) {
        emit(dga_to_json(unknot_dga()));
        return 0;
      }
      if (!is_unknot_cmd && !hom_unknot && hom_braid.empty() && hom_input.empty())
        throw std::invalid_argument("homology needs a braid word, --input FILE, or --unknot");
      Dga d = is_unknot_cmd || hom_unknot ? unknot_dga()
              : !hom_input.empty()        ? load_dga(hom_input)
                                          : braid_dga(parse_braid(hom_braid));
      std::uint32_t q = is_unknot_cmd ? unknot_q : hom_q;
      int degree = is_unknot_cmd ? unknot_degree : hom_degree;
      int cutoff = is_unknot_cmd ? unknot_cutoff : hom_cutoff;
      if (cutoff < 0) cutoff = st.config.cutoff;
      HomologyOptions opt;
      opt.word_budget = st.config.word_budget;
      HomologyReport rep = homology_ranks(d, q, degree, cutoff, opt);
      Json j;
      j["header"] = report_header(st.config);
      j["dga"] = is_unknot_cmd || hom_unknot ? std::string("unknot")
                 : !hom_input.empty()        ? hom_input
                                             : hom_braid;
      j["homology"] = Json::array({homology_report_to_json(rep)});
      emit(j);
    } else if (cmd_conj->parsed()) {
      finalize_config(st, "json");
      BraidWord w = parse_braid(conj_braid);
      ConjugationReport rep = conjugation_experiment(w, conj_trials, conj_q, st.config.seed,
                                                     conj_max_len, scan_options(st.config));
      Json j;
      j["header"] = report_header(st.config);
      j["experiments"] = Json::array({conjugation_report_to_json(rep)});
      emit(j);
      return rep.ok() ? 0 : 1;
    } else if (cmd_morse->parsed()) {
      finalize_config(st, "json");
      morse::StrandSystem sys;
      if (!morse_system.empty()) {
        sys = load_strand_system(morse_system);
      } else if (morse_random_n >= 2) {
        sys = morse::random_generic_system(morse_random_n, st.config.seed, st.config.morse);
      } else {
        throw std::invalid_argument("morse needs --system FILE or --random-n N");
      }
      morse::validate_separation(sys, st.config.morse);
      Json j;
      j["header"] = report_header(st.config);
      j["system"] = strand_system_to_json(sys);
      if (morse_pair.size() == 2) {
        morse::DiffFunction g(sys, morse_pair[0], morse_pair[1]);
        j["pairs"] = Json::array(
            {Json{{"i", morse_pair[0]},
                  {"j", morse_pair[1]},
                  {"complex", morse_complex_to_json(morse::morse_complex(g, st.config.morse))}}});
      } else {
        Json pairs = Json::array();
        for (int i = 1; i <= sys.n; ++i)
          for (int jdx = i + 1; jdx <= sys.n; ++jdx) {
            morse::DiffFunction g(sys, i, jdx);
            pairs.push_back(
                Json{{"i", i},
                     {"j", jdx},
                     {"complex", morse_complex_to_json(morse::morse_complex(g, st.config.morse))}});
          }
        j["pairs"] = std::move(pairs);
      }
      if (morse_inventory)
        j["inventory"] = inventory_to_json(morse::generator_inventory(sys, st.config.morse));
      emit(j);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
