#include "braidch/json_io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace braidch {

Json ncpoly_to_json(const NCPoly& p) {
  Json terms = Json::array();
  for (const auto& [word, coeff] : p.terms()) {
    Json w = Json::array();
    for (const auto& sym : word) w.push_back(sym.name());
    terms.push_back(Json{{"coeff", coeff}, {"word", std::move(w)}});
  }
  return terms;
}

namespace {

NCPoly ncpoly_from_json(const Json& j, Ring ring,
                        const std::map<std::string, GenSym>& symbols) {
  NCPoly p(ring);
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a list of terms");
  for (const auto& term : j) {
    Coeff coeff = term.at("coeff").get<Coeff>();
    Word word;
    for (const auto& name : term.at("word")) {
      auto it = symbols.find(name.get<std::string>());
      if (it == symbols.end())
        throw std::invalid_argument("undeclared symbol '" + name.get<std::string>() +
                                    "' in polynomial");
      word.push_back(it->second);
    }
    p += NCPoly::monomial(ring, std::move(word), coeff);
  }
  return p;
}

GenSym generator_from_json(const Json& j) {
  std::string name = j.at("name").get<std::string>();
  int degree = j.at("degree").get<int>();
  // names of the form a_<i>_<j> / b_<i>_<j> are the indexed braid symbols
  auto try_indexed = [&](char prefix) -> GenSym* {
    static thread_local GenSym parsed;
    if (name.size() < 5 || name[0] != prefix || name[1] != '_') return nullptr;
    auto second = name.find('_', 2);
    if (second == std::string::npos) return nullptr;
    try {
      std::size_t p1 = 0, p2 = 0;
      int i = std::stoi(name.substr(2, second - 2), &p1);
      int j2 = std::stoi(name.substr(second + 1), &p2);
      if (p1 != second - 2 || p2 != name.size() - second - 1) return nullptr;
      parsed = prefix == 'a' ? GenSym::a(i, j2) : GenSym::b(i, j2);
      return &parsed;
    } catch (const std::exception&) {
      return nullptr;
    }
  };
  if (GenSym* g = try_indexed('a')) {
    if (degree != 0) throw std::invalid_argument(name + " must have degree 0");
    return *g;
  }
  if (GenSym* g = try_indexed('b')) {
    if (degree != 1) throw std::invalid_argument(name + " must have degree 1");
    return *g;
  }
  return GenSym::named(name, degree);
}

}  // namespace

Json dga_to_json(const Dga& d) {
  Json j;
  j["ring"] = d.ring.name();
  if (d.braid_strands > 0) j["n"] = d.braid_strands;
  Json gens = Json::array();
  for (const auto& g : d.generators) gens.push_back(Json{{"name", g.name()}, {"degree", g.degree()}});
  j["generators"] = std::move(gens);
  Json diff = Json::object();
  for (const auto& g : d.generators) diff[g.name()] = ncpoly_to_json(d.d_of(g));
  j["differential"] = std::move(diff);
  return j;
}

Dga dga_from_json(const Json& j, bool check_d2) {
  Ring ring = Ring::from_name(j.at("ring").get<std::string>());
  std::vector<GenSym> generators;
  std::map<std::string, GenSym> symbols;
  for (const auto& gj : j.at("generators")) {
    GenSym g = generator_from_json(gj);
    if (!symbols.emplace(g.name(), g).second)
      throw std::invalid_argument("duplicate generator " + g.name());
    generators.push_back(g);
  }
  std::map<GenSym, NCPoly, SymLess> differential;
  if (j.contains("differential")) {
    for (const auto& [name, pj] : j.at("differential").items()) {
      auto it = symbols.find(name);
      if (it == symbols.end())
        throw std::invalid_argument("differential of undeclared generator " + name);
      differential.emplace(it->second, ncpoly_from_json(pj, ring, symbols));
    }
  }
  Dga d = custom_dga(ring, std::move(generators), std::move(differential), check_d2);
  if (j.contains("n")) d.braid_strands = j.at("n").get<int>();
  return d;
}

Dga load_dga(const std::string& path, bool check_d2) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j = Json::parse(in);
  return dga_from_json(j, check_d2);
}

Json phi_table_to_json(const SubstitutionHom& h, int n) {
  Json j;
  j["n"] = n;
  j["ring"] = "Z";
  Json table = Json::object();
  for (const auto& [g, image] : h.table()) table[g.name()] = ncpoly_to_json(image);
  j["table"] = std::move(table);
  return j;
}

Json augmentation_to_json(const Augmentation& a) {
  Json values = Json::object();
  for (const auto& [g, v] : a.values) values[g.name()] = v;
  return Json{{"q", a.q}, {"values", std::move(values)}};
}

Json homology_report_to_json(const HomologyReport& r) {
  return Json{{"q", r.q},
              {"degree", r.degree},
              {"cutoff", r.cutoff},
              {"dim_kernel", r.dim_kernel},
              {"dim_image", r.dim_image},
              {"rank", r.rank},
              {"stable", r.stable}};
}

Json conjugation_report_to_json(const ConjugationReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.results)
    trials.push_back(Json{{"conjugator", t.conjugator},
                          {"aug_count", t.count},
                          {"matches_base", t.matches_base}});
  return Json{{"braid", r.braid},
              {"q", r.q},
              {"seed", r.seed},
              {"trials", r.trials},
              {"conjugator_max_len", r.conjugator_max_len},
              {"base_count", r.base_count},
              {"results", std::move(trials)},
              {"violations", r.violations},
              {"ok", r.ok()}};
}

Json strand_system_to_json(const morse::StrandSystem& s) {
  Json strands = Json::array();
  for (const auto& f : s.strands)
    strands.push_back(Json{{"cx", f.cx}, {"sx", f.sx}, {"cy", f.cy}, {"sy", f.sy}});
  return Json{{"n", s.n}, {"strands", std::move(strands)}};
}

morse::StrandSystem strand_system_from_json(const Json& j) {
  morse::StrandSystem s;
  s.n = j.at("n").get<int>();
  for (const auto& fj : j.at("strands")) {
    morse::FourierCurve f;
    f.cx = fj.at("cx").get<std::vector<double>>();
    f.sx = fj.at("sx").get<std::vector<double>>();
    f.cy = fj.at("cy").get<std::vector<double>>();
    f.sy = fj.at("sy").get<std::vector<double>>();
    s.strands.push_back(std::move(f));
  }
  if (s.n != static_cast<int>(s.strands.size()))
    throw std::invalid_argument("strand count does not match strand list");
  return s;
}

morse::StrandSystem load_strand_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return strand_system_from_json(Json::parse(in));
}

Json critical_point_to_json(const morse::CriticalPoint& cp) {
  return Json{{"t", cp.t},
              {"theta", cp.theta},
              {"value", cp.value},
              {"index", cp.index},
              {"residual", cp.residual}};
}

Json morse_complex_to_json(const morse::MorseComplex& mc) {
  Json points = Json::array();
  for (const auto& cp : mc.points) points.push_back(critical_point_to_json(cp));
  Json lines = Json::array();
  for (const auto& l : mc.lines)
    lines.push_back(Json{{"start", l.start},
                         {"end", l.end},
                         {"descending", l.descending},
                         {"arclength", l.arclength},
                         {"samples", l.path.size()}});
  return Json{{"critical_points", std::move(points)},
              {"flow_matrix", mc.flow_matrix},
              {"lines", std::move(lines)},
              {"d_squared_ok", mc.d_squared_ok},
              {"homology_ranks", mc.ranks}};
}

Json inventory_to_json(const std::vector<morse::LabeledPoint>& inv) {
  Json j = Json::array();
  for (const auto& lp : inv) {
    Json e = critical_point_to_json(lp.cp);
    e["label"] = lp.label.name();
    e["i"] = lp.i;
    e["j"] = lp.j;
    j.push_back(std::move(e));
  }
  return j;
}

Json config_to_json(const RunConfig& c) {
  return Json{{"ring", c.ring.name()},
              {"q", c.q},
              {"cutoff", c.cutoff},
              {"aug_budget", c.aug_budget},
              {"word_budget", c.word_budget},
              {"seed", c.seed},
              {"format", c.format},
              {"morse",
               Json{{"tol_crit", c.morse.tol_crit},
                    {"tol_nondeg", c.morse.tol_nondeg},
                    {"tol_capture", c.morse.tol_capture},
                    {"sep_min", c.morse.sep_min},
                    {"integrator_tol", c.morse.integrator_tol},
                    {"profile_samples", c.morse.profile_samples},
                    {"max_flow_steps", c.morse.max_flow_steps}}}};
}

Json report_header(const RunConfig& c) {
  char hex[19];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(config_to_json(c).dump())));
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"config_hash", std::string(hex)},
              {"seed", c.seed}};
}

void apply_config_json(RunConfig& c, const Json& j) {
  if (j.contains("ring")) c.ring = Ring::from_name(j.at("ring").get<std::string>());
  if (j.contains("q")) c.q = j.at("q").get<std::uint32_t>();
  if (j.contains("cutoff")) c.cutoff = j.at("cutoff").get<int>();
  if (j.contains("aug_budget")) c.aug_budget = j.at("aug_budget").get<std::uint64_t>();
  if (j.contains("word_budget")) c.word_budget = j.at("word_budget").get<std::uint64_t>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (j.contains("morse")) {
    const Json& m = j.at("morse");
    if (m.contains("tol_crit")) c.morse.tol_crit = m.at("tol_crit").get<double>();
    if (m.contains("tol_nondeg")) c.morse.tol_nondeg = m.at("tol_nondeg").get<double>();
    if (m.contains("tol_capture")) c.morse.tol_capture = m.at("tol_capture").get<double>();
    if (m.contains("sep_min")) c.morse.sep_min = m.at("sep_min").get<double>();
    if (m.contains("integrator_tol")) c.morse.integrator_tol = m.at("integrator_tol").get<double>();
    if (m.contains("profile_samples")) c.morse.profile_samples = m.at("profile_samples").get<int>();
    if (m.contains("max_flow_steps")) c.morse.max_flow_steps = m.at("max_flow_steps").get<int>();
  }
}

RunConfig load_config(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  RunConfig c = base;
  apply_config_json(c, Json::parse(in));
  return c;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace braidch
