#pragma once

#include <string>

#include <json.hpp>

#include "braidch/augmentation.hpp"
#include "braidch/config.hpp"
#include "braidch/dga.hpp"
#include "braidch/homology.hpp"
#include "braidch/morse/complex.hpp"

namespace braidch {

using Json = nlohmann::ordered_json;

// NCPoly: canonical list of {"coeff": int, "word": ["a_1_2", ...]}.
Json ncpoly_to_json(const NCPoly& p);

// DGA schema: {"ring", "n"?, "generators": [{"name","degree"}...],
// "differential": {name: NCPoly}} in canonical generator order.
Json dga_to_json(const Dga& d);
Dga dga_from_json(const Json& j, bool check_d2 = true);
Dga load_dga(const std::string& path, bool check_d2 = true);

Json phi_table_to_json(const SubstitutionHom& h, int n);

Json augmentation_to_json(const Augmentation& a);
Json homology_report_to_json(const HomologyReport& r);
Json conjugation_report_to_json(const ConjugationReport& r);

// StrandSystem: {"n", "strands": [{"cx": [...], "sx": [...], "cy": [...],
// "sy": [...]}...]}.
Json strand_system_to_json(const morse::StrandSystem& s);
morse::StrandSystem strand_system_from_json(const Json& j);
morse::StrandSystem load_strand_system(const std::string& path);

Json critical_point_to_json(const morse::CriticalPoint& cp);
Json morse_complex_to_json(const morse::MorseComplex& mc);
Json inventory_to_json(const std::vector<morse::LabeledPoint>& inv);

// Report header: tool name/version, FNV-1a hash of the canonical config
// encoding, and the seed. Deterministic for a fixed config.
Json config_to_json(const RunConfig& c);
Json report_header(const RunConfig& c);
void apply_config_json(RunConfig& c, const Json& j);  // config-file layer
RunConfig load_config(const std::string& path, const RunConfig& base = {});

std::string dump_canonical(const Json& j);  // 2-space indent, trailing newline

}  // namespace braidch
