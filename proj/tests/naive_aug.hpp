#pragma once

// Independent augmentation-count oracle. Re-parses a DGA's JSON encoding into
// its own flat structures and evaluates every relation symbol by symbol over
// F_q; shares no evaluation code with the library scan.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace naive {

struct NaiveDga {
  std::vector<std::string> scan_vars;         // degree-0 generator names, file order
  std::map<std::string, int> degree_of;       // every generator
  // relations: list of (coeff, list of symbol names)
  std::vector<std::vector<std::pair<long long, std::vector<std::string>>>> relations;
};

inline NaiveDga parse_dga_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  NaiveDga d;
  for (const auto& g : j.at("generators")) {
    std::string name = g.at("name").get<std::string>();
    int degree = g.at("degree").get<int>();
    d.degree_of[name] = degree;
    if (degree == 0) d.scan_vars.push_back(name);
  }
  for (const auto& [name, poly] : j.at("differential").items()) {
    (void)name;
    std::vector<std::pair<long long, std::vector<std::string>>> relation;
    for (const auto& term : poly) {
      std::vector<std::string> word;
      for (const auto& sym : term.at("word")) word.push_back(sym.get<std::string>());
      relation.emplace_back(term.at("coeff").get<long long>(), std::move(word));
    }
    if (!relation.empty()) d.relations.push_back(std::move(relation));
  }
  return d;
}

inline std::uint64_t count_augmentations(const NaiveDga& d, std::uint32_t q) {
  const std::size_t m = d.scan_vars.size();
  std::vector<std::uint32_t> value(m, 0);
  std::uint64_t count = 0;
  while (true) {
    std::map<std::string, std::uint32_t> env;
    for (std::size_t v = 0; v < m; ++v) env[d.scan_vars[v]] = value[v];

    bool all_zero = true;
    for (const auto& relation : d.relations) {
      long long sum = 0;
      for (const auto& [coeff, word] : relation) {
        long long prod = ((coeff % q) + q) % q;
        for (const auto& sym : word) {
          int degree = d.degree_of.at(sym);
          std::uint32_t v = degree == 0 ? env.at(sym) : 0;  // positive degree -> 0
          prod = prod * v % q;
        }
        sum = (sum + prod) % q;
      }
      if (sum != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) ++count;

    // odometer
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++value[pos] < q) break;
      value[pos] = 0;
      if (pos == 0) return count;
    }
    if (m == 0) return count;
  }
}

}  // namespace naive
