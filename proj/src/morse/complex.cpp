#include "braidch/morse/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "braidch/errors.hpp"
#include "braidch/homology.hpp"

namespace braidch::morse {

MorseComplex morse_complex(const DiffFunction& g, const MorseTolerances& tol) {
  MorseComplex mc;
  mc.points = critical_points(g, tol);
  const int m = static_cast<int>(mc.points.size());
  mc.flow_matrix.assign(m, std::vector<int>(m, 0));

  for (int s = 0; s < m; ++s) {
    if (mc.points[s].index != 1) continue;
    // descents give the saddle rows of d_1
    for (int branch = 0; branch < branch_count(mc.points[s], true); ++branch) {
      FlowLine line = trace_flow(g, mc.points, s, branch, tol, true);
      mc.flow_matrix[s][line.end] += 1;
      mc.lines.push_back(std::move(line));
    }
    // ascents out of the saddle land on maxima: each is a flow line of the
    // maximum down to this saddle, giving the columns of d_2
    for (int branch = 0; branch < branch_count(mc.points[s], false); ++branch) {
      FlowLine line = trace_flow(g, mc.points, s, branch, tol, false);
      mc.flow_matrix[line.end][s] += 1;
      mc.lines.push_back(std::move(line));
    }
  }

  std::vector<int> of_index[3];
  for (int p = 0; p < m; ++p) {
    if (mc.points[p].index < 0 || mc.points[p].index > 2)
      throw GeometryError("Morse index out of range on T^2");
    of_index[mc.points[p].index].push_back(p);
  }

  // boundary matrices over F_2 from parity of rigid-line counts
  GfMatrix d1(2, std::max<std::size_t>(of_index[0].size(), 1),
              std::max<std::size_t>(of_index[1].size(), 1));
  for (std::size_t r = 0; r < of_index[0].size(); ++r)
    for (std::size_t c = 0; c < of_index[1].size(); ++c)
      d1.at(r, c) = mc.flow_matrix[of_index[1][c]][of_index[0][r]] % 2;
  GfMatrix d2(2, std::max<std::size_t>(of_index[1].size(), 1),
              std::max<std::size_t>(of_index[2].size(), 1));
  for (std::size_t r = 0; r < of_index[1].size(); ++r)
    for (std::size_t c = 0; c < of_index[2].size(); ++c)
      d2.at(r, c) = mc.flow_matrix[of_index[2][c]][of_index[1][r]] % 2;

  // d^2 = 0 over F_2: d1 * d2 must vanish
  mc.d_squared_ok = true;
  for (std::size_t r = 0; r < of_index[0].size(); ++r)
    for (std::size_t c = 0; c < of_index[2].size(); ++c) {
      int acc = 0;
      for (std::size_t k = 0; k < of_index[1].size(); ++k)
        acc += d1.at(r, k) * d2.at(k, c);
      if (acc % 2 != 0) mc.d_squared_ok = false;
    }
  if (!mc.d_squared_ok) throw GeometryError("Morse boundary fails d^2 = 0 over F_2");

  std::size_t r1 = of_index[0].empty() || of_index[1].empty() ? 0 : d1.rank();
  std::size_t r2 = of_index[1].empty() || of_index[2].empty() ? 0 : d2.rank();
  mc.ranks[0] = static_cast<long>(of_index[0].size()) - static_cast<long>(r1);
  mc.ranks[1] = static_cast<long>(of_index[1].size()) - static_cast<long>(r1) - static_cast<long>(r2);
  mc.ranks[2] = static_cast<long>(of_index[2].size()) - static_cast<long>(r2);
  return mc;
}

std::vector<LabeledPoint> generator_inventory(const StrandSystem& s, const MorseTolerances& tol) {
  validate_separation(s, tol);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= s.n; ++i)
    for (int j = i + 1; j <= s.n; ++j) pairs.emplace_back(i, j);

  std::vector<std::vector<LabeledPoint>> per_pair(pairs.size());
  bool failed = false;
  std::string failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs.size()); ++p) {
    try {
      auto [i, j] = pairs[p];
      DiffFunction g(s, i, j);
      RadialProfile profile = radial_profile(g, tol);
      if (!profile.one_min_one_max())
        throw GeometryError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not in generic position: " + std::to_string(profile.min_count) +
                            " minima / " + std::to_string(profile.max_count) + " maxima");
      std::vector<CriticalPoint> cps = critical_points(g, tol);

      // a_ij: positive-value saddle (over the radial minimum); b_ij:
      // positive-value maximum (over the radial maximum); swapping the pair
      // negates g, complements the index, and keeps the location
      const CriticalPoint* a_pos = nullptr;
      const CriticalPoint* a_neg = nullptr;
      const CriticalPoint* b_pos = nullptr;
      const CriticalPoint* b_neg = nullptr;
      for (const auto& cp : cps) {
        if (cp.index == 1) (cp.value > 0 ? a_pos : a_neg) = &cp;
        if (cp.index == 2) b_pos = &cp;
        if (cp.index == 0) b_neg = &cp;
      }
      if (!a_pos || !a_neg || !b_pos || !b_neg || b_pos->value <= 0 || b_neg->value >= 0)
        throw GeometryError("could not partition critical values for pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");

      auto flipped = [](const CriticalPoint& cp) {
        CriticalPoint r = cp;
        r.value = -cp.value;
        r.index = 2 - cp.index;
        return r;
      };
      per_pair[p] = {
          {GenSym::a(i, j), i, j, *a_pos},
          {GenSym::a(j, i), j, i, flipped(*a_neg)},
          {GenSym::b(i, j), i, j, *b_pos},
          {GenSym::b(j, i), j, i, flipped(*b_neg)},
      };
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        failure = e.what();
      }
    }
  }
  if (failed) throw GeometryError(failure);

  std::vector<LabeledPoint> inventory;
  for (auto& block : per_pair)
    for (auto& lp : block) inventory.push_back(std::move(lp));
  std::sort(inventory.begin(), inventory.end(),
            [](const LabeledPoint& x, const LabeledPoint& y) { return sym_less(x.label, y.label); });
  return inventory;
}

}  // namespace braidch::morse
