#include "braidch/homology.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "braidch/errors.hpp"

namespace braidch {

GfMatrix::GfMatrix(std::uint32_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(q)) throw std::invalid_argument("matrix modulus must be prime");
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  // Fermat: a^(q-2) mod q
  std::uint64_t r = 1, b = a % q;
  for (std::uint32_t e = q - 2; e; e >>= 1) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
  }
  return static_cast<std::uint32_t>(r);
}

std::size_t eliminate(std::vector<std::uint32_t>& m, std::size_t rows, std::size_t cols,
                      std::uint32_t q) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols; ++c) std::swap(m[pivot * cols + c], m[rank * cols + c]);
    std::uint32_t inv = inv_mod(m[rank * cols + col], q);
    for (std::size_t c = col; c < cols; ++c)
      m[rank * cols + c] = static_cast<std::uint32_t>(std::uint64_t(m[rank * cols + c]) * inv % q);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint32_t f = m[r * cols + col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        std::uint64_t sub = std::uint64_t(f) * m[rank * cols + c] % q;
        m[r * cols + c] = static_cast<std::uint32_t>((m[r * cols + c] + q - sub) % q);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t GfMatrix::rank() const {
  std::vector<std::uint32_t> work = data_;
  return eliminate(work, rows_, cols_, q_);
}

std::size_t GfMatrix::rank_of_concat(const GfMatrix& a, const GfMatrix& b) {
  if (a.rows_ != b.rows_ || a.q_ != b.q_) throw std::invalid_argument("concat shape mismatch");
  std::size_t cols = a.cols_ + b.cols_;
  std::vector<std::uint32_t> work(a.rows_ * cols, 0);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) work[r * cols + c] = a.at(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) work[r * cols + a.cols_ + c] = b.at(r, c);
  }
  return eliminate(work, a.rows_, cols, a.q_);
}

std::vector<Word> words_of_degree(const Dga& d, int degree, int max_len,
                                  std::uint64_t word_budget) {
  std::vector<Word> out;
  if (max_len < 0) return out;
  bool has_negative = false;
  for (const auto& g : d.generators)
    if (g.degree() < 0) has_negative = true;

  std::uint64_t visited = 0;
  Word cur;
  // canonical order: length first, then lexicographic in the generator order
  std::function<void(int, int, int)> rec = [&](int len, int target_len, int deg_so_far) {
    if (++visited > word_budget)
      throw BudgetExceeded("word enumeration exceeded budget " + std::to_string(word_budget));
    if (len == target_len) {
      if (deg_so_far == degree) out.push_back(cur);
      return;
    }
    if (!has_negative && deg_so_far > degree) return;
    for (const auto& g : d.generators) {
      cur.push_back(g);
      rec(len + 1, target_len, deg_so_far + g.degree());
      cur.pop_back();
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(0, len, 0);
  return out;
}

namespace {

Dga reduce_dga(const Dga& d, std::uint32_t q) {
  if (!d.ring.is_integers()) {
    if (d.ring.modulus == q) return d;
    throw std::invalid_argument("DGA over " + d.ring.name() + " cannot be reduced to F_" +
                                std::to_string(q));
  }
  Dga r = d;
  r.ring = Ring::prime_field(q);
  for (auto& [g, image] : r.differential) image = image.reduced_mod(q);
  return r;
}

struct TruncationCounts {
  long dim_kernel = 0;
  long dim_image = 0;
  long rank = 0;
};

TruncationCounts rank_at_cutoff(const Dga& dq, std::uint32_t q, int degree, int cutoff,
                                const HomologyOptions& opt) {
  const std::vector<Word> kernel_basis = words_of_degree(dq, degree, cutoff, opt.word_budget);

  // row index over every degree-(degree-1)... any word encountered as an image
  std::map<Word, std::size_t, decltype(&word_less)> rows(&word_less);
  auto row_of = [&](const Word& w) {
    auto [it, inserted] = rows.emplace(w, rows.size());
    return it->second;
  };

  // outgoing differential: no row truncation, so the kernel is exact
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> out_cols;
  out_cols.reserve(kernel_basis.size());
  for (const auto& w : kernel_basis) {
    NCPoly image = differential(dq, NCPoly::monomial(dq.ring, w, 1));
    std::vector<std::pair<std::size_t, std::uint32_t>> col;
    for (const auto& [iw, c] : image.terms()) col.emplace_back(row_of(iw), static_cast<std::uint32_t>(c));
    out_cols.push_back(std::move(col));
  }
  std::size_t out_rows = rows.size();
  GfMatrix outgoing(q, std::max<std::size_t>(out_rows, 1), std::max<std::size_t>(kernel_basis.size(), 1));
  for (std::size_t c = 0; c < out_cols.size(); ++c)
    for (const auto& [r, v] : out_cols[c]) outgoing.at(r, c) = v;
  long dim_kernel = static_cast<long>(kernel_basis.size()) -
                    static_cast<long>(kernel_basis.empty() ? 0 : outgoing.rank());

  // incoming boundaries: every degree+1 word short enough that a word of its
  // length can map into the cutoff window
  int min_image_len = std::numeric_limits<int>::max();
  for (const auto& [g, image] : dq.differential)
    for (const auto& [w, c] : image.terms())
      min_image_len = std::min(min_image_len, static_cast<int>(w.size()));
  long dim_image = 0;
  if (min_image_len != std::numeric_limits<int>::max()) {
    int incoming_cutoff = cutoff + 1 - min_image_len;
    std::vector<Word> pre_basis = words_of_degree(dq, degree + 1, incoming_cutoff, opt.word_budget);
    // ambient rows: the window basis first, then any longer image words
    std::map<Word, std::size_t, decltype(&word_less)> ambient(&word_less);
    for (const auto& w : kernel_basis) ambient.emplace(w, ambient.size());
    std::size_t window_dim = ambient.size();
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> in_cols;
    in_cols.reserve(pre_basis.size());
    for (const auto& w : pre_basis) {
      NCPoly image = differential(dq, NCPoly::monomial(dq.ring, w, 1));
      std::vector<std::pair<std::size_t, std::uint32_t>> col;
      for (const auto& [iw, c] : image.terms()) {
        auto [it, inserted] = ambient.emplace(iw, ambient.size());
        col.emplace_back(it->second, static_cast<std::uint32_t>(c));
      }
      in_cols.push_back(std::move(col));
    }
    if (!in_cols.empty() && ambient.size() > 0) {
      GfMatrix boundary(q, ambient.size(), in_cols.size());
      for (std::size_t c = 0; c < in_cols.size(); ++c)
        for (const auto& [r, v] : in_cols[c]) boundary.at(r, c) = v;
      GfMatrix window(q, ambient.size(), std::max<std::size_t>(window_dim, 1));
      for (std::size_t t = 0; t < window_dim; ++t) window.at(t, t) = 1;
      // dim(boundaries ∩ window) = rk B + dim W - rk [B | W]
      std::size_t rk_b = boundary.rank();
      std::size_t rk_bw = GfMatrix::rank_of_concat(boundary, window);
      dim_image = static_cast<long>(rk_b) + static_cast<long>(window_dim) - static_cast<long>(rk_bw);
    }
  }

  TruncationCounts counts;
  counts.dim_kernel = dim_kernel;
  counts.dim_image = dim_image;
  counts.rank = dim_kernel - dim_image;
  return counts;
}

}  // namespace

HomologyReport homology_ranks(const Dga& d, std::uint32_t q, int degree, int cutoff,
                              const HomologyOptions& opt) {
  if (!is_prime(q)) throw std::invalid_argument("homology modulus must be prime");
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
  Dga dq = reduce_dga(d, q);

  TruncationCounts at_l = rank_at_cutoff(dq, q, degree, cutoff, opt);
  HomologyReport rep;
  rep.q = q;
  rep.degree = degree;
  rep.cutoff = cutoff;
  rep.dim_kernel = at_l.dim_kernel;
  rep.dim_image = at_l.dim_image;
  rep.rank = at_l.rank;
  if (opt.check_stability) {
    TruncationCounts at_l1 = rank_at_cutoff(dq, q, degree, cutoff + 1, opt);
    rep.stable = at_l1.rank == at_l.rank;
  }
  return rep;
}

}  // namespace braidch
