#pragma once

#include <cstdint>
#include <vector>

#include "braidch/dga.hpp"

namespace braidch {

struct HomologyOptions {
  std::uint64_t word_budget = std::uint64_t{1} << 21;  // cap on enumerated words
  bool check_stability = true;                         // also compute at L+1
};

struct HomologyReport {
  std::uint32_t q = 2;
  int degree = 0;
  int cutoff = 0;       // word-length cutoff L
  long dim_kernel = 0;  // cycles of degree `degree`, length <= L
  long dim_image = 0;   // boundaries landing entirely in length <= L
  long rank = 0;        // dim_kernel - dim_image
  bool stable = false;  // rank agrees at cutoffs L and L+1
};

// Truncated homology rank of (A, d) over F_q in one degree: exact GF(q)
// linear algebra on the basis of degree-d words of length <= L. The incoming
// boundary uses every degree-(d+1) word short enough that its image can meet
// the length-L window; the reported image dimension is that of the boundary
// space intersected with the window.
HomologyReport homology_ranks(const Dga& d, std::uint32_t q, int degree, int cutoff,
                              const HomologyOptions& opt = {});

// Words of the given total degree with length <= max_len over the DGA's
// generators, in canonical order. Exposed for tests and the report tooling.
std::vector<Word> words_of_degree(const Dga& d, int degree, int max_len,
                                  std::uint64_t word_budget);

// Dense matrix over F_q with exact Gaussian elimination.
class GfMatrix {
 public:
  GfMatrix(std::uint32_t q, std::size_t rows, std::size_t cols);

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::size_t rank() const;
  static std::size_t rank_of_concat(const GfMatrix& a, const GfMatrix& b);  // [A | B]

 private:
  std::uint32_t q_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> data_;
};

}  // namespace braidch
