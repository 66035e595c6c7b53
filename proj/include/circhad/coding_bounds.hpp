#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "circhad/circulant.hpp"

namespace circhad {

/// Hamming distance between the low `length` bits of x and y.
unsigned hamming(std::uint64_t x, std::uint64_t y, unsigned length);

/// 2 * floor(d / (2d - m)) when d is even and 2d > m; empty otherwise.
std::optional<long> plotkin_bound(long m, long d);

struct PlotkinQuery {
  long m = 0;
  long d = 0;
  std::optional<long> bound;
};

PlotkinQuery make_plotkin_query(long m, long d);

struct CodeSearchResult {
  std::size_t size = 0;
  /// Codewords as bit patterns of length m, sorted ascending.
  std::vector<std::uint32_t> witness_code;
};

/// Largest binary code of length m with pairwise distance >= d, by exact
/// maximum-clique search. Throws ResourceLimit for m > 12 and
/// std::invalid_argument for m < 1. Fast when 2d > m or d <= 2;
/// inside the Plotkin gap (e.g. m = 9, d = 4) the search is exponential.
CodeSearchResult max_code_bruteforce(unsigned m, unsigned d);

/// Strictly increasing 0-based index lists into a host matrix.
struct SubmatrixSpec {
  std::vector<std::size_t> row_indices;
  std::vector<std::size_t> col_indices;
};

struct MonochromaticCheck {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t ab = 0;
  std::size_t n = 0;
  bool all_equal = false;
  /// a * b <= n; always true when the selection is not constant.
  bool bound_holds = true;
};

/// Constant a x b submatrix of a Hadamard host of order n > 2 must satisfy
/// ab <= n. Throws PreconditionViolation for a host with non-orthogonal rows
/// or order <= 2, std::invalid_argument for a malformed selection, and
/// LemmaViolation if a constant selection breaks the bound.
MonochromaticCheck monochromatic_bound_check(const SignMatrix& host,
                                             const SubmatrixSpec& spec);

}  // namespace circhad
