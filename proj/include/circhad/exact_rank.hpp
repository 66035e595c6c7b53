#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "circhad/circulant.hpp"
#include "circhad/scalar.hpp"
#include "circhad/sign_row.hpp"

namespace circhad {

/// Row 3 = a * row 1 + b * row 2.
struct RowDependency {
  Rational a;
  Rational b;

  friend bool operator==(const RowDependency&, const RowDependency&) = default;
};

struct RankCertificate {
  std::size_t rank = 0;
  /// 1-based rows that carried a pivot, in elimination order.
  std::vector<std::size_t> pivot_rows;
  /// Present when the order is at least 3 and rank <= 2.
  std::optional<RowDependency> dependency;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination. Rows are first
/// scaled to integers; the pivot in each column is the first remaining row
/// with a nonzero entry, so the certificate is deterministic.
RankCertificate rank(const Circulant& a);

/// Rank of an arbitrary integer matrix (row-major, `rows` x `cols`) with the
/// same elimination; pivot rows are 1-based.
RankCertificate integer_rank(std::vector<Integer> entries, std::size_t rows,
                             std::size_t cols);

/// Coefficients expressing `target` in terms of `first` and `second`. When
/// the first two are independent the solution is unique; otherwise the
/// returned pair uses b = 0. Empty when no combination exists.
std::optional<RowDependency> express_row(const std::vector<Rational>& first,
                                         const std::vector<Rational>& second,
                                         const std::vector<Rational>& target);

enum class Rank1Class { constant_plus, constant_minus, alternating, not_rank1 };

std::string_view to_string(Rank1Class c);

/// Structural classification of a +-1 row of even length whose circulant has
/// rank 1: constant, or alternating (a, b, a, b, ...) with a != b. Both
/// alternating phases fold into `alternating`; see alternating_phase().
/// Throws std::invalid_argument on odd length.
Rank1Class rank1_structure(const SignRow& row);

/// First entry of an alternating row (+1 for (1, -1, ...)).
int alternating_phase(const SignRow& row);

/// For a +-1 row of even length >= 6 whose circulant has rank 2, returns the
/// unique (a, b) with row 3 = a row 1 + b row 2. If the entry sum is nonzero
/// the result is checked to satisfy a + b = 1 (LemmaViolation otherwise).
///
/// Throws std::invalid_argument on bad length, PreconditionViolation when
/// the rank is not 2, and DependentBasis when rows 1 and 2 are dependent.
std::optional<RowDependency> rank2_coefficients(const SignRow& row);

/// rank(A A^T) == rank(A).
bool check_rank_gram_equality(const Circulant& a);

/// Implication "rows 1 and 2 of circm(row) are equal => row is constant".
bool consecutive_equal_rows_implies_constant(const SignRow& row);

/// If rows 1 and 3 of circm(row) coincide, returns the entry sum s, which is
/// checked to lie in {0, 2k, -2k} for length 2k. Empty otherwise.
/// Throws std::invalid_argument unless the length is even and >= 6.
std::optional<long> first_equals_third_sum(const SignRow& row);

/// Solution set of { a + b = 1, hk = a hl + b hm } over Q for signs hk, hl, hm.
struct AffineCoefficientSolution {
  enum class Kind { none, unique, one_parameter } kind = Kind::none;
  /// Valid when kind == unique.
  Rational a;
  Rational b;
};

AffineCoefficientSolution solve_affine_coefficients(int hk, int hl, int hm);

}  // namespace circhad
