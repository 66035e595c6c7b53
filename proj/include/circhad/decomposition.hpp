#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "circhad/circulant.hpp"
#include "circhad/exact_rank.hpp"
#include "circhad/sign_row.hpp"

namespace circhad {

/// Odd/even split of a candidate H = circm(h_1, ..., h_n), n even:
/// E1 = circm(h_1, h_3, ..., h_{n-1}) and E2 = circm(h_2, h_4, ..., h_n).
struct Decomposition {
  std::size_t n = 0;
  SignRow e1_row;
  SignRow e2_row;
  Circulant e1;
  Circulant e2;
  long lambda1 = 0;  // h_1 + h_3 + ... + h_{n-1}
  long lambda2 = 0;  // h_2 + h_4 + ... + h_n
  Circulant g1;      // E1 E1^T
  Circulant g2;      // E2 E2^T
  RankCertificate rank1;
  RankCertificate rank2;
  Circulant k1;  // (E1 + E2) / 2
  Circulant k2;  // (E1 - E2) / 2
};

/// Throws std::invalid_argument unless the length is even and >= 4.
Decomposition decompose(const SignRow& row);

/// Inverse of the split: (e1_1, e2_1, e1_2, e2_2, ...).
SignRow interleave(const SignRow& odd, const SignRow& even);

/// First row of pi H, i.e. (h_n, h_1, ..., h_{n-1}). Swaps the roles of the
/// odd and even blocks.
SignRow shift_by_pi(const SignRow& row);

/// sum_{j=2..n/2} <R_1, R_j> + sum_{j=2..n/2} <S_1, S_j>, where R_j and S_j
/// are the rows of E1 and E2. Zero for every circulant Hadamard row.
long graphr_identity(const SignRow& row);

/// Checks <R_1, R_j> + <S_1, S_j> = <T_1, T_{2j-1}> for every j = 1..n/2,
/// T_j being the rows of circm(row).
bool graphr_rowwise_holds(const SignRow& row);

struct MisscaseReport {
  long lambda1 = 0;
  long lambda2 = 0;
  long product = 0;
  long sum_of_squares = 0;
  /// True when lambda1 != 0, so one pi shift is needed to bring the zero
  /// eigenvalue onto the odd block.
  bool needs_shift = false;
  /// The row after that optional shift; its odd block sums to zero.
  SignRow normalized_row;
};

/// For a circulant Hadamard row of even length >= 4: lambda1 lambda2 = 0 and
/// lambda1^2 + lambda2^2 = n (LemmaViolation if either fails).
/// PreconditionViolation for non-Hadamard input.
MisscaseReport misscase_check(const SignRow& row);

struct ProjectionReport {
  bool k1_is_projection = false;
  bool k2_is_projection = false;
};

/// K^2 == K in exact rational arithmetic, for K1 and K2.
ProjectionReport projection_check(const SignRow& row);

struct Mod2Report {
  bool k1_ok = false;
  bool k2_ok = false;
};

/// Whether K1 and K2 reduced mod 2 are symmetric and orthogonal over F2.
Mod2Report mod2_symmetric_orthogonal(const SignRow& row);

struct ConditionProfile {
  bool cond_a = false;  // rank(E1) = rank(E2) = 1
  bool cond_b = false;  // all entries of G1, G2 share one absolute value
  bool cond_c = false;  // rows 1, 2 dependent over Q in both E1 and E2
  bool cond_d = false;  // |<R1,R2>| = |<R1,R1>| and |<S1,S2>| = |<S1,S1>|
  std::pair<std::size_t, std::size_t> ranks{0, 0};
  bool gram_abs_uniform = false;
  long graphr_sum = 0;
  long lambda_product = 0;
};

ConditionProfile classify_conditions(const SignRow& row);
ConditionProfile classify_conditions(const Decomposition& d);

struct RegularityProfile {
  std::size_t n = 0;
  std::optional<long> h;  // sqrt(n) / 2 when n = 4 h^2
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
  long row_sum = 0;
  bool consistent = false;
};

/// Row counts of a circulant Hadamard row against n = 4h^2 with h odd and
/// (2h^2 + h, 2h^2 - h) entry counts in either sign. An order not of that
/// form is reported as inconsistent. PreconditionViolation when the row is
/// not circulant Hadamard.
RegularityProfile regularity_profile(const SignRow& row);

/// (2h^2 + h, 2h^2 - h): entry counts of the majority and minority sign in a
/// regular Hadamard row of order 4h^2. Throws std::invalid_argument for h < 1.
std::pair<std::size_t, std::size_t> expected_regular_counts(long h);

}  // namespace circhad
