#include "circhad/decomposition.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "circhad/errors.hpp"
#include "circhad/f2.hpp"

namespace circhad {

namespace {

void require_even_order(const SignRow& row) {
  if (row.size() < 4 || row.size() % 2 != 0) {
    throw std::invalid_argument("decomposition needs even length >= 4, got " +
                                std::to_string(row.size()));
  }
}

std::pair<SignRow, SignRow> split(const SignRow& row) {
  std::vector<int> odd;
  std::vector<int> even;
  for (std::size_t j = 0; j < row.size(); ++j) (j % 2 == 0 ? odd : even).push_back(row[j]);
  return {SignRow(std::move(odd)), SignRow(std::move(even))};
}

// <R_1, R_j> of circm(row), 1-based j, in integers.
long inner_with_first(const SignRow& row, std::size_t j) {
  const std::size_t k = row.size();
  const std::size_t s = j - 1;
  long acc = 0;
  for (std::size_t l = 0; l < k; ++l) acc += row[l] * row[(l + k - s) % k];
  return acc;
}

bool rows12_dependent(const SignRow& row) {
  const std::size_t k = row.size();
  std::vector<Integer> m(2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    m[j] = row[j];
    m[k + j] = row[(j + k - 1) % k];
  }
  return integer_rank(std::move(m), 2, k).rank <= 1;
}

long to_long(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<long>();
}

}  // namespace

SignRow interleave(const SignRow& odd, const SignRow& even) {
  if (odd.size() != even.size()) {
    throw std::invalid_argument("interleave needs blocks of equal length");
  }
  std::vector<int> out;
  out.reserve(2 * odd.size());
  for (std::size_t j = 0; j < odd.size(); ++j) {
    out.push_back(odd[j]);
    out.push_back(even[j]);
  }
  return SignRow(std::move(out));
}

SignRow shift_by_pi(const SignRow& row) { return row.rotated_left(row.size() - 1); }

Decomposition decompose(const SignRow& row) {
  require_even_order(row);
  auto [odd, even] = split(row);
  Circulant e1 = circm(odd);
  Circulant e2 = circm(even);
  Circulant g1 = gram(e1);
  Circulant g2 = gram(e2);
  RankCertificate r1 = rank(e1);
  RankCertificate r2 = rank(e2);
  Circulant k1 = (e1 + e2).scaled(Rational(1, 2));
  Circulant k2 = (e1 - e2).scaled(Rational(1, 2));
  const long l1 = odd.sum();
  const long l2 = even.sum();
  return Decomposition{row.size(),    std::move(odd), std::move(even), std::move(e1),
                       std::move(e2), l1,             l2,              std::move(g1),
                       std::move(g2), std::move(r1),  std::move(r2),   std::move(k1),
                       std::move(k2)};
}

long graphr_identity(const SignRow& row) {
  require_even_order(row);
  const auto [odd, even] = split(row);
  long total = 0;
  for (std::size_t j = 2; j <= odd.size(); ++j) {
    total += inner_with_first(odd, j) + inner_with_first(even, j);
  }
  return total;
}

bool graphr_rowwise_holds(const SignRow& row) {
  require_even_order(row);
  const auto [odd, even] = split(row);
  for (std::size_t j = 1; j <= odd.size(); ++j) {
    if (inner_with_first(odd, j) + inner_with_first(even, j) !=
        inner_with_first(row, 2 * j - 1)) {
      return false;
    }
  }
  return true;
}

MisscaseReport misscase_check(const SignRow& row) {
  require_even_order(row);
  if (!is_circulant_hadamard(row)) {
    throw PreconditionViolation("row " + row.to_string() + " is not circulant Hadamard");
  }
  const auto [odd, even] = split(row);
  MisscaseReport rep;
  rep.lambda1 = odd.sum();
  rep.lambda2 = even.sum();
  rep.product = rep.lambda1 * rep.lambda2;
  rep.sum_of_squares = rep.lambda1 * rep.lambda1 + rep.lambda2 * rep.lambda2;
  if (rep.product != 0 || rep.sum_of_squares != static_cast<long>(row.size())) {
    throw LemmaViolation("eigenvalue split fails for " + row.to_string());
  }
  rep.needs_shift = rep.lambda1 != 0;
  rep.normalized_row = rep.needs_shift ? shift_by_pi(row) : row;
  return rep;
}

ProjectionReport projection_check(const SignRow& row) {
  const Decomposition d = decompose(row);
  return {multiply(d.k1, d.k1) == d.k1, multiply(d.k2, d.k2) == d.k2};
}

Mod2Report mod2_symmetric_orthogonal(const SignRow& row) {
  const Decomposition d = decompose(row);
  const F2Circulant r1 = reduce_mod2(d.k1);
  const F2Circulant r2 = reduce_mod2(d.k2);
  return {is_symmetric(r1) && is_orthogonal(r1), is_symmetric(r2) && is_orthogonal(r2)};
}

ConditionProfile classify_conditions(const Decomposition& d) {
  ConditionProfile p;
  p.ranks = {d.rank1.rank, d.rank2.rank};
  p.cond_a = d.rank1.rank == 1 && d.rank2.rank == 1;

  const long common = std::labs(to_long(d.g1.first_row()[0]));
  bool uniform = true;
  for (const Circulant* g : {&d.g1, &d.g2}) {
    for (const auto& v : g->first_row()) uniform = uniform && std::labs(to_long(v)) == common;
  }
  p.gram_abs_uniform = uniform;
  p.cond_b = uniform;

  p.cond_c = rows12_dependent(d.e1_row) && rows12_dependent(d.e2_row);
  p.cond_d = std::labs(inner_with_first(d.e1_row, 2)) ==
                 std::labs(inner_with_first(d.e1_row, 1)) &&
             std::labs(inner_with_first(d.e2_row, 2)) ==
                 std::labs(inner_with_first(d.e2_row, 1));

  p.graphr_sum = graphr_identity(interleave(d.e1_row, d.e2_row));
  p.lambda_product = d.lambda1 * d.lambda2;
  return p;
}

ConditionProfile classify_conditions(const SignRow& row) {
  return classify_conditions(decompose(row));
}

std::pair<std::size_t, std::size_t> expected_regular_counts(long h) {
  if (h < 1) throw std::invalid_argument("h must be positive");
  return {static_cast<std::size_t>(2 * h * h + h), static_cast<std::size_t>(2 * h * h - h)};
}

RegularityProfile regularity_profile(const SignRow& row) {
  if (!is_circulant_hadamard(row)) {
    throw PreconditionViolation("row " + row.to_string() + " is not circulant Hadamard");
  }
  RegularityProfile p;
  p.n = row.size();
  p.row_sum = row.sum();
  for (auto v : row.entries()) (v > 0 ? p.positive_count : p.negative_count)++;

  long h = 0;
  while (4 * (h + 1) * (h + 1) <= static_cast<long>(p.n)) ++h;
  if (h == 0 || 4 * h * h != static_cast<long>(p.n)) return p;
  p.h = h;
  const auto [more, fewer] = expected_regular_counts(h);
  const bool counts = (p.positive_count == more && p.negative_count == fewer) ||
                      (p.positive_count == fewer && p.negative_count == more);
  p.consistent = h % 2 == 1 && counts && std::labs(p.row_sum) == 2 * h;
  return p;
}

}  // namespace circhad
