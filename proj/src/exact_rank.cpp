#include "circhad/exact_rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "circhad/errors.hpp"

namespace circhad {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::vector<std::vector<Rational>> first_rows(const Circulant& a, std::size_t count) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i <= count; ++i) rows.push_back(a.row(i));
  return rows;
}

bool is_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

RankCertificate integer_rank(std::vector<Integer> entries, std::size_t rows,
                             std::size_t cols) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("matrix data does not match its shape");
  }
  std::vector<std::vector<Integer>> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i].assign(entries.begin() + static_cast<long>(i * cols),
                entries.begin() + static_cast<long>((i + 1) * cols));
  }
  std::vector<std::size_t> origin(rows);
  for (std::size_t i = 0; i < rows; ++i) origin[i] = i + 1;

  RankCertificate cert;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    // Move the pivot row up while keeping the other rows in order.
    std::rotate(m.begin() + static_cast<long>(r), m.begin() + static_cast<long>(p),
                m.begin() + static_cast<long>(p + 1));
    std::rotate(origin.begin() + static_cast<long>(r),
                origin.begin() + static_cast<long>(p),
                origin.begin() + static_cast<long>(p + 1));
    const Integer pivot = m[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (pivot * m[i][j] - lead * m[r][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = pivot;
    cert.pivot_rows.push_back(origin[r]);
    ++r;
  }
  cert.rank = r;
  return cert;
}

RankCertificate rank(const Circulant& a) {
  const std::size_t k = a.order();
  Integer scale = 1;
  for (const auto& v : a.first_row()) {
    scale = boost::multiprecision::lcm(scale, Integer(denominator(v)));
  }
  std::vector<Integer> scaled_first(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Rational v = a.first_row()[j] * scale;
    scaled_first[j] = numerator(v);
  }
  std::vector<Integer> dense(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) dense[i * k + j] = scaled_first[(j + k - i) % k];
  }
  RankCertificate cert = integer_rank(std::move(dense), k, k);
  if (k >= 3 && cert.rank <= 2) {
    const auto rows = first_rows(a, 3);
    cert.dependency = express_row(rows[0], rows[1], rows[2]);
  }
  return cert;
}

std::optional<RowDependency> express_row(const std::vector<Rational>& first,
                                         const std::vector<Rational>& second,
                                         const std::vector<Rational>& target) {
  const std::size_t k = first.size();
  if (second.size() != k || target.size() != k) {
    throw std::invalid_argument("rows must have equal length");
  }
  auto reproduces = [&](const RowDependency& d) {
    for (std::size_t j = 0; j < k; ++j) {
      if (d.a * first[j] + d.b * second[j] != target[j]) return false;
    }
    return true;
  };

  // Independent rows: anchor on the first invertible 2x2 block, scanning
  // column pairs left to right.
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      const Rational det = first[p] * second[q] - first[q] * second[p];
      if (det == 0) continue;
      RowDependency d{(target[p] * second[q] - target[q] * second[p]) / det,
                      (first[p] * target[q] - first[q] * target[p]) / det};
      if (reproduces(d)) return d;
      return std::nullopt;
    }
  }

  // Dependent rows: the span is that of `first` (or of `second` if first = 0).
  if (!is_zero(first)) {
    const auto p = static_cast<std::size_t>(
        std::find_if(first.begin(), first.end(), [](const Rational& x) { return x != 0; }) -
        first.begin());
    RowDependency d{target[p] / first[p], 0};
    if (reproduces(d)) return d;
    return std::nullopt;
  }
  if (!is_zero(second)) {
    const auto p = static_cast<std::size_t>(
        std::find_if(second.begin(), second.end(), [](const Rational& x) { return x != 0; }) -
        second.begin());
    RowDependency d{0, target[p] / second[p]};
    if (reproduces(d)) return d;
    return std::nullopt;
  }
  if (is_zero(target)) return RowDependency{0, 0};
  return std::nullopt;
}

std::string_view to_string(Rank1Class c) {
  switch (c) {
    case Rank1Class::constant_plus: return "constant_plus";
    case Rank1Class::constant_minus: return "constant_minus";
    case Rank1Class::alternating: return "alternating";
    case Rank1Class::not_rank1: return "not_rank1";
  }
  return "unknown";
}

Rank1Class rank1_structure(const SignRow& row) {
  const std::size_t n = row.size();
  if (n % 2 != 0) {
    throw std::invalid_argument("rank-1 classification needs even length, got " +
                                std::to_string(n));
  }
  const int a = row[0];
  const int b = row[1];
  for (std::size_t j = 0; j < n; ++j) {
    if (row[j] != (j % 2 == 0 ? a : b)) return Rank1Class::not_rank1;
  }
  if (a != b) return Rank1Class::alternating;
  return a > 0 ? Rank1Class::constant_plus : Rank1Class::constant_minus;
}

int alternating_phase(const SignRow& row) {
  if (rank1_structure(row) != Rank1Class::alternating) {
    throw std::invalid_argument("row is not alternating");
  }
  return row[0];
}

std::optional<RowDependency> rank2_coefficients(const SignRow& row) {
  const std::size_t n = row.size();
  if (n % 2 != 0 || n < 6) {
    throw std::invalid_argument("rank-2 coefficients need even length >= 6, got " +
                                std::to_string(n));
  }
  const Circulant c = circm(row);
  const RankCertificate cert = rank(c);
  if (cert.rank != 2) {
    throw PreconditionViolation("circulant has rank " + std::to_string(cert.rank) +
                                ", expected 2");
  }
  const auto rows = first_rows(c, 3);
  bool independent = false;
  for (std::size_t p = 0; p < n && !independent; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (rows[0][p] * rows[1][q] != rows[0][q] * rows[1][p]) {
        independent = true;
        break;
      }
    }
  }
  if (!independent) {
    throw DependentBasis("rows 1 and 2 are dependent; choose another basis");
  }
  auto d = express_row(rows[0], rows[1], rows[2]);
  if (d && row.sum() != 0 && d->a + d->b != 1) {
    throw LemmaViolation("rank-2 circulant " + row.to_string() +
                         " has nonzero sum but a + b != 1");
  }
  return d;
}

bool check_rank_gram_equality(const Circulant& a) {
  return rank(gram(a)).rank == rank(a).rank;
}

bool consecutive_equal_rows_implies_constant(const SignRow& row) {
  const std::size_t n = row.size();
  // Row 2 is row 1 shifted right: entry j of row 2 is h_{j-1}.
  bool equal = true;
  for (std::size_t j = 0; j < n && equal; ++j) equal = row[j] == row[(j + n - 1) % n];
  if (!equal) return true;
  for (std::size_t j = 1; j < n; ++j) {
    if (row[j] != row[0]) return false;
  }
  return true;
}

std::optional<long> first_equals_third_sum(const SignRow& row) {
  const std::size_t n = row.size();
  if (n % 2 != 0 || n < 6) {
    throw std::invalid_argument("first/third row check needs even length >= 6, got " +
                                std::to_string(n));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (row[j] != row[(j + n - 2) % n]) return std::nullopt;
  }
  const long s = row.sum();
  const long k = static_cast<long>(n / 2);
  if (s != 0 && s != 2 * k && s != -2 * k) {
    throw LemmaViolation("row " + row.to_string() + " has equal rows 1 and 3 but sum " +
                         std::to_string(s));
  }
  return s;
}

AffineCoefficientSolution solve_affine_coefficients(int hk, int hl, int hm) {
  AffineCoefficientSolution out;
  if (hl == hm) {
    // hk = (a + b) hl = hl for every admissible (a, b).
    out.kind = hk == hl ? AffineCoefficientSolution::Kind::one_parameter
                        : AffineCoefficientSolution::Kind::none;
    return out;
  }
  // a hl + (1 - a) hm = hk  =>  a = (hk - hm) / (hl - hm).
  out.kind = AffineCoefficientSolution::Kind::unique;
  out.a = Rational(hk - hm) / (hl - hm);
  out.b = 1 - out.a;
  return out;
}

}  // namespace circhad
