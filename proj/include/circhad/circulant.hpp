#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "circhad/scalar.hpp"
#include "circhad/sign_row.hpp"

namespace circhad {

/// Exact circulant matrix over the rationals, stored as its first row.
///
/// Row i is the first row shifted cyclically right by i - 1 positions, so
/// circm(a1, ..., an) has second row (an, a1, ..., a(n-1)). Row and entry
/// accessors take 1-based indices.
class Circulant {
 public:
  /// Throws std::invalid_argument on an empty first row.
  explicit Circulant(std::vector<Rational> first_row);

  std::size_t order() const { return first_row_.size(); }
  const std::vector<Rational>& first_row() const { return first_row_; }

  /// Entry (i, j) = first_row[((j - i) mod k) + 1], 1-based.
  const Rational& entry(std::size_t i, std::size_t j) const;
  std::vector<Rational> row(std::size_t i) const;

  /// True when every entry is an integer.
  bool is_integral() const;

  Circulant operator+(const Circulant& other) const;
  Circulant operator-(const Circulant& other) const;
  Circulant scaled(const Rational& factor) const;

  friend bool operator==(const Circulant&, const Circulant&) = default;

 private:
  void require_same_order(const Circulant& other) const;

  std::vector<Rational> first_row_;
};

Circulant circm(std::vector<Rational> first_row);
Circulant circm(std::initializer_list<long> first_row);
Circulant circm(const SignRow& row);

/// The shift matrix circm(0, 1, 0, ..., 0) of order k.
Circulant shift_matrix(std::size_t order);
Circulant identity_circulant(std::size_t order);

/// Exact product; first row is the cyclic convolution of the two first rows.
/// Throws std::invalid_argument on order mismatch.
Circulant multiply(const Circulant& a, const Circulant& b);
Circulant transpose(const Circulant& a);
/// A * A^T.
Circulant gram(const Circulant& a);
/// <R_i, R_j> for 1-based row indices. Throws std::invalid_argument when an
/// index is out of range.
Rational row_inner(const Circulant& a, std::size_t i, std::size_t j);

/// Periodic autocorrelation of a sign row: values[t] = sum_j h_j h_{j+t}
/// with indices mod k, for t = 0, ..., k - 1.
struct PafSpectrum {
  std::vector<long> values;
};

PafSpectrum paf(const SignRow& row);

/// circm(row) * circm(row)^T = n I, decided through the autocorrelation.
bool is_circulant_hadamard(const SignRow& row);
/// Same predicate on raw entries; stops at the first nonzero shift.
bool is_circulant_hadamard(std::span<const std::int8_t> entries);

/// Floating-point spectrum of circm(row): |R(w^t)| for w = exp(2 pi i / n),
/// where R(x) = h_1 + h_2 x + ... + h_n x^(n-1). Diagnostic only.
struct EigenvalueReport {
  std::vector<double> magnitudes;
  long row_sum = 0;
};

EigenvalueReport eigen_report(const SignRow& row);

/// Dense square matrix with +1/-1 entries, 0-based (row, col) access.
class SignMatrix {
 public:
  SignMatrix(std::size_t n, std::vector<std::int8_t> data);

  static SignMatrix from_circulant(const SignRow& first_row);

  std::size_t order() const { return n_; }
  int operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  /// Pairwise orthogonal rows, i.e. M M^T = n I.
  bool rows_orthogonal() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int8_t> data_;
};

/// Sylvester construction [[H, H], [H, -H]] starting from (1), giving a
/// Hadamard matrix of order 2^power. Throws ResourceLimit for power > 12.
SignMatrix sylvester_hadamard(unsigned power);

}  // namespace circhad
