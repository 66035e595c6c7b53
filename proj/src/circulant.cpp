#include "circhad/circulant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "circhad/errors.hpp"

namespace circhad {

Circulant::Circulant(std::vector<Rational> first_row)
    : first_row_(std::move(first_row)) {
  if (first_row_.empty()) {
    throw std::invalid_argument("circulant needs a nonempty first row");
  }
}

const Rational& Circulant::entry(std::size_t i, std::size_t j) const {
  const std::size_t k = order();
  if (i < 1 || i > k || j < 1 || j > k) {
    throw std::invalid_argument("circulant index out of range");
  }
  return first_row_[(j + k - i) % k];
}

std::vector<Rational> Circulant::row(std::size_t i) const {
  const std::size_t k = order();
  if (i < 1 || i > k) throw std::invalid_argument("circulant row index out of range");
  std::vector<Rational> r(k);
  for (std::size_t j = 0; j < k; ++j) r[j] = first_row_[(j + k - (i - 1)) % k];
  return r;
}

bool Circulant::is_integral() const {
  for (const auto& v : first_row_) {
    if (boost::multiprecision::denominator(v) != 1) return false;
  }
  return true;
}

void Circulant::require_same_order(const Circulant& other) const {
  if (order() != other.order()) {
    throw std::invalid_argument("circulant order mismatch: " +
                                std::to_string(order()) + " vs " +
                                std::to_string(other.order()));
  }
}

Circulant Circulant::operator+(const Circulant& other) const {
  require_same_order(other);
  std::vector<Rational> r(first_row_);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] += other.first_row_[j];
  return Circulant(std::move(r));
}

Circulant Circulant::operator-(const Circulant& other) const {
  require_same_order(other);
  std::vector<Rational> r(first_row_);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] -= other.first_row_[j];
  return Circulant(std::move(r));
}

Circulant Circulant::scaled(const Rational& factor) const {
  std::vector<Rational> r(first_row_);
  for (auto& v : r) v *= factor;
  return Circulant(std::move(r));
}

Circulant circm(std::vector<Rational> first_row) {
  return Circulant(std::move(first_row));
}

Circulant circm(std::initializer_list<long> first_row) {
  std::vector<Rational> r;
  r.reserve(first_row.size());
  for (long v : first_row) r.emplace_back(v);
  return Circulant(std::move(r));
}

Circulant circm(const SignRow& row) {
  std::vector<Rational> r;
  r.reserve(row.size());
  for (auto v : row.entries()) r.emplace_back(static_cast<int>(v));
  return Circulant(std::move(r));
}

Circulant shift_matrix(std::size_t order) {
  std::vector<Rational> r(order);
  if (order > 0) r[order == 1 ? 0 : 1] = 1;
  return Circulant(std::move(r));
}

Circulant identity_circulant(std::size_t order) {
  std::vector<Rational> r(order);
  if (order > 0) r[0] = 1;
  return Circulant(std::move(r));
}

Circulant multiply(const Circulant& a, const Circulant& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("cannot multiply circulants of orders " +
                                std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
  }
  const std::size_t k = a.order();
  const auto& x = a.first_row();
  const auto& y = b.first_row();
  std::vector<Rational> c(k);
  for (std::size_t m = 0; m < k; ++m) {
    if (x[m] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) c[(m + j) % k] += x[m] * y[j];
  }
  return Circulant(std::move(c));
}

Circulant transpose(const Circulant& a) {
  const std::size_t k = a.order();
  std::vector<Rational> r(k);
  for (std::size_t j = 0; j < k; ++j) r[j] = a.first_row()[(k - j) % k];
  return Circulant(std::move(r));
}

Circulant gram(const Circulant& a) { return multiply(a, transpose(a)); }

Rational row_inner(const Circulant& a, std::size_t i, std::size_t j) {
  const std::size_t k = a.order();
  if (i < 1 || i > k || j < 1 || j > k) {
    throw std::invalid_argument("row index out of range for order " +
                                std::to_string(k));
  }
  Rational s = 0;
  for (std::size_t l = 1; l <= k; ++l) s += a.entry(i, l) * a.entry(j, l);
  return s;
}

PafSpectrum paf(const SignRow& row) {
  const std::size_t k = row.size();
  const auto h = row.entries();
  PafSpectrum out{std::vector<long>(k, 0)};
  for (std::size_t t = 0; t < k; ++t) {
    long s = 0;
    for (std::size_t j = 0; j < k; ++j) s += h[j] * h[(j + t) % k];
    out.values[t] = s;
  }
  return out;
}

bool is_circulant_hadamard(std::span<const std::int8_t> h) {
  const std::size_t k = h.size();
  if (k == 0) return false;
  // values[t] = values[k - t], so shifts up to k / 2 suffice.
  for (std::size_t t = 1; t <= k / 2; ++t) {
    int s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t p = j + t < k ? j + t : j + t - k;
      s += h[j] * h[p];
    }
    if (s != 0) return false;
  }
  return true;
}

bool is_circulant_hadamard(const SignRow& row) {
  return is_circulant_hadamard(row.entries());
}

EigenvalueReport eigen_report(const SignRow& row) {
  const std::size_t n = row.size();
  EigenvalueReport rep;
  rep.row_sum = row.sum();
  rep.magnitudes.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((t * j) % n) /
                           static_cast<double>(n);
      acc += static_cast<double>(row[j]) * std::polar(1.0, angle);
    }
    rep.magnitudes[t] = std::abs(acc);
  }
  return rep;
}

SignMatrix::SignMatrix(std::size_t n, std::vector<std::int8_t> data)
    : n_(n), data_(std::move(data)) {
  if (n_ == 0 || data_.size() != n_ * n_) {
    throw std::invalid_argument("sign matrix data does not match its order");
  }
  for (auto v : data_) {
    if (v != 1 && v != -1) throw std::invalid_argument("sign matrix entry must be 1 or -1");
  }
}

SignMatrix SignMatrix::from_circulant(const SignRow& first_row) {
  const std::size_t n = first_row.size();
  std::vector<std::int8_t> d(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      d[r * n + c] = static_cast<std::int8_t>(first_row[(c + n - r) % n]);
    }
  }
  return SignMatrix(n, std::move(d));
}

bool SignMatrix::rows_orthogonal() const {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      long s = 0;
      for (std::size_t c = 0; c < n_; ++c) s += (*this)(a, c) * (*this)(b, c);
      if (s != 0) return false;
    }
  }
  return true;
}

SignMatrix sylvester_hadamard(unsigned power) {
  if (power > 12) {
    throw ResourceLimit("Sylvester order 2^" + std::to_string(power) +
                        " exceeds the 2^12 cap");
  }
  std::size_t n = 1;
  std::vector<std::int8_t> h{1};
  for (unsigned p = 0; p < power; ++p) {
    const std::size_t m = 2 * n;
    std::vector<std::int8_t> next(m * m);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto v = h[r * n + c];
        next[r * m + c] = v;
        next[r * m + c + n] = v;
        next[(r + n) * m + c] = v;
        next[(r + n) * m + c + n] = static_cast<std::int8_t>(-v);
      }
    }
    h = std::move(next);
    n = m;
  }
  return SignMatrix(n, std::move(h));
}

}  // namespace circhad
