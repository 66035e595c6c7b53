#pragma once

// Brute-force reference computations used only by the tests. Everything here
// works on dense matrices straight from the definitions and shares no code
// with the library's fast paths.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Integer = boost::multiprecision::cpp_int;
using Dense = std::vector<std::vector<Integer>>;

// Entry (i, j) = first[(j - i) mod k], straight from the definition.
inline Dense dense_circulant(const std::vector<long>& first) {
  const std::size_t k = first.size();
  Dense m(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = first[(j + k - i) % k];
  }
  return m;
}

inline Dense dense_multiply(const Dense& a, const Dense& b) {
  const std::size_t r = a.size();
  const std::size_t inner = b.size();
  const std::size_t c = b.empty() ? 0 : b[0].size();
  Dense out(r, std::vector<Integer>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      Integer s = 0;
      for (std::size_t l = 0; l < inner; ++l) s += a[i][l] * b[l][j];
      out[i][j] = s;
    }
  }
  return out;
}

inline Dense dense_transpose(const Dense& a) {
  Dense out(a.empty() ? 0 : a[0].size(), std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

inline Integer dense_inner(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Integer s = 0;
  for (std::size_t l = 0; l < x.size(); ++l) s += x[l] * y[l];
  return s;
}

// Determinant of the minor on `rows` x (columns in `colmask`) by Laplace
// expansion along the first row, memoized on the remaining column set.
class MinorDeterminant {
 public:
  MinorDeterminant(const Dense& m, std::vector<std::size_t> rows)
      : m_(m), rows_(std::move(rows)) {}

  Integer det(std::uint32_t colmask) {
    memo_.clear();
    return expand(0, colmask);
  }

 private:
  Integer expand(std::size_t depth, std::uint32_t cols) {
    if (depth == rows_.size()) return 1;
    const auto key = (static_cast<std::uint64_t>(depth) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    int sign = 1;
    for (std::size_t c = 0; c < 32; ++c) {
      if (!((cols >> c) & 1U)) continue;
      const Integer& e = m_[rows_[depth]][c];
      if (e != 0) total += sign * e * expand(depth + 1, cols & ~(1U << c));
      sign = -sign;
    }
    memo_.emplace(key, total);
    return total;
  }

  const Dense& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<std::uint64_t, Integer> memo_;
};

// Largest r such that some r x r minor is nonzero.
inline std::size_t minor_rank(const Dense& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t r = std::min(rows, cols); r > 0; --r) {
    for (std::uint32_t rmask = 0; rmask < (1U << rows); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != r) continue;
      std::vector<std::size_t> sel;
      for (std::size_t i = 0; i < rows; ++i) {
        if ((rmask >> i) & 1U) sel.push_back(i);
      }
      MinorDeterminant det(m, sel);
      for (std::uint32_t cmask = 0; cmask < (1U << cols); ++cmask) {
        if (static_cast<std::size_t>(__builtin_popcount(cmask)) != r) continue;
        if (det.det(cmask) != 0) return r;
      }
    }
  }
  return 0;
}

// Rows pairwise orthogonal with squared norm n, checked densely.
inline bool dense_is_hadamard(const std::vector<long>& first) {
  const Dense h = dense_circulant(first);
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Integer s = dense_inner(h[i], h[j]);
      if (s != (i == j ? Integer(n) : Integer(0))) return false;
    }
  }
  return true;
}

inline std::vector<long> sign_row_from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<long> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = ((mask >> i) & 1U) ? -1 : 1;
  return r;
}

}  // namespace oracle
