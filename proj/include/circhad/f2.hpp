#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "circhad/circulant.hpp"

namespace circhad {

/// Circulant matrix over F2 packed into a machine word: bit i of `bits` is
/// entry i + 1 of the first row. Orders up to 64 are representable.
class F2Circulant {
 public:
  static constexpr std::size_t max_order = 64;

  /// Throws std::invalid_argument if order is 0 or above max_order, or if
  /// bits has positions set at or beyond order.
  F2Circulant(std::uint64_t bits, std::size_t order);

  static F2Circulant identity(std::size_t order);
  /// The shift matrix circm(0, 1, 0, ..., 0).
  static F2Circulant shift(std::size_t order);
  /// Bitstring "e1 e2 ... en" with entries '0'/'1'.
  static F2Circulant parse(const std::string& bitstring);

  std::uint64_t bits() const { return bits_; }
  std::size_t order() const { return order_; }
  bool entry(std::size_t j) const { return (bits_ >> j) & 1U; }  // 0-based

  std::string to_bitstring() const;

  friend bool operator==(const F2Circulant&, const F2Circulant&) = default;

 private:
  std::uint64_t bits_;
  std::size_t order_;
};

/// Carryless cyclic convolution of the first rows. Throws
/// std::invalid_argument on order mismatch.
F2Circulant f2_multiply(const F2Circulant& a, const F2Circulant& b);
F2Circulant f2_transpose(const F2Circulant& a);
bool is_symmetric(const F2Circulant& a);
/// A A^T = I over F2.
bool is_orthogonal(const F2Circulant& a);

/// Reduction mod 2 of an integral circulant (odd entries map to 1, so -1
/// maps to 1). Throws std::invalid_argument for non-integral entries.
F2Circulant reduce_mod2(const Circulant& a);

struct MacWilliamsSurvey {
  std::size_t order = 0;
  std::size_t count = 0;
  std::vector<F2Circulant> witnesses;
};

/// Enumerates all 2^order first rows and collects those whose circulant is
/// both symmetric and orthogonal over F2. Throws ResourceLimit unless
/// 1 <= order <= 24.
MacWilliamsSurvey macwilliams_survey(std::size_t order);

}  // namespace circhad
