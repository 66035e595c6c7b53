#include "circhad/f2.hpp"

#include <stdexcept>

#include "circhad/errors.hpp"

namespace circhad {

namespace {

constexpr std::size_t kSurveyCap = 24;

std::uint64_t low_mask(std::size_t order) {
  return order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
}

std::uint64_t rotate_left(std::uint64_t x, std::size_t k, std::size_t order) {
  k %= order;
  if (k == 0) return x;
  return ((x << k) | (x >> (order - k))) & low_mask(order);
}

}  // namespace

F2Circulant::F2Circulant(std::uint64_t bits, std::size_t order)
    : bits_(bits), order_(order) {
  if (order == 0 || order > max_order) {
    throw std::invalid_argument("F2 circulant order must be in 1..64, got " +
                                std::to_string(order));
  }
  if ((bits & ~low_mask(order)) != 0) {
    throw std::invalid_argument("F2 circulant has bits beyond its order");
  }
}

F2Circulant F2Circulant::identity(std::size_t order) { return {1, order}; }

F2Circulant F2Circulant::shift(std::size_t order) {
  return {order == 1 ? 1U : 2U, order};
}

F2Circulant F2Circulant::parse(const std::string& bitstring) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < bitstring.size(); ++i) {
    const char c = bitstring[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("invalid F2 entry '") + c + "'");
    }
    if (c == '1' && i < 64) bits |= std::uint64_t{1} << i;
  }
  return {bits, bitstring.size()};
}

std::string F2Circulant::to_bitstring() const {
  std::string s(order_, '0');
  for (std::size_t j = 0; j < order_; ++j) {
    if (entry(j)) s[j] = '1';
  }
  return s;
}

F2Circulant f2_multiply(const F2Circulant& a, const F2Circulant& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("F2 circulant order mismatch");
  }
  const std::size_t k = a.order();
  std::uint64_t acc = 0;
  for (std::size_t m = 0; m < k; ++m) {
    if (a.entry(m)) acc ^= rotate_left(b.bits(), m, k);
  }
  return {acc, k};
}

F2Circulant f2_transpose(const F2Circulant& a) {
  const std::size_t k = a.order();
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (a.entry((k - j) % k)) out |= std::uint64_t{1} << j;
  }
  return {out, k};
}

bool is_symmetric(const F2Circulant& a) {
  const std::size_t k = a.order();
  for (std::size_t j = 1; j < k; ++j) {
    if (a.entry(j) != a.entry(k - j)) return false;
  }
  return true;
}

bool is_orthogonal(const F2Circulant& a) {
  return f2_multiply(a, f2_transpose(a)) == F2Circulant::identity(a.order());
}

F2Circulant reduce_mod2(const Circulant& a) {
  if (!a.is_integral()) {
    throw std::invalid_argument("mod-2 reduction needs integral entries");
  }
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < a.order(); ++j) {
    const Integer v = boost::multiprecision::numerator(a.first_row()[j]);
    if (boost::multiprecision::bit_test(boost::multiprecision::abs(v), 0)) {
      bits |= std::uint64_t{1} << j;
    }
  }
  return {bits, a.order()};
}

MacWilliamsSurvey macwilliams_survey(std::size_t order) {
  if (order == 0 || order > kSurveyCap) {
    throw ResourceLimit("MacWilliams survey supports orders 1.." +
                        std::to_string(kSurveyCap) + ", got " +
                        std::to_string(order));
  }
  MacWilliamsSurvey out;
  out.order = order;
  const std::uint64_t total = std::uint64_t{1} << order;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const F2Circulant c(bits, order);
    if (is_symmetric(c) && is_orthogonal(c)) {
      ++out.count;
      out.witnesses.push_back(c);
    }
  }
  return out;
}

}  // namespace circhad
