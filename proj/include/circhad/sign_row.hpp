#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circhad {

/// Finite sequence of +1/-1 entries: the first row of a circulant candidate.
///
/// Storage and indexing are 0-based (entry h_j of the usual 1-based notation
/// is `row[j - 1]`).
class SignRow {
 public:
  SignRow() = default;

  /// Throws std::invalid_argument if `entries` is empty or holds a value
  /// other than +1 or -1.
  explicit SignRow(std::vector<int> entries);
  SignRow(std::initializer_list<int> entries);

  /// Row of `length` entries where bit i of `mask` set means entry i is -1.
  static SignRow from_mask(std::uint64_t mask, std::size_t length);

  /// Accepts `1,-1,-1,-1` (optionally `+1` for +1) or the compact bitstring
  /// `0111` with 0 for +1 and 1 for -1. Text containing ',', '+' or '-' is
  /// read as a list; text made only of 0/1 digits is a bitstring.
  /// Throws std::invalid_argument naming the offending token.
  static SignRow parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int8_t> entries() const { return entries_; }
  std::vector<int> to_vector() const;

  int sum() const;

  /// Comma form, e.g. "1,-1,-1,-1".
  std::string to_string() const;
  /// Bitstring form, e.g. "0111".
  std::string to_bitstring() const;

  /// Bit i set iff entry i is -1. Requires size() <= 64.
  std::uint64_t mask() const;

  SignRow negated() const;
  /// Row whose entry i is entry (i + k) mod n of this row.
  SignRow rotated_left(std::size_t k) const;

  friend bool operator==(const SignRow&, const SignRow&) = default;
  /// Lexicographic with -1 < +1.
  friend auto operator<=>(const SignRow& a, const SignRow& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  struct Unchecked {};
  SignRow(Unchecked, std::vector<std::int8_t> entries)
      : entries_(std::move(entries)) {}

  std::vector<std::int8_t> entries_;
};

}  // namespace circhad
