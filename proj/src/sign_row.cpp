#include "circhad/sign_row.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circhad {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

SignRow::SignRow(std::vector<int> entries) {
  if (entries.empty()) throw std::invalid_argument("sign row must be nonempty");
  entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int v = entries[i];
    if (v != 1 && v != -1) {
      throw std::invalid_argument("sign row entry " + std::to_string(i + 1) +
                                  " is " + std::to_string(v) +
                                  ", expected 1 or -1");
    }
    entries_.push_back(static_cast<std::int8_t>(v));
  }
}

SignRow::SignRow(std::initializer_list<int> entries)
    : SignRow(std::vector<int>(entries)) {}

SignRow SignRow::from_mask(std::uint64_t mask, std::size_t length) {
  if (length == 0) throw std::invalid_argument("sign row must be nonempty");
  if (length > 64) throw std::invalid_argument("mask rows are limited to 64 entries");
  std::vector<std::int8_t> e(length);
  for (std::size_t i = 0; i < length; ++i) e[i] = ((mask >> i) & 1U) ? -1 : 1;
  return SignRow(Unchecked{}, std::move(e));
}

SignRow SignRow::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty row text");

  const bool list_form = text.find_first_of(",+-") != std::string_view::npos;
  std::vector<std::int8_t> e;
  if (!list_form) {
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument(std::string("invalid token '") + c +
                                    "' in bitstring row");
      }
      e.push_back(c == '0' ? 1 : -1);
    }
    return SignRow(Unchecked{}, std::move(e));
  }

  std::size_t pos = 0;
  std::size_t index = 1;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = trim(text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos));
    if (token == "1" || token == "+1") {
      e.push_back(1);
    } else if (token == "-1") {
      e.push_back(-1);
    } else {
      throw std::invalid_argument("invalid token '" + std::string(token) +
                                  "' at position " + std::to_string(index) +
                                  " (expected 1 or -1)");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    ++index;
  }
  return SignRow(Unchecked{}, std::move(e));
}

std::vector<int> SignRow::to_vector() const {
  return {entries_.begin(), entries_.end()};
}

int SignRow::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string SignRow::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i] > 0 ? "1" : "-1";
  }
  return out;
}

std::string SignRow::to_bitstring() const {
  std::string out;
  out.reserve(entries_.size());
  for (auto v : entries_) out += v > 0 ? '0' : '1';
  return out;
}

std::uint64_t SignRow::mask() const {
  if (entries_.size() > 64) throw std::invalid_argument("row longer than 64 entries");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) m |= std::uint64_t{1} << i;
  }
  return m;
}

SignRow SignRow::negated() const {
  std::vector<std::int8_t> e(entries_);
  for (auto& v : e) v = static_cast<std::int8_t>(-v);
  return SignRow(Unchecked{}, std::move(e));
}

SignRow SignRow::rotated_left(std::size_t k) const {
  std::vector<std::int8_t> e(entries_);
  if (!e.empty()) std::rotate(e.begin(), e.begin() + static_cast<long>(k % e.size()), e.end());
  return SignRow(Unchecked{}, std::move(e));
}

}  // namespace circhad
