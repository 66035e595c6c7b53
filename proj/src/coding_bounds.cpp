#include "circhad/coding_bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "circhad/errors.hpp"

namespace circhad {

unsigned hamming(std::uint64_t x, std::uint64_t y, unsigned length) {
  const std::uint64_t mask =
      length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
  return static_cast<unsigned>(std::popcount((x ^ y) & mask));
}

std::optional<long> plotkin_bound(long m, long d) {
  if (m < 1 || d < 1) return std::nullopt;
  if (d % 2 != 0 || 2 * d <= m) return std::nullopt;
  return 2 * (d / (2 * d - m));
}

PlotkinQuery make_plotkin_query(long m, long d) { return {m, d, plotkin_bound(m, d)}; }

namespace {

// Bitset maximum-clique search with greedy colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::vector<std::uint64_t>> adjacency)
      : adj_(std::move(adjacency)),
        words_(adj_.empty() ? 0 : adj_.front().size()) {}

  // Largest clique strictly bigger than `floor`, or empty if none exists.
  std::vector<std::size_t> run(std::size_t floor) {
    best_size_ = floor;
    best_.clear();
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  static bool empty(const std::vector<std::uint64_t>& s) {
    return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
  }

  void expand(std::vector<std::size_t>& current, std::vector<std::uint64_t> cand) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(cand, order, colour);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colour[idx] <= best_size_) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      std::vector<std::uint64_t> next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & adj_[v][w];
      if (empty(next)) {
        if (current.size() > best_size_) {
          best_size_ = current.size();
          best_ = current;
        }
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  // Greedy sequential colouring; colour[i] bounds the clique size within
  // order[0..i].
  void colour_sort(const std::vector<std::uint64_t>& cand, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    std::vector<std::uint64_t> uncoloured(cand);
    std::size_t k = 0;
    while (!empty(uncoloured)) {
      ++k;
      std::vector<std::uint64_t> q(uncoloured);
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(q[w]));
          const std::size_t v = w * 64 + bit;
          q[w] &= q[w] - 1;
          uncoloured[w] &= ~(std::uint64_t{1} << bit);
          for (std::size_t u = 0; u < words_; ++u) q[u] &= ~adj_[v][u];
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> adj_;
  std::size_t words_;
  std::size_t best_size_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

CodeSearchResult max_code_bruteforce(unsigned m, unsigned d) {
  if (m > 12) {
    throw ResourceLimit("code search supports length <= 12, got " + std::to_string(m));
  }
  if (m < 1) throw std::invalid_argument("code length must be positive");

  const std::uint32_t total = std::uint32_t{1} << m;
  CodeSearchResult result;
  if (d <= 1) {
    for (std::uint32_t x = 0; x < total; ++x) result.witness_code.push_back(x);
    result.size = total;
    return result;
  }

  // Any code can be translated to contain 0 and have its coordinates
  // permuted so that a minimum-weight nonzero codeword is 1^w 0^(m-w).
  // All other codewords then have weight >= w.
  result.witness_code = {0};
  result.size = 1;
  for (unsigned w = d; w <= m; ++w) {
    const std::uint32_t anchor = (std::uint32_t{1} << w) - 1;
    std::vector<std::uint32_t> cand;
    for (std::uint32_t x = 1; x < total; ++x) {
      if (x == anchor) continue;
      if (static_cast<unsigned>(std::popcount(x)) < w) continue;
      if (hamming(x, anchor, m) < d) continue;
      cand.push_back(x);
    }
    if (result.size < 2) result = {2, {0, anchor}};
    if (cand.empty()) continue;

    const std::size_t words = (cand.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(cand.size(), std::vector<std::uint64_t>(words));
    for (std::size_t i = 0; i < cand.size(); ++i) {
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (hamming(cand[i], cand[j], m) >= d) {
          adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
          adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }
    }
    CliqueSearch search(std::move(adj));
    const auto clique = search.run(result.size - 2);
    if (!clique.empty()) {
      std::vector<std::uint32_t> code{0, anchor};
      for (auto v : clique) code.push_back(cand[v]);
      std::sort(code.begin(), code.end());
      result = {code.size(), std::move(code)};
    }
  }
  return result;
}

MonochromaticCheck monochromatic_bound_check(const SignMatrix& host,
                                             const SubmatrixSpec& spec) {
  const std::size_t n = host.order();
  if (n <= 2) throw PreconditionViolation("host order must exceed 2");
  if (!host.rows_orthogonal()) throw PreconditionViolation("host rows are not orthogonal");
  auto check_indices = [n](const std::vector<std::size_t>& idx, const char* what) {
    if (idx.empty()) throw std::invalid_argument(std::string(what) + " selection is empty");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= n || (i > 0 && idx[i] <= idx[i - 1])) {
        throw std::invalid_argument(std::string(what) +
                                    " indices must be strictly increasing and in range");
      }
    }
  };
  check_indices(spec.row_indices, "row");
  check_indices(spec.col_indices, "column");

  MonochromaticCheck out;
  out.a = spec.row_indices.size();
  out.b = spec.col_indices.size();
  out.ab = out.a * out.b;
  out.n = n;
  const int first = host(spec.row_indices.front(), spec.col_indices.front());
  out.all_equal = true;
  for (auto r : spec.row_indices) {
    for (auto c : spec.col_indices) out.all_equal = out.all_equal && host(r, c) == first;
  }
  out.bound_holds = !out.all_equal || out.ab <= n;
  if (!out.bound_holds) {
    throw LemmaViolation("constant " + std::to_string(out.a) + "x" + std::to_string(out.b) +
                         " block in a Hadamard matrix of order " + std::to_string(n));
  }
  return out;
}

}  // namespace circhad
