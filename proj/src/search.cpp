#include "circhad/search.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "circhad/circulant.hpp"
#include "circhad/decomposition.hpp"
#include "circhad/errors.hpp"
#include "circhad/exact_rank.hpp"

namespace circhad {

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::full: return "full";
    case SearchMode::rank1_constrained: return "rank1_constrained";
    case SearchMode::rank2_constrained: return "rank2_constrained";
  }
  return "unknown";
}

SearchMode parse_search_mode(std::string_view name) {
  for (auto m : {SearchMode::full, SearchMode::rank1_constrained,
                 SearchMode::rank2_constrained}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown search mode '" + std::string(name) + "'");
}

SignRow canonicalize(const SignRow& row) {
  SignRow best = row;
  const SignRow neg = row.negated();
  for (std::size_t k = 0; k < row.size(); ++k) {
    best = std::min({best, row.rotated_left(k), neg.rotated_left(k)});
  }
  return best;
}

std::vector<SignRow> symmetry_orbit(const SignRow& row) {
  std::set<SignRow> images;
  const SignRow neg = row.negated();
  for (std::size_t k = 0; k < row.size(); ++k) {
    images.insert(row.rotated_left(k));
    images.insert(neg.rotated_left(k));
  }
  return {images.begin(), images.end()};
}

bool order_admissible(std::size_t n) {
  if (n == 1) return true;
  for (std::size_t h = 1; 4 * h * h <= n; h += 2) {
    if (4 * h * h == n) return true;
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

// Admissible counts of -1 entries for a row of length n with sum +-sqrt(n).
std::vector<std::size_t> admissible_negative_counts(std::size_t n) {
  std::size_t s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  if (s * s != n || (n - s) % 2 != 0) return {};
  std::vector<std::size_t> out{(n - s) / 2, (n + s) / 2};
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool sum_admissible(long sum, std::size_t n) {
  return sum * sum == static_cast<long>(n);
}

struct Tally {
  std::uint64_t examined = 0;
  std::uint64_t row_sum = 0;
  std::uint64_t paf_prefix = 0;
  std::uint64_t symmetry = 0;
  std::vector<std::vector<std::int8_t>> hits;

  void merge(Tally&& other) {
    examined += other.examined;
    row_sum += other.row_sum;
    paf_prefix += other.paf_prefix;
    symmetry += other.symmetry;
    for (auto& h : other.hits) hits.push_back(std::move(h));
  }
};

SearchReport finish_report(std::size_t order, SearchMode mode, Tally&& tally,
                           bool with_symmetry_rule, bool with_paf_rule,
                           bool expand_orbits, Clock::time_point start) {
  SearchReport rep;
  rep.order = order;
  rep.mode = mode;
  rep.candidates_examined = tally.examined;
  rep.pruned_by_rule[std::string(kRuleRowSum)] = tally.row_sum;
  if (with_paf_rule) rep.pruned_by_rule[std::string(kRulePafPrefix)] = tally.paf_prefix;
  if (with_symmetry_rule) rep.pruned_by_rule[std::string(kRuleSymmetry)] = tally.symmetry;

  std::set<SignRow> hits;
  std::set<SignRow> canonical;
  for (auto& raw : tally.hits) {
    SignRow r(std::vector<int>(raw.begin(), raw.end()));
    if (!is_circulant_hadamard(r)) {
      throw LemmaViolation("search produced a non-Hadamard row " + r.to_string());
    }
    canonical.insert(canonicalize(r));
    if (expand_orbits) {
      for (auto& img : symmetry_orbit(r)) hits.insert(std::move(img));
    } else {
      hits.insert(std::move(r));
    }
  }
  rep.hits.assign(hits.begin(), hits.end());
  rep.canonical_hits.assign(canonical.begin(), canonical.end());
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return rep;
}

// Depth-first assignment of h_1, h_2, ... with incremental pruning state.
class PrefixEnumerator {
 public:
  enum class Verdict { ok, row_sum, paf_prefix, symmetry };

  PrefixEnumerator(std::size_t n, const SearchConfig& cfg)
      : n_(n),
        cfg_(cfg),
        h_(n, 0),
        shifts_(n / 2),
        paf_(shifts_ + 1, 0),
        terms_(shifts_ + 1, 0),
        neg_targets_(admissible_negative_counts(n)) {}

  bool root_feasible() const { return !cfg_.prune_rowsum || !neg_targets_.empty(); }

  std::size_t depth() const { return depth_; }
  const std::vector<std::int8_t>& entries() const { return h_; }

  Verdict push(std::int8_t v) {
    const std::size_t p = depth_;
    h_[p] = v;
    if (v < 0) ++neg_;
    apply_products(p, +1);
    ++depth_;

    if (cfg_.prune_rowsum && !row_sum_feasible()) return Verdict::row_sum;
    if (cfg_.prune_paf_prefix) {
      for (std::size_t t = 1; t <= shifts_; ++t) {
        if (std::abs(paf_[t]) > static_cast<long>(n_ - terms_[t])) return Verdict::paf_prefix;
      }
    }
    if (cfg_.symmetry_reduction && !prefix_minimal()) return Verdict::symmetry;
    return Verdict::ok;
  }

  void pop() {
    --depth_;
    const std::size_t p = depth_;
    apply_products(p, -1);
    if (h_[p] < 0) --neg_;
    h_[p] = 0;
  }

  // Explores all completions of the current prefix. Prefixes reaching
  // `split_depth` are handed to `tasks` instead when it is non-null.
  void explore(Tally& tally, std::size_t split_depth,
               std::vector<std::vector<std::int8_t>>* tasks) {
    if (depth_ == n_) {
      complete(tally);
      return;
    }
    if (tasks != nullptr && depth_ == split_depth) {
      tasks->emplace_back(h_.begin(), h_.begin() + static_cast<long>(depth_));
      return;
    }
    for (std::int8_t v : {std::int8_t{1}, std::int8_t{-1}}) {
      if (cfg_.symmetry_reduction && depth_ == 0 && v > 0) continue;
      switch (push(v)) {
        case Verdict::ok: explore(tally, split_depth, tasks); break;
        case Verdict::row_sum: ++tally.row_sum; break;
        case Verdict::paf_prefix: ++tally.paf_prefix; break;
        case Verdict::symmetry: ++tally.symmetry; break;
      }
      pop();
    }
  }

 private:
  void apply_products(std::size_t p, int sign) {
    const long v = h_[p];
    for (std::size_t t = 1; t <= shifts_; ++t) {
      if (p >= t) {
        paf_[t] += sign * v * h_[p - t];
        terms_[t] += sign;
      }
      if (p + t >= n_) {
        paf_[t] += sign * v * h_[p + t - n_];
        terms_[t] += sign;
      }
    }
  }

  bool row_sum_feasible() const {
    const std::size_t remaining = n_ - depth_;
    for (auto target : neg_targets_) {
      if (neg_ <= target && target <= neg_ + remaining) return true;
    }
    return false;
  }

  // No rotation or negated rotation can already be strictly smaller on the
  // assigned window.
  bool prefix_minimal() const {
    const std::size_t d = depth_;
    for (std::size_t i = 0; i < d; ++i) {
      for (int sign : {1, -1}) {
        if (i == 0 && sign == 1) continue;
        for (std::size_t l = 0; i + l < d; ++l) {
          const int img = sign * h_[i + l];
          if (img != h_[l]) {
            if (img < h_[l]) return false;
            break;
          }
        }
      }
    }
    return true;
  }

  bool fully_canonical() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (int sign : {1, -1}) {
        if (i == 0 && sign == 1) continue;
        for (std::size_t l = 0; l < n_; ++l) {
          const int img = sign * h_[(i + l) % n_];
          if (img != h_[l]) {
            if (img < h_[l]) return false;
            break;
          }
        }
      }
    }
    return true;
  }

  void complete(Tally& tally) {
    if (cfg_.symmetry_reduction && !fully_canonical()) {
      ++tally.symmetry;
      return;
    }
    ++tally.examined;
    if (is_circulant_hadamard(std::span<const std::int8_t>(h_))) tally.hits.push_back(h_);
  }

  std::size_t n_;
  const SearchConfig& cfg_;
  std::vector<std::int8_t> h_;
  std::size_t shifts_;
  std::vector<long> paf_;
  std::vector<std::size_t> terms_;
  std::vector<std::size_t> neg_targets_;
  std::size_t depth_ = 0;
  std::size_t neg_ = 0;
};

template <typename Task, typename Fn>
Tally run_partitioned(const std::vector<Task>& tasks, unsigned workers, Fn&& fn) {
  workers = std::max(1U, workers);
  std::vector<Tally> parts(workers);
  if (workers == 1) {
    for (const auto& t : tasks) fn(t, parts[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < tasks.size(); i += workers) fn(tasks[i], parts[w]);
      });
    }
  }
  Tally merged;
  for (auto& p : parts) merged.merge(std::move(p));
  return merged;
}

std::vector<SignRow> rank1_patterns(std::size_t k) {
  std::vector<SignRow> out{SignRow(std::vector<int>(k, 1)), SignRow(std::vector<int>(k, -1))};
  if (k % 2 == 0) {
    std::vector<int> alt(k);
    for (std::size_t j = 0; j < k; ++j) alt[j] = j % 2 == 0 ? 1 : -1;
    out.emplace_back(alt);
    out.push_back(SignRow(alt).negated());
  }
  for (const auto& p : out) {
    if (rank(circm(p)).rank != 1) {
      throw LemmaViolation("expected rank-1 pattern " + p.to_string());
    }
  }
  return out;
}

// Rank of the first three rows of circm(h), small-integer elimination.
std::size_t leading_three_row_rank(const std::vector<int>& h) {
  const std::size_t k = h.size();
  std::vector<std::vector<long>> m(3, std::vector<long>(k));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = h[(j + k - i) % k];
  }
  long prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < 3; ++col) {
    std::size_t p = r;
    while (p < 3 && m[p][col] == 0) ++p;
    if (p == 3) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < 3; ++i) {
      for (std::size_t j = col + 1; j < k; ++j) {
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

void require_even(std::size_t n, std::string_view mode) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument(std::string(mode) + " search needs even orders >= 4, got " +
                                std::to_string(n));
  }
}

}  // namespace

void validate_config(const SearchConfig& config) {
  if (config.orders.empty()) throw std::invalid_argument("no orders requested");
  for (std::size_t n : config.orders) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    switch (config.mode) {
      case SearchMode::full:
        if (n > kFullSearchMaxOrder) {
          throw ResourceLimit("full search is capped at order " +
                              std::to_string(kFullSearchMaxOrder) + ", got " +
                              std::to_string(n));
        }
        break;
      case SearchMode::rank1_constrained:
        require_even(n, to_string(config.mode));
        if (n / 2 > kRank1MaxBlock) {
          throw ResourceLimit("rank-1 campaign is capped at order " +
                              std::to_string(2 * kRank1MaxBlock) + ", got " +
                              std::to_string(n));
        }
        break;
      case SearchMode::rank2_constrained:
        require_even(n, to_string(config.mode));
        if (n / 2 > kRank2MaxBlock) {
          throw ResourceLimit("rank-2 campaign is capped at order " +
                              std::to_string(2 * kRank2MaxBlock) + ", got " +
                              std::to_string(n));
        }
        break;
    }
  }
}

SearchReport full_search_order(std::size_t order, const SearchConfig& config) {
  SearchConfig single = config;
  single.orders = {order};
  single.mode = SearchMode::full;
  validate_config(single);
  const auto start = Clock::now();

  PrefixEnumerator root(order, config);
  Tally tally;
  if (!root.root_feasible()) {
    ++tally.row_sum;
  } else if (config.worker_count <= 1) {
    root.explore(tally, order, nullptr);
  } else {
    // Split on the first free entries so that every worker gets disjoint
    // subtrees; prefixes are generated once so prune counts do not depend on
    // the worker count.
    const std::size_t fixed = config.symmetry_reduction ? 1 : 0;
    const auto bits = static_cast<std::size_t>(std::bit_width(config.worker_count - 1));
    const std::size_t split = std::min(order, fixed + bits);
    std::vector<std::vector<std::int8_t>> tasks;
    root.explore(tally, split, &tasks);
    tally.merge(run_partitioned(tasks, config.worker_count,
                                [&](const std::vector<std::int8_t>& prefix, Tally& t) {
                                  PrefixEnumerator e(order, config);
                                  for (auto v : prefix) e.push(v);
                                  e.explore(t, order, nullptr);
                                }));
  }
  return finish_report(order, SearchMode::full, std::move(tally), config.symmetry_reduction,
                       config.prune_paf_prefix, config.symmetry_reduction, start);
}

std::vector<SearchReport> full_search(const SearchConfig& config) {
  SearchConfig c = config;
  c.mode = SearchMode::full;
  validate_config(c);
  std::vector<SearchReport> out;
  for (auto n : c.orders) out.push_back(full_search_order(n, c));
  return out;
}

std::vector<SignRow> reference_search(std::size_t order) {
  if (order == 0) throw std::invalid_argument("order must be positive");
  if (order > 24) {
    throw ResourceLimit("reference enumeration is capped at order 24, got " +
                        std::to_string(order));
  }
  std::vector<SignRow> hits;
  const std::uint64_t total = std::uint64_t{1} << order;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SignRow r = SignRow::from_mask(mask, order);
    if (is_circulant_hadamard(r)) hits.push_back(std::move(r));
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

SearchReport rank1_campaign_order(std::size_t order, const SearchConfig& config) {
  SearchConfig single = config;
  single.orders = {order};
  single.mode = SearchMode::rank1_constrained;
  validate_config(single);
  const auto start = Clock::now();
  const std::size_t k = order / 2;

  struct Task {
    SignRow pattern;
    bool pattern_is_odd_block;
    std::uint64_t begin;
    std::uint64_t end;
  };
  std::vector<Task> tasks;
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::uint64_t chunk =
      std::max<std::uint64_t>(1, total / std::max(1U, config.worker_count));
  for (bool odd : {true, false}) {
    for (const auto& p : rank1_patterns(k)) {
      for (std::uint64_t b = 0; b < total; b += chunk) {
        tasks.push_back({p, odd, b, std::min(total, b + chunk)});
      }
    }
  }

  Tally tally = run_partitioned(tasks, config.worker_count, [&](const Task& t, Tally& out) {
    std::vector<std::int8_t> h(order);
    const std::size_t fixed_off = t.pattern_is_odd_block ? 0 : 1;
    const std::size_t free_off = 1 - fixed_off;
    for (std::size_t j = 0; j < k; ++j) h[2 * j + fixed_off] = static_cast<std::int8_t>(t.pattern[j]);
    const long fixed_sum = t.pattern.sum();
    for (std::uint64_t mask = t.begin; mask < t.end; ++mask) {
      if (config.prune_rowsum) {
        const long free_sum = static_cast<long>(k) - 2L * std::popcount(mask);
        if (!sum_admissible(fixed_sum + free_sum, order)) {
          ++out.row_sum;
          continue;
        }
      }
      ++out.examined;
      for (std::size_t j = 0; j < k; ++j) {
        h[2 * j + free_off] = ((mask >> j) & 1U) ? std::int8_t{-1} : std::int8_t{1};
      }
      if (is_circulant_hadamard(std::span<const std::int8_t>(h))) out.hits.push_back(h);
    }
  });
  return finish_report(order, SearchMode::rank1_constrained, std::move(tally), false, false,
                       false, start);
}

std::vector<SearchReport> rank1_campaign(const SearchConfig& config) {
  SearchConfig c = config;
  c.mode = SearchMode::rank1_constrained;
  validate_config(c);
  std::vector<SearchReport> out;
  for (auto n : c.orders) out.push_back(rank1_campaign_order(n, c));
  return out;
}

std::vector<SignRow> rank2_rows(std::size_t k) {
  if (k == 0) throw std::invalid_argument("block length must be positive");
  if (k > kRank2MaxBlock) {
    throw ResourceLimit("rank-2 rows are enumerated up to length " +
                        std::to_string(kRank2MaxBlock));
  }
  std::vector<SignRow> out;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SignRow r = SignRow::from_mask(mask, k);
    // rank(C) >= rank of any three of its rows.
    if (k >= 3 && leading_three_row_rank(r.to_vector()) > 2) continue;
    if (rank(circm(r)).rank == 2) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchReport rank2_campaign_order(std::size_t order, const SearchConfig& config) {
  SearchConfig single = config;
  single.orders = {order};
  single.mode = SearchMode::rank2_constrained;
  validate_config(single);
  const auto start = Clock::now();
  const std::vector<SignRow> blocks = rank2_rows(order / 2);

  std::vector<std::size_t> firsts(blocks.size());
  for (std::size_t i = 0; i < firsts.size(); ++i) firsts[i] = i;
  Tally tally = run_partitioned(firsts, config.worker_count, [&](std::size_t i, Tally& out) {
    const SignRow& odd = blocks[i];
    for (const SignRow& even : blocks) {
      if (config.prune_rowsum && !sum_admissible(odd.sum() + even.sum(), order)) {
        ++out.row_sum;
        continue;
      }
      ++out.examined;
      const SignRow row = interleave(odd, even);
      if (is_circulant_hadamard(row)) {
        out.hits.emplace_back(row.entries().begin(), row.entries().end());
      }
    }
  });
  return finish_report(order, SearchMode::rank2_constrained, std::move(tally), false, false,
                       false, start);
}

std::vector<SearchReport> rank2_campaign(const SearchConfig& config) {
  SearchConfig c = config;
  c.mode = SearchMode::rank2_constrained;
  validate_config(c);
  std::vector<SearchReport> out;
  for (auto n : c.orders) out.push_back(rank2_campaign_order(n, c));
  return out;
}

std::vector<SearchReport> run_search(const SearchConfig& config) {
  switch (config.mode) {
    case SearchMode::full: return full_search(config);
    case SearchMode::rank1_constrained: return rank1_campaign(config);
    case SearchMode::rank2_constrained: return rank2_campaign(config);
  }
  return {};
}

}  // namespace circhad
