#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "circhad/sign_row.hpp"

namespace circhad {

enum class SearchMode { full, rank1_constrained, rank2_constrained };

std::string_view to_string(SearchMode mode);
/// Throws std::invalid_argument for an unknown name.
SearchMode parse_search_mode(std::string_view name);

inline constexpr std::size_t kFullSearchMaxOrder = 32;
inline constexpr std::size_t kRank1MaxBlock = 40;
inline constexpr std::size_t kRank2MaxBlock = 24;

struct SearchConfig {
  std::vector<std::size_t> orders;
  SearchMode mode = SearchMode::full;
  /// Full mode only: fix the first entry to -1 and keep rows that are
  /// minimal among their rotations and negated rotations.
  bool symmetry_reduction = true;
  /// Complete rows must have sum +-sqrt(n).
  bool prune_rowsum = true;
  /// Full mode only: drop prefixes whose partial autocorrelation can no
  /// longer reach zero for some shift.
  bool prune_paf_prefix = true;
  unsigned worker_count = 1;
};

/// Rule names used as keys of SearchReport::pruned_by_rule.
inline constexpr std::string_view kRuleRowSum = "row_sum";
inline constexpr std::string_view kRulePafPrefix = "paf_prefix";
inline constexpr std::string_view kRuleSymmetry = "symmetry";

struct SearchReport {
  std::size_t order = 0;
  SearchMode mode = SearchMode::full;
  std::uint64_t candidates_examined = 0;
  /// Every circulant Hadamard first row found, sorted.
  std::vector<SignRow> hits;
  /// One representative per rotation/negation class, sorted.
  std::vector<SignRow> canonical_hits;
  std::map<std::string, std::uint64_t, std::less<>> pruned_by_rule;
  std::chrono::milliseconds elapsed{0};
};

/// Lexicographically smallest row (with -1 < +1) among the n rotations of
/// `row` and of its negation.
SignRow canonicalize(const SignRow& row);

/// All distinct rotations of the row and of its negation, sorted.
std::vector<SignRow> symmetry_orbit(const SignRow& row);

/// n = 1, or n = 4 h^2 with h odd: the only orders where a circulant
/// Hadamard row of this length is not ruled out by the row-count argument.
bool order_admissible(std::size_t n);

/// Throws ResourceLimit when an order exceeds the cap of the configured
/// mode, std::invalid_argument for orders the mode cannot handle.
void validate_config(const SearchConfig& config);

std::vector<SearchReport> full_search(const SearchConfig& config);
SearchReport full_search_order(std::size_t order, const SearchConfig& config);

/// Unpruned enumeration of all 2^n rows. Throws ResourceLimit for n > 24.
std::vector<SignRow> reference_search(std::size_t order);

/// E1 or E2 fixed to each rank-1 sign pattern of order n/2, the other block
/// free over all 2^(n/2) rows.
std::vector<SearchReport> rank1_campaign(const SearchConfig& config);
SearchReport rank1_campaign_order(std::size_t order, const SearchConfig& config);

/// All sign rows of length k whose circulant has exact rank 2, sorted.
std::vector<SignRow> rank2_rows(std::size_t k);

/// Both blocks drawn from rank2_rows(n/2).
std::vector<SearchReport> rank2_campaign(const SearchConfig& config);
SearchReport rank2_campaign_order(std::size_t order, const SearchConfig& config);

/// Dispatches on config.mode.
std::vector<SearchReport> run_search(const SearchConfig& config);

}  // namespace circhad
