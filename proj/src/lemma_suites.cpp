#include "circhad/lemma_suites.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "circhad/circulant.hpp"
#include "circhad/coding_bounds.hpp"
#include "circhad/decomposition.hpp"
#include "circhad/exact_rank.hpp"
#include "circhad/f2.hpp"
#include "circhad/search.hpp"

namespace circhad {

namespace {

struct Outcome {
  std::uint64_t instances = 0;
  std::string failure;

  void fail(std::string what) {
    if (failure.empty()) failure = std::move(what);
  }
};

template <typename Fn>
void for_each_row(std::size_t min_len, std::size_t max_len, std::size_t step, Fn&& fn) {
  for (std::size_t n = min_len; n <= max_len; n += step) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      fn(SignRow::from_mask(mask, n));
    }
  }
}

std::vector<SignRow> order4_hadamard() { return reference_search(4); }

Outcome suite_circulant() {
  Outcome o;
  for_each_row(1, 12, 1, [&](const SignRow& r) {
    ++o.instances;
    const Circulant c = circm(r);
    const bool via_product =
        multiply(c, transpose(c)) ==
        identity_circulant(r.size()).scaled(static_cast<long>(r.size()));
    if (via_product != is_circulant_hadamard(r)) o.fail("disagreement on " + r.to_string());
  });
  return o;
}

Outcome suite_rank_gram() {
  Outcome o;
  for_each_row(1, 8, 1, [&](const SignRow& r) {
    ++o.instances;
    if (!check_rank_gram_equality(circm(r))) o.fail("rank(AA^T) != rank(A) for " + r.to_string());
  });
  return o;
}

Outcome suite_rank1() {
  Outcome o;
  for_each_row(2, 12, 2, [&](const SignRow& r) {
    ++o.instances;
    const bool structural = rank1_structure(r) != Rank1Class::not_rank1;
    if (structural != (rank(circm(r)).rank == 1)) o.fail("classification mismatch " + r.to_string());
  });
  return o;
}

Outcome suite_rank2() {
  Outcome o;
  for (std::size_t n = 6; n <= 12; n += 2) {
    for (const auto& r : rank2_rows(n)) {
      if (r.sum() == 0) continue;
      ++o.instances;
      const auto d = rank2_coefficients(r);
      if (!d || d->a + d->b != 1) o.fail("a + b != 1 for " + r.to_string());
    }
  }
  return o;
}

Outcome suite_coefficients() {
  Outcome o;
  for (int hk : {-1, 1}) {
    for (int hl : {-1, 1}) {
      for (int hm : {-1, 1}) {
        ++o.instances;
        const auto s = solve_affine_coefficients(hk, hl, hm);
        using Kind = AffineCoefficientSolution::Kind;
        const bool all_equal = hk == hl && hl == hm;
        const bool ok =
            s.kind == Kind::none || (s.kind == Kind::one_parameter && all_equal) ||
            (s.kind == Kind::unique && ((s.a == 0 && s.b == 1) || (s.a == 1 && s.b == 0)));
        if (!ok) o.fail("pattern (" + std::to_string(hk) + "," + std::to_string(hl) + "," +
                        std::to_string(hm) + ")");
      }
    }
  }
  return o;
}

Outcome suite_consecutive() {
  Outcome o;
  for_each_row(1, 12, 1, [&](const SignRow& r) {
    ++o.instances;
    if (!consecutive_equal_rows_implies_constant(r)) o.fail(r.to_string());
  });
  return o;
}

Outcome suite_first_third() {
  Outcome o;
  for_each_row(6, 12, 2, [&](const SignRow& r) {
    ++o.instances;
    first_equals_third_sum(r);  // throws on a violation
  });
  return o;
}

Outcome suite_graphr() {
  Outcome o;
  for_each_row(4, 16, 2, [&](const SignRow& r) {
    ++o.instances;
    if (!graphr_rowwise_holds(r)) o.fail("row-wise identity fails for " + r.to_string());
    if (is_circulant_hadamard(r) && graphr_identity(r) != 0) o.fail("nonzero sum " + r.to_string());
  });
  return o;
}

Outcome suite_misscase() {
  Outcome o;
  for (const auto& r : order4_hadamard()) {
    ++o.instances;
    const auto m = misscase_check(r);
    if (m.product != 0 || m.sum_of_squares != 4) o.fail(r.to_string());
    const auto reg = regularity_profile(r);
    if (!reg.consistent) o.fail("row counts inconsistent for " + r.to_string());
  }
  return o;
}

Outcome suite_projection() {
  Outcome o;
  for (const auto& r : order4_hadamard()) {
    ++o.instances;
    const auto p = projection_check(r);
    const auto m = mod2_symmetric_orthogonal(r);
    if (!p.k1_is_projection || !p.k2_is_projection) o.fail("K^2 != K for " + r.to_string());
    if (!m.k1_ok || !m.k2_ok) o.fail("mod-2 reduction fails for " + r.to_string());
  }
  return o;
}

Outcome suite_macwilliams() {
  Outcome o;
  for (std::size_t order = 2; order <= 20; ++order) {
    ++o.instances;
    const auto s = macwilliams_survey(order);
    const std::size_t expected = order == 2 ? 2 : 1;
    if (s.count != expected) o.fail("order " + std::to_string(order));
    if (order > 2 && (s.witnesses.empty() || s.witnesses[0] != F2Circulant::identity(order))) {
      o.fail("order " + std::to_string(order) + " witness is not the identity");
    }
  }
  return o;
}

Outcome suite_plotkin() {
  Outcome o;
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned d = 2; d <= m; d += 2) {
      const auto bound = plotkin_bound(m, d);
      if (!bound) continue;
      ++o.instances;
      const auto code = max_code_bruteforce(m, d);
      if (static_cast<long>(code.size) > *bound) {
        o.fail("A2(" + std::to_string(m) + "," + std::to_string(d) + ") exceeds bound");
      }
    }
  }
  return o;
}

Outcome suite_monochromatic(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  for (unsigned p = 2; p <= 6; ++p) {
    const SignMatrix host = sylvester_hadamard(p);
    const std::size_t n = host.order();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int trial = 0; trial < 400; ++trial) {
      // Random row set, then every column on which those rows agree with the
      // first selected column's sign.
      std::vector<std::size_t> rows;
      const std::size_t a = 1 + pick(rng) % 4;
      while (rows.size() < a) {
        const auto r = pick(rng);
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
      }
      std::sort(rows.begin(), rows.end());
      const int sign = (rng() & 1U) ? 1 : -1;
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < n; ++c) {
        bool all = true;
        for (auto r : rows) all = all && host(r, c) == sign;
        if (all) cols.push_back(c);
      }
      if (cols.empty()) continue;
      ++o.instances;
      const auto check = monochromatic_bound_check(host, {rows, cols});
      if (!check.all_equal || !check.bound_holds) o.fail("order " + std::to_string(n));
    }
  }
  return o;
}

struct SuiteDef {
  std::string name;
  std::string anchor;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"circulant", "HH^T = nI <=> zero off-peak autocorrelation (n <= 12)",
       [](std::uint64_t) { return suite_circulant(); }},
      {"rank_gram", "rank(AA^T) = rank(A) (n <= 8)",
       [](std::uint64_t) { return suite_rank_gram(); }},
      {"rank1", "rank-1 +-1 circulants are constant or alternating (even n <= 12)",
       [](std::uint64_t) { return suite_rank1(); }},
      {"rank2", "rank-2 row 3 = a row 1 + b row 2 with a + b = 1 (6 <= n <= 12)",
       [](std::uint64_t) { return suite_rank2(); }},
      {"coefficients", "a + b = 1, h_k = a h_l + b h_m => equal or (a,b) in {(0,1),(1,0)}",
       [](std::uint64_t) { return suite_coefficients(); }},
      {"consecutive", "equal consecutive rows => constant row (n <= 12)",
       [](std::uint64_t) { return suite_consecutive(); }},
      {"first_third", "row 1 = row 3 => s in {0, 2k, -2k} (6 <= n <= 12)",
       [](std::uint64_t) { return suite_first_third(); }},
      {"graphr", "<R1,Rj> + <S1,Sj> = <T1,T(2j-1)> (even n <= 16)",
       [](std::uint64_t) { return suite_graphr(); }},
      {"misscase", "lambda1 lambda2 = 0, lambda1^2 + lambda2^2 = n, regular counts (n = 4)",
       [](std::uint64_t) { return suite_misscase(); }},
      {"projection", "K1, K2 idempotent; mod-2 symmetric orthogonal (n = 4)",
       [](std::uint64_t) { return suite_projection(); }},
      {"macwilliams", "circulant symmetric orthogonal over F2 is I (orders 3..20; 2 at order 2)",
       [](std::uint64_t) { return suite_macwilliams(); }},
      {"plotkin", "A2(m,d) <= 2 floor(d/(2d-m)) (m <= 12)",
       [](std::uint64_t) { return suite_plotkin(); }},
      {"monochromatic", "constant a x b block of a Hadamard matrix has ab <= n",
       [](std::uint64_t seed) { return suite_monochromatic(seed); }},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& lemma_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_lemma_suite(std::string_view name, std::uint64_t seed) {
  for (const auto& s : suites()) {
    if (s.name != name) continue;
    SuiteResult r{s.name, s.anchor, 0, false, {}};
    try {
      Outcome o = s.run(seed);
      r.instances = o.instances;
      r.passed = o.failure.empty();
      r.detail = std::move(o.failure);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    return r;
  }
  throw std::invalid_argument("unknown lemma suite '" + std::string(name) + "'");
}

}  // namespace circhad
